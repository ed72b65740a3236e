#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fibperm/bigint.hpp"
#include "fibperm/permutation.hpp"
#include "fibperm/rational_gf.hpp"

namespace fibperm {

/// One closed-form enumeration result: a pattern set, the closed form with
/// its validity threshold, and an independent second route (a rational
/// generating function where one exists, otherwise a reference recurrence).
struct Formula {
    std::string id;
    std::string statement; // human-readable closed form, e.g. "F(n+2) - 1"
    std::vector<int> params;
    int valid_from; // smallest n for which the closed form is asserted

    std::function<PatternSet()> pattern_set;
    std::function<BigInt(long long)> closed; // throws std::domain_error below valid_from
    std::function<RationalGF()> gf;          // null when the class has no rational GF
    std::function<BigInt(long long)> reference; // independent route used when gf is null

    bool has_gf() const { return static_cast<bool>(gf); }
};

const std::vector<Formula>& formula_registry();

const Formula& find_formula(const std::string& id); // throws std::domain_error if unknown

BigInt closed_count(const std::string& id, long long n);

/// Machine-readable registry dump: id, params, pattern set, valid_from, statement.
std::string registry_table();

} // namespace fibperm
