#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fibperm/bigint.hpp"
#include "fibperm/registry.hpp"

namespace fibperm {

struct VerifyOptions {
    int nmax = 60;      // upper end of the closed-form vs. series comparison
    int oracle_max = 9; // upper end of the brute-force comparison
};

struct VerifyRow {
    long long n = 0;
    BigInt closed;
    std::optional<BigInt> oracle; // brute-force count, when n <= oracle_max
    std::optional<BigInt> series; // GF coefficient or reference-route value
    bool ok = true;
};

/// Cross-check of one formula: closed form against the brute-force oracle on
/// [max(valid_from,1), oracle_max] and against the generating-function (or
/// reference) route on [valid_from, nmax].
struct VerifyReport {
    std::string id;
    long long n_lo = 0, n_hi = 0;
    bool used_gf = true; // false when the reference route stood in for a GF
    bool pass = true;
    std::string first_discrepancy;
    std::vector<VerifyRow> rows;
};

VerifyReport verify_formula(const Formula& f, const VerifyOptions& opt = {});
VerifyReport verify_formula(const std::string& id, const VerifyOptions& opt = {});
std::vector<VerifyReport> verify_all(const VerifyOptions& opt = {});

} // namespace fibperm
