#include <set>
#include <stdexcept>

#include "doctest.h"
#include "fibperm/registry.hpp"
#include "fibperm/sequences.hpp"
#include "fibperm/verify.hpp"

using namespace fibperm;

TEST_CASE("registry lookups and stated values") {
    CHECK(closed_count("SS-Eq1", 10) == 89);
    CHECK(closed_count("omega4", 2) == 2);
    CHECK(closed_count("gamma-022", 3) == 4);
    CHECK(closed_count("mu13", 1) == 1);
    CHECK(closed_count("r-pell", 5) == 34);
    CHECK_THROWS_AS(closed_count("gamma-022", 2), std::domain_error); // below valid_from
    CHECK_THROWS_AS(closed_count("no-such-id", 3), std::domain_error);
}

TEST_CASE("registry is well formed") {
    std::set<std::string> ids;
    for (const auto& f : formula_registry()) {
        CHECK(ids.insert(f.id).second); // unique ids
        CHECK_FALSE(f.statement.empty());
        CHECK(static_cast<bool>(f.pattern_set));
        CHECK(static_cast<bool>(f.closed));
        CHECK((f.has_gf() || static_cast<bool>(f.reference)));
        CHECK_FALSE(f.pattern_set().empty());
    }
    CHECK(ids.size() >= 60);
    CHECK(registry_table().find("SS-Eq1") != std::string::npos);
}

TEST_CASE("closed forms agree with both routes on a spot-check range") {
    VerifyOptions opt;
    opt.nmax = 16;
    opt.oracle_max = 6;
    for (const char* id : {"SS-Eq1", "cor33-k4", "alpha-2-1", "beta-1-2-1", "gamma-0b1-2",
                           "gamma-122", "omega5", "mu04", "west7-k1", "cat-132-k1",
                           "r-powerfact-k4-a4", "r-fib-k4"}) {
        const auto report = verify_formula(id, opt);
        INFO(report.id, ": ", report.first_discrepancy);
        CHECK(report.pass);
    }
}

TEST_CASE("equinumerous classes stay matched to n = 40") {
    for (int n = 1; n <= 40; ++n) CHECK(closed_count("mu13", n) == closed_count("omega4", n));
}

TEST_CASE("extension scaling identity") {
    // the k-step class count is the falling factorial times the base count at n-k
    auto fall = [](int n, int k) {
        BigInt r = 1;
        for (int i = 0; i < k; ++i) r *= n - i;
        return r;
    };
    for (int k = 1; k <= 2; ++k)
        for (int n = std::max(k, 1); n <= 12; ++n)
            CHECK(closed_count("ext-ss-k" + std::to_string(k), n) ==
                  fall(n, k) * fibonacci(n - k + 1));
    for (int n = 1; n <= 12; ++n)
        CHECK(closed_count("west3-k1", n) ==
              fall(n, 1) * (n == 1 ? BigInt(1) : fibonacci(2 * (n - 1) - 1)));
    // the same scaling for three extension steps, straight from the formulas
    for (int n = 3; n <= 12; ++n) {
        const BigInt base = fibonacci(n - 3 + 1);
        CHECK(fall(n, 3) * base == BigInt(n) * (n - 1) * (n - 2) * fibonacci(n - 2));
    }
}
