#include <stdexcept>

#include "doctest.h"
#include "fibperm/enumeration.hpp"
#include "fibperm/sequences.hpp"

using namespace fibperm;

TEST_CASE("k-generalized Fibonacci numbers") {
    for (int n = -3; n <= 20; ++n) CHECK(kgen_fib(2, n) == fibonacci(n));
    for (int k = 1; k <= 5; ++k) {
        CHECK(kgen_fib(k, 0) == 0);
        CHECK(kgen_fib(k, -4) == 0);
        CHECK(kgen_fib(k, 1) == 1);
    }
    CHECK(kgen_fib(3, 6) == 13);
    CHECK(kgen_fib(1, 9) == 1);
    CHECK_THROWS_AS(kgen_fib(0, 3), std::domain_error);
}

TEST_CASE("named sequences") {
    const BigInt trib[] = {0, 1, 1, 2, 4, 7, 13, 24, 44, 81, 149};
    for (int n = 0; n <= 10; ++n) {
        CHECK(tribonacci(n) == trib[n]);
        CHECK(tribonacci(n) == kgen_fib(3, n));
    }
    CHECK(pell(5) == 29);
    CHECK(pell(-1) == 0);
    CHECK(catalan(4) == 14);
    CHECK(named_sequence("fibonacci", 10) == 55);
    CHECK(named_sequence("pell", 6) == 70);
    CHECK_THROWS_AS(named_sequence("lucas", 3), std::invalid_argument);
    CHECK_THROWS_AS(catalan(-1), std::domain_error);

    // Catalan by the convolution recurrence agrees with the binomial form
    std::vector<BigInt> c{1};
    for (int m = 0; m <= 14; ++m) {
        CHECK(c.back() == catalan(m));
        BigInt next = 0;
        for (size_t i = 0; i < c.size(); ++i) next += c[i] * c[c.size() - 1 - i];
        c.push_back(next);
    }
}

TEST_CASE("exact helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(21) == BigInt("51090942171709440000"));
    CHECK(binomial(9, 4) == 126);
    CHECK(binomial(5, 9) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(pow_int(0, 0) == 1);
    CHECK(pow_int(3, 7) == 2187);
    CHECK_THROWS_AS(exact_div(BigInt(7), BigInt(2)), std::domain_error);
}

TEST_CASE("restriction-set recurrence") {
    // coefficients k - a_j - eta_j
    CHECK(restriction_recurrence_coeffs(RestrictionSpec(3, {2, 2})) == std::vector<BigInt>{1, 1});
    CHECK(restriction_recurrence_coeffs(RestrictionSpec(4, {2, 3})) == std::vector<BigInt>{2, 1});
    CHECK(restriction_recurrence_coeffs(RestrictionSpec(4, {3, 2})) == std::vector<BigInt>{1, 1});
    CHECK(restriction_recurrence_coeffs(RestrictionSpec(5, {2, 4, 3})) ==
          std::vector<BigInt>{3, 1, 1});

    const BigInt fib_start[] = {1, 2, 3, 5, 8};
    for (int n = 1; n <= 5; ++n)
        CHECK(recurrence_count(RestrictionSpec(3, {2, 2}), n) == fib_start[n - 1]);
    CHECK(recurrence_count(RestrictionSpec(4, {2, 3}), 4) == 14);
    CHECK(recurrence_count(RestrictionSpec(4, {2, 3}), 5) == 34);
    for (int n = 2; n <= 9; ++n) CHECK(recurrence_count(RestrictionSpec(3, {2}), n) == 2);
    CHECK(recurrence_count(RestrictionSpec(3, {2}), -1) == 0);

    for (int n = 1; n <= 8; ++n) {
        CHECK(recurrence_count(RestrictionSpec(4, {2, 3}), n) == pell(n) + pell(n - 2));
    }

    // recurrence route against the brute-force oracle
    const RestrictionSpec specs[] = {RestrictionSpec(3, {2}), RestrictionSpec(3, {2, 2}),
                                     RestrictionSpec(4, {2, 3}), RestrictionSpec(4, {3, 3})};
    for (const auto& spec : specs) {
        const PatternSet r = restriction_set(spec);
        for (int n = 0; n <= 7; ++n) CHECK(recurrence_count(spec, n) == count_avoiders(n, r));
    }
}
