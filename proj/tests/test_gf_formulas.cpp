#include <array>
#include <stdexcept>

#include "doctest.h"
#include "fibperm/enumeration.hpp"
#include "fibperm/gf_formulas.hpp"
#include "fibperm/sequences.hpp"

using namespace fibperm;

namespace {

const Polynomial kOne = Polynomial::constant(1);
const Polynomial kOneMinusX{1, -1};

Polynomial pow_poly(const Polynomial& p, int e) {
    Polynomial acc = kOne;
    for (int i = 0; i < e; ++i) acc = acc * p;
    return acc;
}

RationalGF R(Polynomial num, Polynomial den) { return RationalGF(std::move(num), std::move(den)); }

// The closed alpha-class expression:
// ((1-x)^s + x^{t+1} sum_{i=0}^{s-1} (1-x)^i x^{s-i-1}) / ((1-x)^s (1-x-...-x^t))
RationalGF alpha_gf_display(int s, int t) {
    Polynomial num = pow_poly(kOneMinusX, s);
    Polynomial tail;
    for (int i = 0; i <= s - 1; ++i)
        tail = tail + pow_poly(kOneMinusX, i) * Polynomial::monomial(1, s - i - 1);
    num = num + Polynomial::monomial(1, t + 1) * tail;
    return R(std::move(num), pow_poly(kOneMinusX, s) * fib_family_den(t));
}

std::vector<BigInt> brute_counts(const PatternSet& r, int upto) {
    std::vector<BigInt> out;
    for (int n = 0; n <= upto; ++n) out.push_back(count_avoiders(n, r));
    return out;
}

} // namespace

TEST_CASE("determinant route for tau classes") {
    CHECK(tau_gf(RSequence({5, 2, 1})) == R({1, -1, 0, 1}, kOneMinusX * fib_family_den(2)));
    for (int k = 2; k <= 6; ++k)
        CHECK(tau_gf(RSequence({k + 1, 1})) == R(kOne, fib_family_den(k - 1)));
    CHECK(tau_gf(RSequence({5, 1})) == R(kOne, fib_family_den(3)));

    // determinant series against brute-force counts
    const std::vector<std::vector<int>> rs = {{6, 3, 2, 1}, {5, 2, 1}, {6, 4, 1}};
    for (const auto& rv : rs) {
        const RSequence r(rv);
        const auto series = tau_gf(r).series(8);
        PatternSet cls{Permutation::parse("132"), Permutation::parse("213"), tau_perm(r)};
        CHECK(series == brute_counts(cls, 8));
    }
}

TEST_CASE("alpha and beta class generating functions") {
    for (int s = 1; s <= 4; ++s)
        for (int t = 1; t <= 4; ++t) CHECK(tau_gf(alpha_rseq(s, t)) == alpha_gf_display(s, t));
    // the beta display is the alpha display at s = a+c, t = b-1
    for (int a = 0; a <= 3; ++a)
        for (int b = 2; b <= 4; ++b)
            for (int c = 0; c <= 3; ++c) {
                if (a + c < 1) continue;
                CHECK(tau_gf(beta_rseq(a, b, c)) == alpha_gf_display(a + c, b - 1));
            }
}

TEST_CASE("gamma recurrences reproduce the displayed forms") {
    for (int b = 1; b <= 5; ++b) CHECK(gamma_gf(0, b, 0) == R(kOne, fib_family_den(b)));

    for (int b = 1; b <= 5; ++b) {
        const Polynomial den = Polynomial{1, -2} + Polynomial::monomial(1, b + 1);
        CHECK(gamma_gf(0, b, 1) == RationalGF(kOne) + R(Polynomial::x(), den));
    }

    CHECK(gamma_gf(0, 2, 2) == R({1, -1, 0, 1, 1, 1}, kOneMinusX * fib_family_den(2)));
    CHECK(gamma_gf(0, 2, 2) == R({3, 1, 1}, kOne) + R({-2, 4, 1}, {1, -2, 0, 1}));

    for (int b = 3; b <= 5; ++b) {
        const Polynomial den = Polynomial{1, -2} + Polynomial::monomial(1, b + 1);
        CHECK(gamma_gf(0, b, 2) == R({1, 1, 1}, kOne) + R({0, 0, 1, 2}, den));
    }

    for (int b = 2; b <= 5; ++b) {
        Polynomial num = Polynomial{1, -2, 1} + Polynomial::monomial(1, b + 1);
        CHECK(gamma_gf(1, b, 1) ==
              R(std::move(num), pow_poly(kOneMinusX, 2) * fib_family_den(b)));
        // the three-part split shown alongside it
        const Polynomial d2 = Polynomial{1, -2} + Polynomial::monomial(1, b + 1);
        const Polynomial d3 = Polynomial{1, -3, 2} + Polynomial::monomial(1, b + 1) -
                              Polynomial::monomial(1, b + 2);
        CHECK(gamma_gf(1, b, 1) ==
              R(kOne, kOneMinusX) + R({0, 0, 1}, d2) + R({0, 0, 0, 1}, d3));
    }

    const Polynomial fib2 = fib_family_den(2);
    const Polynomial fib3 = fib_family_den(3);
    CHECK(gamma_gf(1, 2, 2) ==
          R({-4, -2, -1}, kOne) + R({5, -12, 4, 6}, pow_poly(kOneMinusX, 2) * fib2));
    CHECK(gamma_gf(2, 2, 2) ==
          R({-25, -16, -11, -5, -2}, kOne) +
              R({26, -61, 14, 30}, pow_poly(kOneMinusX, 2) * fib2));
    CHECK(gamma_gf(3, 2, 2) ==
          R({-93, -75, -53, -36, -20, -9, -2}, kOne) +
              R({94, -206, 15, 121}, pow_poly(kOneMinusX, 2) * fib2));
    CHECK(gamma_gf(1, 3, 2) ==
          R({-2, -2, -1}, kOne) + R({3, -6, 0, 1, 5}, pow_poly(kOneMinusX, 2) * fib3));
    CHECK(gamma_gf(2, 3, 2) ==
          R({-16, -12, -7, -5, -2}, kOne) +
              R({17, -38, 4, 8, 18}, pow_poly(kOneMinusX, 2) * fib3));
    CHECK(gamma_gf(3, 3, 2) ==
          R({-55, -46, -38, -24, -16, -9, -2}, kOne) +
              R({56, -121, 11, 2, 76}, pow_poly(kOneMinusX, 2) * fib3));
}

TEST_CASE("gamma series match brute-force counts") {
    const std::vector<std::array<int, 3>> params = {{0, 0, 2}, {0, 3, 1}, {0, 2, 2},
                                                    {1, 2, 2}, {2, 2, 1}, {1, 3, 0}};
    for (auto [a, b, c] : params) {
        PatternSet cls{Permutation::parse("123"), Permutation::parse("132"), gamma_perm(a, b, c)};
        CHECK(gamma_gf(a, b, c).series(8) == brute_counts(cls, 8));
    }
}

TEST_CASE("gamma rejects the parameters with no recurrence") {
    CHECK_THROWS_AS(gamma_gf(1, 0, 1), std::domain_error);
    CHECK_THROWS_AS(gamma_gf(2, 0, 0), std::domain_error);
    CHECK_THROWS_AS(gamma_gf(-1, 1, 0), std::invalid_argument);
}

TEST_CASE("omega recurrence reproduces the displayed forms") {
    CHECK(omega_gf(3) == R({1, -1, 0, 1}, kOneMinusX * fib_family_den(2)));
    CHECK(omega_gf(4) == R({1, -3, 3, 1, -1}, fib_family_den(2) * pow_poly(kOneMinusX, 3)));
    CHECK(omega_gf(5) ==
          R({1, -4, 6, -2, -1, 3, 0, -1}, fib_family_den(2) * pow_poly(kOneMinusX, 4)));
    CHECK(omega_gf(6) ==
          R({1, -5, 10, -8, 1, 5, 1, 1, -2}, fib_family_den(2) * pow_poly(kOneMinusX, 5)));
    for (int k = 3; k <= 5; ++k) {
        PatternSet cls{Permutation::parse("132"), Permutation::parse("2341"), omega_perm(k)};
        CHECK(omega_gf(k).series(8) == brute_counts(cls, 8));
    }
}

TEST_CASE("mu recurrence reproduces the displayed forms") {
    CHECK(mu_gf(0, 2) == R(kOne, kOneMinusX));
    CHECK(mu_gf(0, 3) == RationalGF::one() + R({0, 1}, kOneMinusX * fib_family_den(2)));
    CHECK(mu_gf(0, 4) ==
          RationalGF::one() + R({0, 1, -1, 0, 1}, kOneMinusX * fib_family_den(2) * fib_family_den(3)));
    CHECK(mu_gf(0, 5) ==
          RationalGF::one() + R({0, 1, -2, 0, 2, 2, -1, -1},
                                kOneMinusX * fib_family_den(2) * fib_family_den(3) * fib_family_den(4)));
    CHECK(mu_gf(1, 3) == R({1, -3, 3, 1, -1}, pow_poly(kOneMinusX, 3) * fib_family_den(2)));
    CHECK(mu_gf(2, 3) ==
          R({1, -5, 10, -8, 1, 4, -2}, pow_poly(kOneMinusX, 5) * fib_family_den(2)));
    CHECK(mu_gf(1, 4) ==
          R({1, -4, 5, 0, -1, -1, 0, 1}, pow_poly(kOneMinusX, 3) * fib_family_den(2) * fib_family_den(3)));
    CHECK_THROWS_AS(mu_gf(1, 0), std::domain_error);
    for (int a = 0; a <= 1; ++a)
        for (int b = 2; b <= 4; ++b) {
            PatternSet cls{Permutation::parse("132"), Permutation::parse("3241"), mu_perm(a, b)};
            CHECK(mu_gf(a, b).series(8) == brute_counts(cls, 8));
        }
}

TEST_CASE("the omega(4) and mu(1,3) classes are equinumerous") {
    CHECK(omega_gf(4).series(60) == mu_gf(1, 3).series(60));
}

TEST_CASE("utility generating functions") {
    for (int k = 0; k <= 5; ++k) {
        const auto c = binomial_shift_gf(k).series(12);
        for (int n = 0; n <= 12; ++n) CHECK(c[static_cast<size_t>(n)] == binomial(n + 1, k));
    }
    for (int k = 0; k <= 6; ++k) {
        const auto c = fib_shift_gf(k).series(8);
        for (int n = 0; n <= 8; ++n) CHECK(c[static_cast<size_t>(n)] == fibonacci(n + k));
    }
    for (int k = 1; k <= 5; ++k) {
        const auto c = kgen_fib_gf(k).series(18);
        for (int n = 0; n <= 18; ++n) CHECK(c[static_cast<size_t>(n)] == kgen_fib(k, n));
    }
}

TEST_CASE("recurrence-to-GF packaging") {
    // Fibonacci with seeds 0, 1
    const std::vector<BigInt> coeffs{1, 1};
    const std::vector<BigInt> seeds{0, 1};
    CHECK(recurrence_to_gf(coeffs, seeds) == kgen_fib_gf(2));

    const RestrictionSpec specs[] = {RestrictionSpec(3, {2}), RestrictionSpec(3, {2, 2}),
                                     RestrictionSpec(4, {2, 3}), RestrictionSpec(4, {3, 3}),
                                     RestrictionSpec(5, {4, 4})};
    for (const auto& spec : specs) {
        const auto c = restriction_gf(spec).series(20);
        for (int n = 0; n <= 20; ++n) CHECK(c[static_cast<size_t>(n)] == recurrence_count(spec, n));
    }
}

TEST_CASE("extension transform") {
    const RationalGF base = tau_gf(RSequence({4, 1})); // 1/(1-x-x^2)
    for (int k = 0; k <= 3; ++k) {
        const auto c = extension_gf(base, k).series(12);
        const auto b = base.series(12);
        for (int n = k; n <= 12; ++n) {
            BigInt expect = b[static_cast<size_t>(n - k)];
            for (int i = 0; i < k; ++i) expect *= n - i;
            CHECK(c[static_cast<size_t>(n)] == expect);
        }
    }
}
