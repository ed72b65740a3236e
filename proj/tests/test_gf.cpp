#include <random>
#include <stdexcept>

#include "doctest.h"
#include "fibperm/gf_matrix.hpp"
#include "fibperm/rational_gf.hpp"

using namespace fibperm;

namespace {

const Polynomial kOne = Polynomial::constant(1);
const Polynomial kOneMinusX{1, -1};

// Denominators get a unit constant term so every series stays integral.
RationalGF random_gf(std::mt19937& rng) {
    auto small_poly = [&rng](bool unit_const) {
        std::vector<BigInt> c;
        const int deg = static_cast<int>(rng() % 4);
        for (int i = 0; i <= deg; ++i)
            c.push_back(static_cast<int>(rng() % 7) - 3);
        if (unit_const) c[0] = (rng() % 2) ? 1 : -1;
        return Polynomial(std::move(c));
    };
    return RationalGF(small_poly(false), small_poly(true));
}

} // namespace

TEST_CASE("polynomial basics") {
    const Polynomial p{1, -2, 0, 1};
    CHECK(p.degree() == 3);
    CHECK(p.at(1) == -2);
    CHECK(p.at(7) == 0);
    CHECK(p.str() == "1 - 2x + x^3");
    CHECK((Polynomial{0, 0}).is_zero());
    CHECK((kOneMinusX * kOneMinusX).str() == "1 - 2x + x^2");
    CHECK((Polynomial{2, 4}).content() == 2);
    CHECK(Polynomial{1, 2, 3}.derivative() == Polynomial{2, 6});
}

TEST_CASE("rational normal form") {
    const RationalGF g(Polynomial{2, 2}, Polynomial{-2, 2});
    CHECK(g.num() == Polynomial{-1, -1}); // reduced by content, sign moved off the denominator
    CHECK(g.den() == Polynomial{1, -1});
    CHECK_THROWS_AS(RationalGF(kOne, Polynomial{}), std::domain_error);
    CHECK_THROWS_AS(RationalGF(kOne, Polynomial{0, 1}), std::domain_error);
}

TEST_CASE("field arithmetic") {
    const RationalGF a(kOne, kOneMinusX);
    const RationalGF b(Polynomial{0, 1}, kOneMinusX);
    CHECK(a + b == RationalGF(Polynomial{1, 1}, kOneMinusX));
    CHECK(a - a == RationalGF{});
    CHECK_THROWS_AS(a / RationalGF{}, std::domain_error);
    CHECK_THROWS_AS(a / b, std::domain_error); // 1/x is not a power series
}

TEST_CASE("series extraction") {
    const RationalGF fib(Polynomial{0, 1}, Polynomial{1, -1, -1});
    const auto c = fib.series(8);
    CHECK(c == std::vector<BigInt>{0, 1, 1, 2, 3, 5, 8, 13, 21});
    CHECK(RationalGF(kOne, kOneMinusX).series(4) == std::vector<BigInt>{1, 1, 1, 1, 1});
    // (2x+3)/(1-x-x^2) generates F(n+4)
    const RationalGF shifted(Polynomial{3, 2}, Polynomial{1, -1, -1});
    CHECK(shifted.series(8) == std::vector<BigInt>{3, 5, 8, 13, 21, 34, 55, 89, 144});
    CHECK_THROWS_AS(RationalGF(kOne, Polynomial{2, 1}).series(3), std::domain_error);
}

TEST_CASE("series respects the ring operations") {
    std::mt19937 rng(987654);
    const int order = 12;
    for (int trial = 0; trial < 60; ++trial) {
        const RationalGF a = random_gf(rng);
        const RationalGF b = random_gf(rng);
        const auto sa = a.series(order);
        const auto sb = b.series(order);

        const auto sum = (a + b).series(order);
        const auto prod = (a * b).series(order);
        for (int n = 0; n <= order; ++n) {
            CHECK(sum[static_cast<size_t>(n)] ==
                  sa[static_cast<size_t>(n)] + sb[static_cast<size_t>(n)]);
            BigInt conv = 0;
            for (int i = 0; i <= n; ++i)
                conv += sa[static_cast<size_t>(i)] * sb[static_cast<size_t>(n - i)];
            CHECK(prod[static_cast<size_t>(n)] == conv);
        }

        CHECK((a + b) - b == a);
        CHECK((a * b) == (b * a));
        if (!b.is_zero() && b.num().at(0) != 0) CHECK((a * b) / b == a);
    }
}

TEST_CASE("series of a product is the convolution") {
    const RationalGF fib(Polynomial{0, 1}, Polynomial{1, -1, -1});
    const RationalGF geo(kOne, kOneMinusX);
    const auto partial = (fib * geo).series(10); // partial sums of Fibonacci
    const auto f = fib.series(10);
    BigInt acc = 0;
    for (int n = 0; n <= 10; ++n) {
        acc += f[static_cast<size_t>(n)];
        CHECK(partial[static_cast<size_t>(n)] == acc);
    }
}

TEST_CASE("determinants") {
    const RationalGF g(Polynomial{0, 0, 1}, Polynomial{1, -2, 0, 0, 1});
    GFMatrix one(1);
    one.at(0, 0) = g;
    CHECK(one.det() == g);

    // [[f, -g], [1, 1]] has determinant f + g
    const RationalGF f(kOneMinusX, Polynomial{1, -2, 0, 0, 1});
    GFMatrix two(2);
    two.at(0, 0) = f;
    two.at(0, 1) = -g;
    two.at(1, 0) = RationalGF::one();
    two.at(1, 1) = RationalGF::one();
    CHECK(two.det() == f + g);

    GFMatrix three(3);
    // permutation-style matrix checks the sign bookkeeping
    three.at(0, 1) = RationalGF::one();
    three.at(1, 0) = RationalGF::one();
    three.at(2, 2) = RationalGF::constant(5);
    CHECK(three.det() == RationalGF::constant(-5));
}
