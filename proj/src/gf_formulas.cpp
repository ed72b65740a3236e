#include "fibperm/gf_formulas.hpp"

#include <stdexcept>

#include "fibperm/sequences.hpp"

namespace fibperm {

namespace {

const RationalGF& x_gf() {
    static const RationalGF x(Polynomial::x());
    return x;
}

RationalGF x_pow(int e) { return RationalGF(Polynomial::monomial(1, e)); }

Polynomial one_minus_x() { return Polynomial{1, -1}; }

Polynomial one_minus_x_pow(int e) {
    Polynomial p = Polynomial::constant(1);
    for (int i = 0; i < e; ++i) p = p * one_minus_x();
    return p;
}

// (1-x)/(1-2x+x^i)
RationalGF run_head_gf(int i) {
    return RationalGF(one_minus_x(), Polynomial{1, -2} + Polynomial::monomial(1, i));
}

// x^i/(1-2x+x^i)
RationalGF run_tail_gf(int i) {
    return RationalGF(Polynomial::monomial(1, i), Polynomial{1, -2} + Polynomial::monomial(1, i));
}

} // namespace

Polynomial fib_family_den(int k) {
    if (k < 0) throw std::invalid_argument("fib_family_den: negative k");
    std::vector<BigInt> c(static_cast<size_t>(k) + 1, -1);
    c[0] = 1;
    return Polynomial(std::move(c));
}

RationalGF kgen_fib_gf(int k) {
    if (k < 1) throw std::domain_error("kgen_fib_gf: requires k >= 1");
    return RationalGF(Polynomial::x(), fib_family_den(k));
}

GFMatrix tau_gf_matrix(const RSequence& r) {
    const int m = r.m();
    const auto& rs = r.entries();
    GFMatrix mat(m);
    for (int i = 0; i < m; ++i) {
        const int d = rs[static_cast<size_t>(i)] - rs[static_cast<size_t>(i) + 1];
        mat.at(i, 0) = run_head_gf(d);
        if (i >= 1) mat.at(i, i) = RationalGF::one();
        if (i + 1 < m) mat.at(i, i + 1) = -run_tail_gf(d);
    }
    return mat;
}

RationalGF tau_gf(const RSequence& r) { return tau_gf_matrix(r).det(); }

namespace {

RationalGF gamma_gf_00c(int c) {
    if (c == 0) return RationalGF::one();
    RationalGF acc = RationalGF::one() + x_gf() * gamma_gf_00c(c - 1);
    for (int r = 2; r <= c + 1; ++r) acc = acc + x_pow(r) * gamma_gf_00c(c - r + 1);
    return acc;
}

} // namespace

RationalGF gamma_gf(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("gamma_gf: parameters must be >= 0");
    if (b == 0 && a >= 1)
        throw std::domain_error("gamma_gf: parameters (a >= 1, b = 0) have no defining recurrence");
    if (a == 0 && b == 0) return gamma_gf_00c(c);
    if (a == 0 && c == 0) return RationalGF(Polynomial::constant(1), fib_family_den(b));
    if (a == 0) {
        RationalGF num = RationalGF(one_minus_x()) + x_pow(b + 1) * gamma_gf_00c(c - 1);
        return num / RationalGF(one_minus_x() * fib_family_den(b));
    }
    RationalGF acc = RationalGF::one() + x_gf() * gamma_gf(a - 1, b, c);
    for (int r = 2; r <= a; ++r) acc = acc + x_pow(r) * gamma_gf(a - r + 1, b, c);
    acc = acc + (x_pow(a + 1) / RationalGF(one_minus_x())) * gamma_gf(0, b, c);
    return acc;
}

RationalGF omega_gf(int k) {
    if (k < 3) throw std::domain_error("omega_gf: requires k >= 3");
    if (k == 3) return RationalGF(Polynomial{1, -1, 0, 1}, one_minus_x() * fib_family_den(2));
    const RationalGF one = RationalGF::one();
    RationalGF acc = one + x_gf() * (omega_gf(k - 1) - one);
    for (int r = 2; r <= k - 2; ++r) acc = acc + x_pow(r) * (omega_gf(k - r + 1) - one);
    acc = acc + (x_pow(k - 1) / RationalGF(one_minus_x())) * (omega_gf(3) - one);
    return acc / RationalGF(one_minus_x());
}

RationalGF mu_gf(int a, int b) {
    if (a < 0) throw std::invalid_argument("mu_gf: requires a >= 0");
    if (b < 1) throw std::domain_error("mu_gf: b = 0 has no defining recurrence");
    if (a == 0) {
        if (b == 1) return RationalGF::one();
        return RationalGF::one() + x_gf() * mu_gf(0, b - 1) / RationalGF(fib_family_den(b - 1));
    }
    RationalGF num = RationalGF(Polynomial{1, -2}) + x_gf() * mu_gf(a - 1, b);
    return num / RationalGF(one_minus_x_pow(2));
}

RationalGF binomial_shift_gf(int k) {
    if (k < 0) throw std::domain_error("binomial_shift_gf: requires k >= 0");
    return RationalGF(Polynomial::monomial(1, k >= 1 ? k - 1 : 0), one_minus_x_pow(k + 1));
}

RationalGF fib_shift_gf(int k) {
    if (k < 0) throw std::domain_error("fib_shift_gf: requires k >= 0");
    const BigInt fk1 = (k == 0) ? BigInt(1) : fibonacci(k - 1); // F_{-1} = 1
    Polynomial num = Polynomial::monomial(fk1, 1) + Polynomial::constant(fibonacci(k));
    return RationalGF(std::move(num), fib_family_den(2));
}

RationalGF recurrence_to_gf(std::span<const BigInt> coeffs, std::span<const BigInt> seeds) {
    if (seeds.empty()) throw std::invalid_argument("recurrence_to_gf: needs at least one seed");
    std::vector<BigInt> den(coeffs.size() + 1);
    den[0] = 1;
    for (size_t j = 0; j < coeffs.size(); ++j) den[j + 1] = -coeffs[j];
    std::vector<BigInt> num(seeds.size());
    for (size_t n = 0; n < seeds.size(); ++n) {
        BigInt acc = seeds[n];
        for (size_t j = 1; j <= coeffs.size() && j <= n; ++j) acc -= coeffs[j - 1] * seeds[n - j];
        num[n] = std::move(acc);
    }
    return RationalGF(Polynomial(std::move(num)), Polynomial(std::move(den)));
}

RationalGF restriction_gf(const RestrictionSpec& spec) {
    const auto coeffs = restriction_recurrence_coeffs(spec);
    std::vector<BigInt> seeds(static_cast<size_t>(spec.k()));
    for (int n = 0; n < spec.k(); ++n) seeds[static_cast<size_t>(n)] = factorial(n);
    return recurrence_to_gf(coeffs, seeds);
}

RationalGF extension_gf(const RationalGF& base, int k) {
    if (k < 0) throw std::invalid_argument("extension_gf: requires k >= 0");
    RationalGF g = base;
    for (int i = 0; i < k; ++i) g = x_gf() * (x_gf() * g).derivative();
    return g;
}

} // namespace fibperm
