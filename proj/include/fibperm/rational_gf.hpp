#pragma once

#include <string>
#include <vector>

#include "fibperm/polynomial.hpp"

namespace fibperm {

/// Ratio of integer polynomials, expandable as a power series: the
/// denominator is nonzero with a nonzero constant term. Normal form divides
/// out the gcd of the two contents and makes the denominator's constant term
/// positive; full polynomial gcd reduction is deliberately not performed, so
/// equality is decided by cross-multiplication.
class RationalGF {
public:
    RationalGF() : num_{}, den_{Polynomial::constant(1)} {} // zero
    explicit RationalGF(Polynomial num);
    RationalGF(Polynomial num, Polynomial den);
    static RationalGF constant(BigInt c);
    static RationalGF one() { return constant(1); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalGF operator-() const;
    RationalGF operator+(const RationalGF& o) const;
    RationalGF operator-(const RationalGF& o) const;
    RationalGF operator*(const RationalGF& o) const;
    RationalGF operator/(const RationalGF& o) const; // throws on zero divisor or inexpandable result

    bool operator==(const RationalGF& o) const; // num_a*den_b == num_b*den_a

    /// Power-series coefficients c_0..c_upto via the linear recurrence induced
    /// by the denominator. Throws if any coefficient is not an integer.
    std::vector<BigInt> series(int upto) const;
    BigInt series_at(int n) const;

    RationalGF derivative() const;

    std::string str() const;        // human-readable "(num)/(den)"
    std::string coeff_form() const; // "(c0,c1,...)/(d0,d1,...)", lowest degree first

private:
    void normalize();
    Polynomial num_, den_;
};

/// Coefficient extraction per the series contract; thin wrapper kept for
/// call-site symmetry with the free arithmetic below.
std::vector<BigInt> series_coeffs(const RationalGF& g, int upto);

} // namespace fibperm
