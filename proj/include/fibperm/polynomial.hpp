#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "fibperm/bigint.hpp"

namespace fibperm {

/// Dense integer polynomial; coeffs()[i] is the coefficient of x^i.
/// Normal form carries no trailing zeros (the zero polynomial is empty).
class Polynomial {
public:
    Polynomial() = default; // zero
    Polynomial(std::initializer_list<BigInt> coeffs_low_first);
    explicit Polynomial(std::vector<BigInt> coeffs_low_first);

    static Polynomial constant(BigInt c);
    static Polynomial monomial(BigInt c, int degree);
    static Polynomial x() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    BigInt at(int i) const;
    const std::vector<BigInt>& coeffs() const { return c_; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const BigInt& k) const;
    bool operator==(const Polynomial& o) const = default;

    BigInt content() const; // gcd of coefficient magnitudes; 0 for the zero polynomial
    Polynomial divided_by_int(const BigInt& k) const; // exact, throws otherwise
    Polynomial derivative() const;

    std::string str() const; // e.g. "1 - 2x + x^3"

private:
    void trim();
    std::vector<BigInt> c_;
};

} // namespace fibperm
