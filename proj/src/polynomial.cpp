#include "fibperm/polynomial.hpp"

#include <stdexcept>

namespace fibperm {

Polynomial::Polynomial(std::initializer_list<BigInt> coeffs_low_first)
    : c_(coeffs_low_first) {
    trim();
}

Polynomial::Polynomial(std::vector<BigInt> coeffs_low_first) : c_(std::move(coeffs_low_first)) {
    trim();
}

Polynomial Polynomial::constant(BigInt c) {
    Polynomial p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

Polynomial Polynomial::monomial(BigInt c, int degree) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    Polynomial p;
    if (c != 0) {
        p.c_.assign(static_cast<size_t>(degree) + 1, 0);
        p.c_.back() = std::move(c);
    }
    return p;
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt Polynomial::at(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<size_t>(i)];
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& c : p.c_) c = -c;
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial p;
    p.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < p.c_.size(); ++i) {
        if (i < c_.size()) p.c_[i] += c_[i];
        if (i < o.c_.size()) p.c_[i] += o.c_[i];
    }
    p.trim();
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial{};
    Polynomial p;
    p.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) p.c_[i + j] += c_[i] * o.c_[j];
    p.trim();
    return p;
}

Polynomial Polynomial::operator*(const BigInt& k) const {
    Polynomial p = *this;
    for (auto& c : p.c_) c *= k;
    p.trim();
    return p;
}

BigInt Polynomial::content() const {
    BigInt g = 0;
    for (const auto& c : c_) g = boost::multiprecision::gcd(g, c);
    return g < 0 ? BigInt(-g) : g;
}

Polynomial Polynomial::divided_by_int(const BigInt& k) const {
    Polynomial p = *this;
    for (auto& c : p.c_) c = exact_div(c, k);
    return p;
}

Polynomial Polynomial::derivative() const {
    Polynomial p;
    if (c_.size() <= 1) return p;
    p.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) p.c_[i - 1] = c_[i] * static_cast<long>(i);
    p.trim();
    return p;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        const BigInt& c = c_[i];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        const bool unit = (mag == 1);
        if (i == 0) {
            out += mag.str();
        } else {
            if (!unit) out += mag.str();
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace fibperm
