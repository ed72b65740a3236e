#include "fibperm/rational_gf.hpp"

#include <stdexcept>

namespace fibperm {

RationalGF::RationalGF(Polynomial num) : num_(std::move(num)), den_(Polynomial::constant(1)) {}

RationalGF::RationalGF(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

RationalGF RationalGF::constant(BigInt c) { return RationalGF(Polynomial::constant(std::move(c))); }

void RationalGF::normalize() {
    if (den_.is_zero()) throw std::domain_error("RationalGF: zero denominator");
    if (den_.at(0) == 0)
        throw std::domain_error("RationalGF: denominator has zero constant term (not series-expandable)");
    BigInt g = boost::multiprecision::gcd(num_.content(), den_.content());
    if (g > 1) {
        num_ = num_.divided_by_int(g);
        den_ = den_.divided_by_int(g);
    }
    if (den_.at(0) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalGF RationalGF::operator-() const {
    RationalGF r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalGF RationalGF::operator+(const RationalGF& o) const {
    return RationalGF(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalGF RationalGF::operator-(const RationalGF& o) const {
    return RationalGF(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalGF RationalGF::operator*(const RationalGF& o) const {
    return RationalGF(num_ * o.num_, den_ * o.den_);
}

RationalGF RationalGF::operator/(const RationalGF& o) const {
    if (o.is_zero()) throw std::domain_error("RationalGF: division by zero");
    return RationalGF(num_ * o.den_, den_ * o.num_); // ctor rejects den(0) == 0
}

bool RationalGF::operator==(const RationalGF& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

std::vector<BigInt> RationalGF::series(int upto) const {
    if (upto < 0) throw std::domain_error("series: negative order");
    const BigInt d0 = den_.at(0);
    std::vector<BigRational> c(static_cast<size_t>(upto) + 1);
    const int dd = den_.degree();
    for (int n = 0; n <= upto; ++n) {
        BigRational acc = num_.at(n);
        for (int i = 1; i <= dd && i <= n; ++i)
            acc -= BigRational(den_.at(i)) * c[static_cast<size_t>(n - i)];
        c[static_cast<size_t>(n)] = acc / d0;
    }
    std::vector<BigInt> out(static_cast<size_t>(upto) + 1);
    for (int n = 0; n <= upto; ++n) {
        const auto& q = c[static_cast<size_t>(n)];
        if (boost::multiprecision::denominator(q) != 1)
            throw std::domain_error("series: non-integer coefficient at index " + std::to_string(n));
        out[static_cast<size_t>(n)] = boost::multiprecision::numerator(q);
    }
    return out;
}

BigInt RationalGF::series_at(int n) const { return series(n).back(); }

RationalGF RationalGF::derivative() const {
    return RationalGF(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::string RationalGF::str() const {
    if (den_ == Polynomial::constant(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {
std::string coeff_list(const Polynomial& p) {
    std::string out = "(";
    const auto& c = p.coeffs();
    if (c.empty()) out += "0";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) out += ",";
        out += c[i].str();
    }
    return out + ")";
}
} // namespace

std::string RationalGF::coeff_form() const { return coeff_list(num_) + "/" + coeff_list(den_); }

std::vector<BigInt> series_coeffs(const RationalGF& g, int upto) { return g.series(upto); }

} // namespace fibperm
