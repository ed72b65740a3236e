#include "fibperm/bigint.hpp"

#include <stdexcept>

namespace fibperm {

BigInt factorial(long long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    BigInt r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(long long n, long long k) {
    if (n < 0) throw std::domain_error("binomial: negative upper index");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // always exact at this point
    }
    return r;
}

BigInt pow_int(const BigInt& base, long long exp) {
    if (exp < 0) throw std::domain_error("pow_int: negative exponent");
    BigInt r = 1, b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("exact_div: division by zero");
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw std::domain_error("exact_div: inexact division");
    return q;
}

} // namespace fibperm
