#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fibperm {

// All counting is exact; n! overflows 64 bits already at n = 21.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt factorial(long long n);

// Binomial coefficient; zero outside 0 <= k <= n. Requires n >= 0.
BigInt binomial(long long n, long long k);

// base^exp with exp >= 0; pow_int(0, 0) == 1.
BigInt pow_int(const BigInt& base, long long exp);

// Division that must be exact; throws std::domain_error on a remainder.
BigInt exact_div(const BigInt& num, const BigInt& den);

} // namespace fibperm
