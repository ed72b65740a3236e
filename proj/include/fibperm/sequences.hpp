#pragma once

#include <string_view>
#include <vector>

#include "fibperm/bigint.hpp"
#include "fibperm/families.hpp"

namespace fibperm {

/// k-generalized Fibonacci number: F_{k,n} = 0 for n <= 0, F_{k,1} = 1, and
/// each later term is the sum of the previous k terms. Requires k >= 1.
BigInt kgen_fib(int k, long long n);

// F_{2,n}; zero for n <= 0.
BigInt fibonacci(long long n);
// 0, 1, 1, then sum of the previous three; equals kgen_fib(3, n).
BigInt tribonacci(long long n);
// p_0 = 0, p_1 = 1, p_n = 2 p_{n-1} + p_{n-2}; zero for n < 0.
BigInt pell(long long n);
// C(2n, n)/(n+1); requires n >= 0.
BigInt catalan(long long n);

/// Lookup by name: fibonacci, tribonacci, pell, catalan.
BigInt named_sequence(std::string_view name, long long n);

/// Recurrence coefficients k - a_j - eta_j of the restriction-set count,
/// where eta_j counts earlier entries of a that exceed a_j.
std::vector<BigInt> restriction_recurrence_coeffs(const RestrictionSpec& spec);

/// |S_n(R^k_{a_1..a_l})|: n! for n < k, then the constant-coefficient linear
/// recurrence with the coefficients above. Zero for n < 0.
BigInt recurrence_count(const RestrictionSpec& spec, long long n);

} // namespace fibperm
