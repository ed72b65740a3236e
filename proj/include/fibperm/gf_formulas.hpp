#pragma once

#include <span>

#include "fibperm/families.hpp"
#include "fibperm/gf_matrix.hpp"
#include "fibperm/rational_gf.hpp"

namespace fibperm {

/// 1 - x - x^2 - ... - x^k  (k >= 0; k = 0 gives the constant 1).
Polynomial fib_family_den(int k);

/// Sum_n F_{k,n} x^n = x / (1 - x - ... - x^k).
RationalGF kgen_fib_gf(int k);

/// Sum_n |S_n(132, 213, tau_r)| x^n, built as the determinant of the m x m
/// matrix with first column (1-x)/(1-2x+x^{d_i}), unit diagonal below the top
/// row, and superdiagonal -x^{d_i}/(1-2x+x^{d_i}), where d_i = r_{i-1} - r_i.
RationalGF tau_gf(const RSequence& r);
GFMatrix tau_gf_matrix(const RSequence& r); // the matrix itself, for direct inspection

/// Sum_n |S_n(123, 132, gamma_{a,b,c})| x^n assembled from the recurrences;
/// parameter combinations with b = 0 and a >= 1 have no defining recurrence
/// and are rejected.
RationalGF gamma_gf(int a, int b, int c);

/// Sum_n |S_n(132, 2341, omega_k)| x^n for k >= 3.
RationalGF omega_gf(int k);

/// Sum_n |S_n(132, 3241, mu_{a,b})| x^n for b >= 1.
RationalGF mu_gf(int a, int b);

/// Sum_n C(n+1, k) x^n = x^{max(k-1,0)} / (1-x)^{k+1}.
RationalGF binomial_shift_gf(int k);

/// Sum_n F_{n+k} x^n = (F_{k-1} x + F_k) / (1 - x - x^2) for k >= 0.
RationalGF fib_shift_gf(int k);

/// The generating function of the sequence defined by seeds b_0..b_{N-1} and
/// b_n = sum_j coeffs[j-1] * b_{n-j} for n >= N.
RationalGF recurrence_to_gf(std::span<const BigInt> coeffs, std::span<const BigInt> seeds);

/// Sum_n |S_n(R^k_{a_1..a_l})| x^n: factorial seeds below k, then the
/// constant-coefficient recurrence with coefficients k - a_j - eta_j.
RationalGF restriction_gf(const RestrictionSpec& spec);

/// Given A(x) = sum a_m x^m, returns sum_n n!/(n-k)! a_{n-k} x^n, i.e. the
/// series transform matching k-fold pattern extension.
RationalGF extension_gf(const RationalGF& base, int k);

} // namespace fibperm
