#pragma once

#include <vector>

#include "fibperm/permutation.hpp"

namespace fibperm {

/// Strictly decreasing index sequence r_0 > r_1 > ... > r_m = 1 with m >= 1.
/// Determines a permutation of length r_0 - 1 built from increasing runs.
class RSequence {
public:
    explicit RSequence(std::vector<int> r); // throws naming the violated constraint

    const std::vector<int>& entries() const { return r_; }
    int m() const { return static_cast<int>(r_.size()) - 1; }
    int perm_length() const { return r_.front() - 1; }

private:
    std::vector<int> r_;
};

/// Concatenation of the increasing runs r_j, r_j + 1, ..., r_{j-1} - 1 for
/// j = 1..m. These are exactly the permutations avoiding both 132 and 213.
Permutation tau_perm(const RSequence& r);

/// Inverse of tau_perm on {132,213}-avoiders; throws naming the offending
/// pattern when pi contains 132 or 213.
RSequence tau_decompose(const Permutation& pi);

// alpha(s,t): ascending run s+1..s+t+1 followed by the descent s..1.
RSequence alpha_rseq(int s, int t);
Permutation alpha_perm(int s, int t);

// beta(a,b,c): requires a+c >= 1 and b >= 1.
RSequence beta_rseq(int a, int b, int c);
Permutation beta_perm(int a, int b, int c);

// gamma(a,b,c): length a+b+c+1; the leading descent, the block b+c..c+1,
// then b+c+1, then the final descent c..1.
Permutation gamma_perm(int a, int b, int c);

// omega(k) for k >= 3: k, k-1, ..., 4, 2, 1, 3; omega(3) = 213.
Permutation omega_perm(int k);

// mu(a,b): descent b+a..b+1 followed by the ascent 1..b; requires a+b >= 1.
Permutation mu_perm(int a, int b);

/// All permutations of length n+1 whose deletion of the maximum yields alpha
/// (alpha of length n); there are exactly n+1 of them. Sorted output.
std::vector<Permutation> extend(const Permutation& alpha);

/// E^k(R): k-fold extension of every pattern in R, deduplicated. E^0(R) = R.
PatternSet extension_set(const PatternSet& r, int k);

/// Parameters (k; a_1..a_l) with 1 <= l <= k, 1 <= a_i <= k, and
/// a_1..a_{l-1} pairwise distinct (a_l may repeat an earlier value).
class RestrictionSpec {
public:
    RestrictionSpec(int k, std::vector<int> a);

    int k() const { return k_; }
    int l() const { return static_cast<int>(a_.size()); }
    const std::vector<int>& a() const { return a_; }

private:
    int k_;
    std::vector<int> a_;
};

/// All sigma in S_k that either agree with a_1..a_l at every position, or
/// agree on a prefix of length i < l and then drop below a_{i+1}.
PatternSet restriction_set(const RestrictionSpec& spec);

} // namespace fibperm
