#pragma once

#include <vector>

#include "fibperm/bigint.hpp"
#include "fibperm/permutation.hpp"

namespace fibperm {

/// All permutations of {1..n} avoiding every pattern in r, in lexicographic
/// order. The search abandons any prefix that already contains a pattern,
/// which is sound because containment is monotone under prefix extension.
std::vector<Permutation> enumerate_avoiders(int n, const PatternSet& r);

/// |S_n(r)| by the same pruned search, without materializing the list.
BigInt count_avoiders(int n, const PatternSet& r);

} // namespace fibperm
