#pragma once

#include <string_view>

#include "fibperm/families.hpp"
#include "fibperm/permutation.hpp"
#include "fibperm/tiling.hpp"

namespace fibperm {

/// Tiling of a length-n board whose tile sizes are the successive differences
/// of the r-sequence of pi. Defined on {132,213}-avoiders; throws naming the
/// offending pattern otherwise.
Tiling perm_to_tiling(const Permutation& pi);

/// Inverse map: fill tiles right to left, each left to right in increasing
/// order with the smallest numbers still available. Lands in S_n(132, 213).
Permutation tiling_to_perm(const Tiling& t);

/// The five parametrized tiling bijections. T44, T47 and T410 take the block
/// bound b (>= 2); T54 and T58 ignore it.
///   T44:  board n,   tiles <= b                      <-> S_n(123, 132, gamma(0,b,0))
///   T47:  board n+1, rightmost >= 2, others <= b     <-> S_n(123, 132, gamma(0,b,1))
///   T410: board n,   long-tile rule at b             <-> S_n(123, 132, gamma(0,b,2))
///   T54:  board n+1, tiles in {1,2}, some 2          <-> S_n(132, 213, 2341)
///   T58:  board n+1, tiles in {1,2}, some 2          <-> S_n(132, 3241, mu(0,3))
enum class ThemedMap { T44, T47, T410, T54, T58 };

ThemedMap themed_map_from_string(std::string_view name);
std::string_view themed_map_name(ThemedMap m);

/// Board length for permutations of length n (n or n+1).
int themed_board_length(ThemedMap m, int n);

/// The domain constraint of the map for bound b.
TilingConstraint themed_domain(ThemedMap m, int b);

/// The avoider class the map lands in, for bound b.
PatternSet themed_class(ThemedMap m, int b);

/// Applies the map; throws naming the violated rule for tilings outside the
/// domain.
Permutation themed_bijection(ThemedMap m, const Tiling& t, int b = 0);

/// The unique preimage tiling; throws for permutations outside the class.
Tiling themed_bijection_inverse(ThemedMap m, const Permutation& pi, int b = 0);

} // namespace fibperm
