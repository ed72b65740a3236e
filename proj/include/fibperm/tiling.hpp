#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "fibperm/bigint.hpp"

namespace fibperm {

/// Ordered composition of a board into tiles of positive length.
class Tiling {
public:
    Tiling() = default; // the empty tiling of a length-0 board
    explicit Tiling(std::vector<int> tiles);

    const std::vector<int>& tiles() const { return tiles_; }
    int total() const;
    int count() const { return static_cast<int>(tiles_.size()); }
    bool empty() const { return tiles_.empty(); }

    std::string str() const; // comma-separated lengths, "e" when empty
    std::string picture() const; // boxes per tile, tiles separated by a space
    static Tiling parse(std::string_view text);

    friend auto operator<=>(const Tiling&, const Tiling&) = default;

private:
    std::vector<int> tiles_;
};

/// Decidable predicate on tilings. Each named rule mirrors one tiling domain
/// used by a bijection or counting statement in this library.
class TilingConstraint {
public:
    static TilingConstraint none();
    // every tile has length <= b
    static TilingConstraint max_len(int b);
    // all tiles except the rightmost s have length <= t
    static TilingConstraint last_s_unbounded(int s, int t);
    // all tiles except the leftmost a and rightmost c have length <= maxlen
    static TilingConstraint ends_free(int a, int c, int maxlen);
    // at most one tile longer than b; at most one tile to its right, of length 1 or 2
    static TilingConstraint long_tile_rule(int b);
    // every tile has length 1 or 2, and at least one has length 2
    static TilingConstraint domino_square_with_domino();
    // the rightmost tile has length >= 2, all others have length <= b
    static TilingConstraint rightmost_ge2(int b);

    bool admits(const Tiling& t) const;
    std::string describe() const;

    /// First rule the tiling violates, or the empty string if it is admitted.
    std::string violation(const Tiling& t) const;

private:
    enum class Kind { none, max_len, last_s_unbounded, ends_free, long_tile, dominoes, rightmost_ge2 };
    TilingConstraint(Kind kind, int p, int q, int r) : kind_(kind), p_(p), q_(q), r_(r) {}

    Kind kind_;
    int p_ = 0, q_ = 0, r_ = 0;
};

/// All tilings of a length-n board admitted by c, in lexicographic order of
/// the tile-length sequences. n = 0 yields the empty tiling iff c admits it.
std::vector<Tiling> enumerate_tilings(int n, const TilingConstraint& c);

} // namespace fibperm
