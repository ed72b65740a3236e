#include "fibperm/bijections.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>

namespace fibperm {

namespace {

const Permutation P132({1, 3, 2});
const Permutation P213({2, 1, 3});
const Permutation P123({1, 2, 3});
const Permutation P2341({2, 3, 4, 1});
const Permutation P3241({3, 2, 4, 1});

// Values lo..lo+m-1 in the order lo+m-2, ..., lo+1, lo, lo+m-1.
void append_des_then_max(std::vector<int>& out, int lo, int m) {
    for (int v = lo + m - 2; v >= lo; --v) out.push_back(v);
    out.push_back(lo + m - 1);
}

// Values lo..lo+m-1 ascending.
void append_ascending(std::vector<int>& out, int lo, int m) {
    for (int v = lo; v < lo + m; ++v) out.push_back(v);
}

// Splits pi into consecutive-value blocks, each arranged des-then-max, with
// block values decreasing left to right. Returns the block lengths.
std::vector<int> decompose_des_then_max(const Permutation& pi) {
    const auto& v = pi.values();
    const int n = pi.size();
    std::vector<int> lens;
    int pos = 0;
    int hi = n;
    while (pos < n) {
        int p = -1;
        for (int i = pos; i < n; ++i)
            if (v[static_cast<size_t>(i)] == hi) {
                p = i;
                break;
            }
        if (p < 0) throw std::invalid_argument("block decomposition: expected value not found");
        const int len = p - pos + 1;
        const int lo = hi - len + 1;
        std::vector<int> expect;
        append_des_then_max(expect, lo, len);
        for (int i = 0; i < len; ++i)
            if (v[static_cast<size_t>(pos + i)] != expect[static_cast<size_t>(i)])
                throw std::invalid_argument("block decomposition: block is not in des-then-max order");
        lens.push_back(len);
        hi = lo - 1;
        pos = p + 1;
    }
    return lens;
}

// Maximal runs of consecutive increasing values (v, v+1, ...), left to right.
std::vector<int> ascending_run_lengths(std::span<const int> v) {
    std::vector<int> lens;
    size_t i = 0;
    while (i < v.size()) {
        size_t j = i;
        while (j + 1 < v.size() && v[j + 1] == v[j] + 1) ++j;
        lens.push_back(static_cast<int>(j - i + 1));
        i = j + 1;
    }
    return lens;
}

void check_domain(ThemedMap m, const TilingConstraint& c, const Tiling& t) {
    const std::string why = c.violation(t);
    if (!why.empty())
        throw std::invalid_argument(std::string(themed_map_name(m)) + ": tiling outside domain: " + why);
}

void check_class(ThemedMap m, const PatternSet& cls, const Permutation& pi) {
    for (const auto& sigma : cls.patterns())
        if (contains(pi, sigma))
            throw std::invalid_argument(std::string(themed_map_name(m)) +
                                        ": permutation contains forbidden pattern " + sigma.str());
}

} // namespace

Tiling perm_to_tiling(const Permutation& pi) {
    if (pi.empty()) return Tiling{};
    const RSequence r = tau_decompose(pi); // rejects 132/213 containment by name
    const auto& rs = r.entries();
    std::vector<int> tiles;
    tiles.reserve(rs.size() - 1);
    for (size_t j = 1; j < rs.size(); ++j) tiles.push_back(rs[j - 1] - rs[j]);
    return Tiling(std::move(tiles));
}

Permutation tiling_to_perm(const Tiling& t) {
    const auto& tiles = t.tiles();
    std::vector<int> lo(tiles.size());
    int next = 1;
    for (size_t i = tiles.size(); i-- > 0;) {
        lo[i] = next;
        next += tiles[i];
    }
    std::vector<int> out;
    out.reserve(static_cast<size_t>(t.total()));
    for (size_t i = 0; i < tiles.size(); ++i) append_ascending(out, lo[i], tiles[i]);
    return Permutation(std::move(out));
}

ThemedMap themed_map_from_string(std::string_view name) {
    if (name == "T44") return ThemedMap::T44;
    if (name == "T47") return ThemedMap::T47;
    if (name == "T410") return ThemedMap::T410;
    if (name == "T54") return ThemedMap::T54;
    if (name == "T58") return ThemedMap::T58;
    throw std::invalid_argument("unknown bijection '" + std::string(name) +
                                "' (expected T44, T47, T410, T54 or T58)");
}

std::string_view themed_map_name(ThemedMap m) {
    switch (m) {
        case ThemedMap::T44: return "T44";
        case ThemedMap::T47: return "T47";
        case ThemedMap::T410: return "T410";
        case ThemedMap::T54: return "T54";
        case ThemedMap::T58: return "T58";
    }
    return "";
}

int themed_board_length(ThemedMap m, int n) {
    switch (m) {
        case ThemedMap::T44:
        case ThemedMap::T410: return n;
        case ThemedMap::T47:
        case ThemedMap::T54:
        case ThemedMap::T58: return n + 1;
    }
    return n;
}

namespace {

int require_block_bound(ThemedMap m, int b) {
    if (b < 2)
        throw std::invalid_argument(std::string(themed_map_name(m)) +
                                    ": requires block bound b >= 2");
    return b;
}

} // namespace

TilingConstraint themed_domain(ThemedMap m, int b) {
    switch (m) {
        case ThemedMap::T44: return TilingConstraint::max_len(require_block_bound(m, b));
        case ThemedMap::T47: return TilingConstraint::rightmost_ge2(require_block_bound(m, b));
        case ThemedMap::T410: return TilingConstraint::long_tile_rule(require_block_bound(m, b));
        case ThemedMap::T54:
        case ThemedMap::T58: return TilingConstraint::domino_square_with_domino();
    }
    throw std::logic_error("unreachable");
}

PatternSet themed_class(ThemedMap m, int b) {
    switch (m) {
        case ThemedMap::T44: return PatternSet{P123, P132, gamma_perm(0, require_block_bound(m, b), 0)};
        case ThemedMap::T47: return PatternSet{P123, P132, gamma_perm(0, require_block_bound(m, b), 1)};
        case ThemedMap::T410: return PatternSet{P123, P132, gamma_perm(0, require_block_bound(m, b), 2)};
        case ThemedMap::T54: return PatternSet{P132, P213, P2341};
        case ThemedMap::T58: return PatternSet{P132, P3241, P123};
    }
    throw std::logic_error("unreachable");
}

namespace {

Permutation apply_t44_style(const Tiling& t) {
    const auto& tiles = t.tiles();
    std::vector<int> lo(tiles.size());
    int next = 1;
    for (size_t i = tiles.size(); i-- > 0;) {
        lo[i] = next;
        next += tiles[i];
    }
    std::vector<int> out;
    out.reserve(static_cast<size_t>(t.total()));
    for (size_t i = 0; i < tiles.size(); ++i) append_des_then_max(out, lo[i], tiles[i]);
    return Permutation(std::move(out));
}

Permutation apply_t47(const Tiling& t) {
    const auto& tiles = t.tiles();
    const size_t r = tiles.size();
    std::vector<int> lo(r);
    int next = 1;
    // rightmost tile holds one value fewer than its length
    for (size_t i = r; i-- > 0;) {
        lo[i] = next;
        next += (i + 1 == r) ? tiles[i] - 1 : tiles[i];
    }
    std::vector<int> out;
    for (size_t i = 0; i < r; ++i)
        append_des_then_max(out, lo[i], (i + 1 == r) ? tiles[i] - 1 : tiles[i]);
    return Permutation(std::move(out));
}

Permutation apply_t54(const Tiling& t) {
    const auto& tiles = t.tiles();
    size_t j = tiles.size();
    for (size_t i = tiles.size(); i-- > 0;)
        if (tiles[i] == 2) {
            j = i;
            break;
        }
    const int q = static_cast<int>(tiles.size() - 1 - j); // unit tiles right of the marked domino
    std::vector<int> lo(j);
    int next = q + 2;
    for (size_t i = j; i-- > 0;) {
        lo[i] = next;
        next += tiles[i];
    }
    std::vector<int> out;
    for (size_t i = 0; i < j; ++i) append_ascending(out, lo[i], tiles[i]);
    out.push_back(1);
    append_ascending(out, 2, q);
    return Permutation(std::move(out));
}

Permutation apply_t58(const Tiling& t) {
    const auto& tiles = t.tiles();
    std::vector<int> out;
    if (tiles.back() == 2) {
        std::vector<int> lo(tiles.size() - 1);
        int next = 2;
        for (size_t i = tiles.size() - 1; i-- > 0;) {
            lo[i] = next;
            next += tiles[i];
        }
        for (size_t i = 0; i + 1 < tiles.size(); ++i) append_ascending(out, lo[i], tiles[i]);
        out.push_back(1);
    } else {
        size_t j = tiles.size();
        for (size_t i = tiles.size(); i-- > 0;)
            if (tiles[i] == 2) {
                j = i;
                break;
            }
        const int m = static_cast<int>(tiles.size() - 1 - j);
        std::vector<int> lo(j);
        int next = m + 2;
        for (size_t i = j; i-- > 0;) {
            lo[i] = next;
            next += tiles[i];
        }
        for (size_t i = 0; i < j; ++i) append_ascending(out, lo[i], tiles[i]);
        out.push_back(m); // the marked domino holds a single value
        for (int v = m - 1; v >= 1; --v) out.push_back(v);
        out.push_back(m + 1);
    }
    return Permutation(std::move(out));
}

} // namespace

Permutation themed_bijection(ThemedMap m, const Tiling& t, int b) {
    check_domain(m, themed_domain(m, b), t);
    switch (m) {
        case ThemedMap::T44:
        case ThemedMap::T410: return apply_t44_style(t);
        case ThemedMap::T47: return apply_t47(t);
        case ThemedMap::T54: return apply_t54(t);
        case ThemedMap::T58: return apply_t58(t);
    }
    throw std::logic_error("unreachable");
}

Tiling themed_bijection_inverse(ThemedMap m, const Permutation& pi, int b) {
    check_class(m, themed_class(m, b), pi);
    if (pi.empty())
        throw std::invalid_argument(std::string(themed_map_name(m)) +
                                    ": the empty permutation has no preimage tiling");
    const auto& v = pi.values();
    const int n = pi.size();
    Tiling result;
    switch (m) {
        case ThemedMap::T44:
        case ThemedMap::T410: {
            result = Tiling(decompose_des_then_max(pi));
            break;
        }
        case ThemedMap::T47: {
            auto lens = decompose_des_then_max(pi);
            lens.back() += 1; // the rightmost tile keeps one empty square
            result = Tiling(std::move(lens));
            break;
        }
        case ThemedMap::T54: {
            int p0 = -1;
            for (int i = 0; i < n; ++i)
                if (v[static_cast<size_t>(i)] == 1) {
                    p0 = i;
                    break;
                }
            for (int i = p0 + 1; i < n; ++i)
                if (v[static_cast<size_t>(i)] != i - p0 + 1)
                    throw std::invalid_argument("T54: suffix after 1 is not 2,3,...");
            auto lens = ascending_run_lengths(std::span<const int>(v.data(), static_cast<size_t>(p0)));
            lens.push_back(2);
            lens.insert(lens.end(), static_cast<size_t>(n - 1 - p0), 1);
            result = Tiling(std::move(lens));
            break;
        }
        case ThemedMap::T58: {
            if (v.back() == 1) {
                auto lens =
                    ascending_run_lengths(std::span<const int>(v.data(), static_cast<size_t>(n - 1)));
                lens.push_back(2);
                result = Tiling(std::move(lens));
            } else {
                const int mval = v.back() - 1;
                if (n < mval + 1)
                    throw std::invalid_argument("T58: tail is shorter than its final value requires");
                std::vector<int> expect_tail{mval};
                for (int w = mval - 1; w >= 1; --w) expect_tail.push_back(w);
                expect_tail.push_back(mval + 1);
                for (size_t i = 0; i < expect_tail.size(); ++i)
                    if (v[static_cast<size_t>(n) - expect_tail.size() + i] !=
                        expect_tail[i])
                        throw std::invalid_argument("T58: tail is not m, m-1, ..., 1, m+1");
                const size_t prefix_len = static_cast<size_t>(n) - expect_tail.size();
                auto lens = ascending_run_lengths(std::span<const int>(v.data(), prefix_len));
                lens.push_back(2);
                lens.insert(lens.end(), static_cast<size_t>(mval), 1);
                result = Tiling(std::move(lens));
            }
            break;
        }
    }
    if (themed_bijection(m, result, b) != pi)
        throw std::logic_error(std::string(themed_map_name(m)) +
                               ": reconstructed tiling does not map back (internal error)");
    return result;
}

} // namespace fibperm
