#include "fibperm/tiling.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace fibperm {

Tiling::Tiling(std::vector<int> tiles) : tiles_(std::move(tiles)) {
    for (int t : tiles_)
        if (t < 1) throw std::invalid_argument("Tiling: tile lengths must be >= 1");
}

int Tiling::total() const { return std::accumulate(tiles_.begin(), tiles_.end(), 0); }

std::string Tiling::str() const {
    if (tiles_.empty()) return "e";
    std::string out;
    for (size_t i = 0; i < tiles_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(tiles_[i]);
    }
    return out;
}

std::string Tiling::picture() const {
    std::string out;
    for (size_t i = 0; i < tiles_.size(); ++i) {
        if (i) out += ' ';
        out.append(static_cast<size_t>(tiles_[i]), '#');
    }
    return out;
}

Tiling Tiling::parse(std::string_view text) {
    if (text.empty() || text == "e") return Tiling{};
    std::vector<int> tiles;
    size_t start = 0;
    while (true) {
        size_t comma = text.find(',', start);
        auto token = text.substr(start, comma == std::string_view::npos ? text.size() - start
                                                                        : comma - start);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw std::invalid_argument("Tiling: bad length '" + std::string(token) + "'");
        tiles.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Tiling(std::move(tiles));
}

TilingConstraint TilingConstraint::none() { return {Kind::none, 0, 0, 0}; }
TilingConstraint TilingConstraint::max_len(int b) { return {Kind::max_len, b, 0, 0}; }
TilingConstraint TilingConstraint::last_s_unbounded(int s, int t) {
    return {Kind::last_s_unbounded, s, t, 0};
}
TilingConstraint TilingConstraint::ends_free(int a, int c, int maxlen) {
    return {Kind::ends_free, a, c, maxlen};
}
TilingConstraint TilingConstraint::long_tile_rule(int b) { return {Kind::long_tile, b, 0, 0}; }
TilingConstraint TilingConstraint::domino_square_with_domino() { return {Kind::dominoes, 0, 0, 0}; }
TilingConstraint TilingConstraint::rightmost_ge2(int b) { return {Kind::rightmost_ge2, b, 0, 0}; }

std::string TilingConstraint::describe() const {
    switch (kind_) {
        case Kind::none: return "no constraint";
        case Kind::max_len: return "all tiles have length <= " + std::to_string(p_);
        case Kind::last_s_unbounded:
            return "all tiles except the rightmost " + std::to_string(p_) +
                   " have length <= " + std::to_string(q_);
        case Kind::ends_free:
            return "all tiles except the leftmost " + std::to_string(p_) + " and rightmost " +
                   std::to_string(q_) + " have length <= " + std::to_string(r_);
        case Kind::long_tile:
            return "at most one tile longer than " + std::to_string(p_) +
                   ", at most one tile right of it, that tile of length 1 or 2";
        case Kind::dominoes: return "tiles of length 1 or 2 with at least one of length 2";
        case Kind::rightmost_ge2:
            return "rightmost tile has length >= 2, all others length <= " + std::to_string(p_);
    }
    return "";
}

std::string TilingConstraint::violation(const Tiling& t) const {
    const auto& tiles = t.tiles();
    const int m = t.count();
    switch (kind_) {
        case Kind::none: return "";
        case Kind::max_len:
            for (int i = 0; i < m; ++i)
                if (tiles[static_cast<size_t>(i)] > p_)
                    return "tile " + std::to_string(i + 1) + " has length " +
                           std::to_string(tiles[static_cast<size_t>(i)]) + " > " + std::to_string(p_);
            return "";
        case Kind::last_s_unbounded:
            for (int i = 0; i < m - p_; ++i)
                if (tiles[static_cast<size_t>(i)] > q_)
                    return "tile " + std::to_string(i + 1) + " is not among the rightmost " +
                           std::to_string(p_) + " and has length > " + std::to_string(q_);
            return "";
        case Kind::ends_free:
            for (int i = p_; i < m - q_; ++i)
                if (tiles[static_cast<size_t>(i)] > r_)
                    return "tile " + std::to_string(i + 1) + " is interior and has length > " +
                           std::to_string(r_);
            return "";
        case Kind::long_tile: {
            int long_at = -1;
            for (int i = 0; i < m; ++i) {
                if (tiles[static_cast<size_t>(i)] > p_) {
                    if (long_at >= 0) return "more than one tile is longer than " + std::to_string(p_);
                    long_at = i;
                }
            }
            if (long_at >= 0) {
                if (m - 1 - long_at > 1) return "more than one tile right of the long tile";
                if (long_at == m - 2 && tiles[static_cast<size_t>(m - 1)] > 2)
                    return "tile right of the long tile has length > 2";
            }
            return "";
        }
        case Kind::dominoes: {
            bool has_two = false;
            for (int len : tiles) {
                if (len > 2) return "tile of length " + std::to_string(len) + " > 2";
                if (len == 2) has_two = true;
            }
            if (!has_two) return "no tile of length 2";
            return "";
        }
        case Kind::rightmost_ge2: {
            if (tiles.empty()) return "empty tiling has no rightmost tile of length >= 2";
            if (tiles.back() < 2) return "rightmost tile has length < 2";
            for (int i = 0; i + 1 < m; ++i)
                if (tiles[static_cast<size_t>(i)] > p_)
                    return "non-rightmost tile " + std::to_string(i + 1) + " has length > " +
                           std::to_string(p_);
            return "";
        }
    }
    return "";
}

bool TilingConstraint::admits(const Tiling& t) const { return violation(t).empty(); }

std::vector<Tiling> enumerate_tilings(int n, const TilingConstraint& c) {
    if (n < 0) throw std::domain_error("enumerate_tilings: negative board length");
    std::vector<Tiling> out;
    std::vector<int> tiles;
    auto step = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            Tiling t(tiles);
            if (c.admits(t)) out.push_back(std::move(t));
            return;
        }
        for (int len = 1; len <= remaining; ++len) {
            tiles.push_back(len);
            self(self, remaining - len);
            tiles.pop_back();
        }
    };
    step(step, n);
    return out;
}

} // namespace fibperm
