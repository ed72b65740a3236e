#include "fibperm/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace fibperm {

namespace {

std::vector<int> check_canonical(std::vector<int> values) {
    const int n = static_cast<int>(values.size());
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int v : values) {
        if (v < 1 || v > n)
            throw std::invalid_argument("Permutation: value " + std::to_string(v) +
                                        " outside 1.." + std::to_string(n));
        if (seen[static_cast<size_t>(v)])
            throw std::invalid_argument("Permutation: duplicate value " + std::to_string(v));
        seen[static_cast<size_t>(v)] = true;
    }
    return values;
}

int parse_int(std::string_view s) {
    int value = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument("Permutation: bad integer '" + std::string(s) + "'");
    return value;
}

} // namespace

Symmetry symmetry_from_string(std::string_view name) {
    if (name == "reverse") return Symmetry::reverse;
    if (name == "complement") return Symmetry::complement;
    if (name == "inverse") return Symmetry::inverse;
    if (name == "reverse_complement") return Symmetry::reverse_complement;
    throw std::invalid_argument("unknown symmetry '" + std::string(name) + "'");
}

Permutation::Permutation(std::vector<int> values) : values_(check_canonical(std::move(values))) {}

Permutation Permutation::standardize(std::span<const int> seq) {
    const size_t n = seq.size();
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return seq[a] < seq[b]; });
    std::vector<int> ranks(n);
    for (size_t rank = 0; rank < n; ++rank) {
        if (rank > 0 && seq[order[rank]] == seq[order[rank - 1]])
            throw std::invalid_argument("standardize: values are not pairwise distinct");
        ranks[order[rank]] = static_cast<int>(rank) + 1;
    }
    Permutation p;
    p.values_ = std::move(ranks);
    return p;
}

Permutation Permutation::reversed() const {
    Permutation p;
    p.values_.assign(values_.rbegin(), values_.rend());
    return p;
}

Permutation Permutation::complemented() const {
    Permutation p;
    p.values_.reserve(values_.size());
    const int n = size();
    for (int v : values_) p.values_.push_back(n + 1 - v);
    return p;
}

Permutation Permutation::inverted() const {
    Permutation p;
    p.values_.resize(values_.size());
    for (int i = 0; i < size(); ++i) p.values_[static_cast<size_t>(values_[static_cast<size_t>(i)]) - 1] = i + 1;
    return p;
}

Permutation Permutation::apply(Symmetry s) const {
    switch (s) {
        case Symmetry::reverse: return reversed();
        case Symmetry::complement: return complemented();
        case Symmetry::inverse: return inverted();
        case Symmetry::reverse_complement: return reversed().complemented();
    }
    throw std::logic_error("unreachable");
}

std::string Permutation::str() const {
    if (values_.empty()) return "e";
    std::string out;
    for (size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values_[i]);
    }
    return out;
}

Permutation Permutation::parse(std::string_view text) {
    if (text.empty() || text == "e") return Permutation{};
    std::vector<int> vals;
    if (text.find(',') != std::string_view::npos) {
        size_t start = 0;
        while (true) {
            size_t comma = text.find(',', start);
            if (comma == std::string_view::npos) {
                vals.push_back(parse_int(text.substr(start)));
                break;
            }
            vals.push_back(parse_int(text.substr(start, comma - start)));
            start = comma + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("Permutation: bad digit-form character in '" +
                                            std::string(text) + "'");
            vals.push_back(c - '0');
        }
    }
    return Permutation(std::move(vals));
}

PatternMatcher::PatternMatcher(Permutation sigma) : sigma_(std::move(sigma)) {
    const auto& s = sigma_.values();
    const size_t k = s.size();
    below_.assign(k, -1);
    above_.assign(k, -1);
    for (size_t j = 0; j < k; ++j) {
        for (size_t t = 0; t < j; ++t) {
            if (s[t] < s[j] && (below_[j] < 0 || s[static_cast<size_t>(below_[j])] < s[t]))
                below_[j] = static_cast<int>(t);
            if (s[t] > s[j] && (above_[j] < 0 || s[static_cast<size_t>(above_[j])] > s[t]))
                above_[j] = static_cast<int>(t);
        }
    }
}

bool PatternMatcher::search(std::span<const int> text, size_t j, int min_pos,
                            std::vector<int>& chosen, bool anchor_last) const {
    const size_t k = sigma_.values().size();
    if (j == k) return true;
    long long lo = std::numeric_limits<long long>::min();
    long long hi = std::numeric_limits<long long>::max();
    if (below_[j] >= 0) lo = text[static_cast<size_t>(chosen[static_cast<size_t>(below_[j])])];
    if (above_[j] >= 0) hi = text[static_cast<size_t>(chosen[static_cast<size_t>(above_[j])])];
    const bool last = (j == k - 1);
    size_t first = static_cast<size_t>(min_pos);
    size_t limit = text.size() - (k - 1 - j); // leave room for the remaining pattern elements
    if (anchor_last && last) first = std::max(first, text.size() - 1);
    for (size_t pos = first; pos < limit; ++pos) {
        const long long v = text[pos];
        if (v <= lo || v >= hi) continue;
        chosen[j] = static_cast<int>(pos);
        if (search(text, j + 1, static_cast<int>(pos) + 1, chosen, anchor_last)) return true;
    }
    return false;
}

bool PatternMatcher::in(std::span<const int> text) const {
    const size_t k = sigma_.values().size();
    if (k == 0) return true;
    if (text.size() < k) return false;
    std::vector<int> chosen(k, -1);
    return search(text, 0, 0, chosen, false);
}

bool PatternMatcher::ending_at_back(std::span<const int> text) const {
    const size_t k = sigma_.values().size();
    if (k == 0 || text.size() < k) return false;
    std::vector<int> chosen(k, -1);
    return search(text, 0, 0, chosen, true);
}

bool contains(const Permutation& pi, const Permutation& sigma) {
    return PatternMatcher(sigma).in(pi.values());
}

PatternSet::PatternSet(std::initializer_list<Permutation> patterns)
    : PatternSet(std::vector<Permutation>(patterns)) {}

PatternSet::PatternSet(std::vector<Permutation> patterns) : patterns_(std::move(patterns)) {
    std::sort(patterns_.begin(), patterns_.end());
    patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

bool PatternSet::member(const Permutation& p) const {
    return std::binary_search(patterns_.begin(), patterns_.end(), p);
}

std::string PatternSet::str() const {
    std::string out;
    for (size_t i = 0; i < patterns_.size(); ++i) {
        if (i) out += ',';
        const auto& vals = patterns_[i].values();
        const bool compact = std::all_of(vals.begin(), vals.end(), [](int v) { return v <= 9; });
        if (vals.empty()) {
            out += 'e';
        } else if (compact) {
            for (int v : vals) out += static_cast<char>('0' + v);
        } else {
            out += '[';
            for (size_t j = 0; j < vals.size(); ++j) {
                if (j) out += ';';
                out += std::to_string(vals[j]);
            }
            out += ']';
        }
    }
    return out;
}

PatternSet PatternSet::parse(std::string_view text) {
    std::vector<Permutation> patterns;
    size_t start = 0;
    while (start < text.size()) {
        if (text[start] == '[') {
            size_t close = text.find(']', start);
            if (close == std::string_view::npos)
                throw std::invalid_argument("pattern set: unterminated '['");
            std::vector<int> vals;
            size_t p = start + 1;
            while (p < close) {
                size_t semi = text.find(';', p);
                if (semi == std::string_view::npos || semi > close) semi = close;
                vals.push_back(parse_int(text.substr(p, semi - p)));
                p = semi + 1;
            }
            // bracket form admits any distinct integers; only relative order matters
            patterns.push_back(Permutation::standardize(vals));
            start = close + 1;
            if (start < text.size()) {
                if (text[start] != ',')
                    throw std::invalid_argument("pattern set: expected ',' after ']'");
                ++start;
            }
        } else {
            size_t comma = text.find(',', start);
            if (comma == std::string_view::npos) comma = text.size();
            auto token = text.substr(start, comma - start);
            if (token.empty()) throw std::invalid_argument("pattern set: empty pattern token");
            if (token == "e") {
                patterns.emplace_back();
            } else {
                std::vector<int> vals;
                for (char c : token) {
                    if (c < '1' || c > '9')
                        throw std::invalid_argument(
                            "pattern set: bad character in pattern '" + std::string(token) +
                            "' (values above 9 need the [v;v;...] form)");
                    vals.push_back(c - '0');
                }
                patterns.emplace_back(std::move(vals));
            }
            start = comma + 1;
        }
    }
    return PatternSet(std::move(patterns));
}

bool avoids_all(const Permutation& pi, const PatternSet& r) {
    for (const auto& sigma : r.patterns())
        if (contains(pi, sigma)) return false;
    return true;
}

} // namespace fibperm
