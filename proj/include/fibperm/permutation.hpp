#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fibperm {

enum class Symmetry { reverse, complement, inverse, reverse_complement };

Symmetry symmetry_from_string(std::string_view name);

/// A permutation of {1,...,n} in one-line notation. Immutable value type.
class Permutation {
public:
    Permutation() = default; // the empty permutation
    explicit Permutation(std::vector<int> values); // throws unless values are exactly {1..n}

    // Canonical form of a sequence of pairwise distinct integers: the unique
    // permutation with the same pairwise comparisons at every index pair.
    static Permutation standardize(std::span<const int> seq);

    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }
    int at(int pos) const { return values_.at(static_cast<size_t>(pos)); } // 0-based position
    const std::vector<int>& values() const { return values_; }

    Permutation reversed() const;
    Permutation complemented() const;
    Permutation inverted() const;
    Permutation apply(Symmetry s) const;

    // Text form: comma-separated one-line notation, "e" for the empty permutation.
    // parse() also accepts the compact digit form ("4213") when all values are <= 9.
    std::string str() const;
    static Permutation parse(std::string_view text);

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> values_;
};

/// Subsequence matcher for one fixed pattern. Matching walks the pattern left
/// to right; each next element only has to clear the tightest smaller/larger
/// values already placed, which prunes most branches immediately.
class PatternMatcher {
public:
    explicit PatternMatcher(Permutation sigma);

    const Permutation& pattern() const { return sigma_; }

    // True iff text has a subsequence order-isomorphic to the pattern.
    // text may be any sequence of pairwise distinct integers.
    bool in(std::span<const int> text) const;

    // True iff an occurrence exists whose final element is text.back().
    bool ending_at_back(std::span<const int> text) const;

private:
    bool search(std::span<const int> text, size_t j, int min_pos, std::vector<int>& chosen,
                bool anchor_last) const;

    Permutation sigma_;
    std::vector<int> below_; // below_[j]: index t<j with the largest sigma(t) < sigma(j), or -1
    std::vector<int> above_; // above_[j]: index t<j with the smallest sigma(t) > sigma(j), or -1
};

bool contains(const Permutation& pi, const Permutation& sigma);

/// A deduplicated finite set of forbidden patterns, kept in lexicographic order.
class PatternSet {
public:
    PatternSet() = default;
    PatternSet(std::initializer_list<Permutation> patterns);
    explicit PatternSet(std::vector<Permutation> patterns);

    const std::vector<Permutation>& patterns() const { return patterns_; }
    size_t size() const { return patterns_.size(); }
    bool empty() const { return patterns_.empty(); }
    bool member(const Permutation& p) const;

    std::string str() const; // pattern-set text form (digit or [v;v;...] per pattern)
    static PatternSet parse(std::string_view text);

    friend auto operator<=>(const PatternSet&, const PatternSet&) = default;

private:
    std::vector<Permutation> patterns_;
};

bool avoids_all(const Permutation& pi, const PatternSet& r);

} // namespace fibperm
