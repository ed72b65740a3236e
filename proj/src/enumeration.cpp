#include "fibperm/enumeration.hpp"

#include <stdexcept>

namespace fibperm {

namespace {

// Depth-first walk over prefixes of avoiders, in lexicographic order of the
// chosen values. Only a match ending at the newest element can appear when a
// clean prefix is extended, so that is all the prune has to test.
template <typename Visit>
void avoider_dfs(int n, const PatternSet& r, Visit&& visit) {
    if (n < 0) throw std::domain_error("enumerate_avoiders: negative length");
    for (const auto& sigma : r.patterns())
        if (sigma.empty()) return; // the empty pattern occurs in everything
    std::vector<PatternMatcher> matchers;
    for (const auto& sigma : r.patterns())
        if (sigma.size() <= n) matchers.emplace_back(sigma);

    std::vector<int> prefix;
    prefix.reserve(static_cast<size_t>(n));
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);

    auto step = [&](auto&& self) -> void {
        if (static_cast<int>(prefix.size()) == n) {
            visit(prefix);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            prefix.push_back(v);
            used[static_cast<size_t>(v)] = true;
            bool clean = true;
            for (const auto& m : matchers) {
                if (m.pattern().size() <= static_cast<int>(prefix.size()) &&
                    m.ending_at_back(prefix)) {
                    clean = false;
                    break;
                }
            }
            if (clean) self(self);
            used[static_cast<size_t>(v)] = false;
            prefix.pop_back();
        }
    };
    step(step);
}

bool has_effective_pattern(int n, const PatternSet& r) {
    for (const auto& sigma : r.patterns())
        if (sigma.size() <= n) return true;
    return false;
}

} // namespace

std::vector<Permutation> enumerate_avoiders(int n, const PatternSet& r) {
    std::vector<Permutation> out;
    avoider_dfs(n, r, [&](const std::vector<int>& full) {
        out.push_back(Permutation(full));
    });
    return out;
}

BigInt count_avoiders(int n, const PatternSet& r) {
    if (n < 0) throw std::domain_error("count_avoiders: negative length");
    for (const auto& sigma : r.patterns())
        if (sigma.empty()) return 0;
    if (!has_effective_pattern(n, r)) return factorial(n); // S_n unrestricted
    BigInt count = 0;
    avoider_dfs(n, r, [&](const std::vector<int>&) { ++count; });
    return count;
}

} // namespace fibperm
