#include "fibperm/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fibperm {

RSequence::RSequence(std::vector<int> r) : r_(std::move(r)) {
    if (r_.size() < 2) throw std::invalid_argument("RSequence: needs at least two entries (m >= 1)");
    for (size_t i = 0; i < r_.size(); ++i) {
        if (r_[i] < 1) throw std::invalid_argument("RSequence: entries must be positive");
        if (i > 0 && r_[i] >= r_[i - 1])
            throw std::invalid_argument("RSequence: entries must be strictly decreasing");
    }
    if (r_.back() != 1) throw std::invalid_argument("RSequence: last entry must be 1");
}

Permutation tau_perm(const RSequence& r) {
    const auto& rs = r.entries();
    std::vector<int> out;
    out.reserve(static_cast<size_t>(r.perm_length()));
    for (size_t j = 1; j < rs.size(); ++j)
        for (int v = rs[j]; v <= rs[j - 1] - 1; ++v) out.push_back(v);
    return Permutation(std::move(out));
}

RSequence tau_decompose(const Permutation& pi) {
    static const Permutation p132({1, 3, 2});
    static const Permutation p213({2, 1, 3});
    if (contains(pi, p132)) throw std::invalid_argument("tau_decompose: permutation contains 132");
    if (contains(pi, p213)) throw std::invalid_argument("tau_decompose: permutation contains 213");
    if (pi.empty()) throw std::invalid_argument("tau_decompose: empty permutation has no r-sequence");

    const auto& v = pi.values();
    std::vector<int> r{pi.size() + 1};
    size_t i = 0;
    while (i < v.size()) {
        size_t j = i;
        while (j + 1 < v.size() && v[j + 1] == v[j] + 1) ++j;
        if (v[j] != r.back() - 1)
            throw std::invalid_argument("tau_decompose: run structure violated");
        r.push_back(v[i]);
        i = j + 1;
    }
    if (r.back() != 1) throw std::invalid_argument("tau_decompose: runs do not reach 1");
    return RSequence(std::move(r));
}

RSequence alpha_rseq(int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("alpha: requires s >= 1 and t >= 1");
    std::vector<int> r{s + t + 2};
    for (int v = s + 1; v >= 1; --v) r.push_back(v);
    return RSequence(std::move(r));
}

Permutation alpha_perm(int s, int t) { return tau_perm(alpha_rseq(s, t)); }

RSequence beta_rseq(int a, int b, int c) {
    if (a < 0 || c < 0 || a + c < 1)
        throw std::invalid_argument("beta: requires a, c >= 0 with a + c >= 1");
    if (b < 1) throw std::invalid_argument("beta: requires b >= 1");
    std::vector<int> r;
    for (int v = a + b + c + 1; v >= b + c + 1; --v) r.push_back(v);
    for (int v = c + 1; v >= 1; --v) r.push_back(v);
    return RSequence(std::move(r));
}

Permutation beta_perm(int a, int b, int c) { return tau_perm(beta_rseq(a, b, c)); }

Permutation gamma_perm(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("gamma: parameters must be >= 0");
    std::vector<int> out;
    out.reserve(static_cast<size_t>(a + b + c + 1));
    for (int v = a + b + c + 1; v >= b + c + 2; --v) out.push_back(v);
    for (int v = b + c; v >= c + 1; --v) out.push_back(v);
    out.push_back(b + c + 1);
    for (int v = c; v >= 1; --v) out.push_back(v);
    return Permutation(std::move(out));
}

Permutation omega_perm(int k) {
    if (k < 3) throw std::invalid_argument("omega: requires k >= 3");
    if (k == 3) return Permutation({2, 1, 3});
    std::vector<int> out;
    out.reserve(static_cast<size_t>(k));
    for (int v = k; v >= 4; --v) out.push_back(v);
    out.push_back(2);
    out.push_back(1);
    out.push_back(3);
    return Permutation(std::move(out));
}

Permutation mu_perm(int a, int b) {
    if (a < 0 || b < 0 || a + b < 1)
        throw std::invalid_argument("mu: requires a, b >= 0 with a + b >= 1");
    std::vector<int> out;
    out.reserve(static_cast<size_t>(a + b));
    for (int v = b + a; v >= b + 1; --v) out.push_back(v);
    for (int v = 1; v <= b; ++v) out.push_back(v);
    return Permutation(std::move(out));
}

std::vector<Permutation> extend(const Permutation& alpha) {
    const int n = alpha.size() + 1;
    std::vector<Permutation> out;
    out.reserve(static_cast<size_t>(n));
    for (int slot = 0; slot < n; ++slot) {
        std::vector<int> vals;
        vals.reserve(static_cast<size_t>(n));
        for (int i = 0; i < alpha.size(); ++i) {
            if (i == slot) vals.push_back(n);
            vals.push_back(alpha.at(i));
        }
        if (slot == alpha.size()) vals.push_back(n);
        out.emplace_back(std::move(vals));
    }
    std::sort(out.begin(), out.end());
    return out;
}

PatternSet extension_set(const PatternSet& r, int k) {
    if (k < 0) throw std::invalid_argument("extension_set: requires k >= 0");
    std::vector<Permutation> cur(r.patterns());
    for (int step = 0; step < k; ++step) {
        std::vector<Permutation> next;
        for (const auto& alpha : cur) {
            auto exts = extend(alpha);
            next.insert(next.end(), exts.begin(), exts.end());
        }
        cur = std::move(next);
    }
    return PatternSet(std::move(cur));
}

RestrictionSpec::RestrictionSpec(int k, std::vector<int> a) : k_(k), a_(std::move(a)) {
    if (k_ < 1) throw std::invalid_argument("RestrictionSpec: requires k >= 1");
    if (a_.empty() || static_cast<int>(a_.size()) > k_)
        throw std::invalid_argument("RestrictionSpec: requires 1 <= l <= k");
    for (int ai : a_)
        if (ai < 1 || ai > k_)
            throw std::invalid_argument("RestrictionSpec: entries must satisfy 1 <= a_i <= k");
    for (size_t i = 0; i + 1 < a_.size(); ++i)
        for (size_t j = i + 1; j + 1 < a_.size(); ++j)
            if (a_[i] == a_[j])
                throw std::invalid_argument("RestrictionSpec: a_1..a_{l-1} must be distinct");
}

PatternSet restriction_set(const RestrictionSpec& spec) {
    const int k = spec.k();
    const int l = spec.l();
    const auto& a = spec.a();
    std::vector<int> vals(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) vals[static_cast<size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do {
        int agree = 0;
        while (agree < l && vals[static_cast<size_t>(agree)] == a[static_cast<size_t>(agree)]) ++agree;
        bool in = (agree == l);
        if (!in && agree < l && vals[static_cast<size_t>(agree)] < a[static_cast<size_t>(agree)]) in = true;
        if (in) out.push_back(Permutation(vals));
    } while (std::next_permutation(vals.begin(), vals.end()));
    return PatternSet(std::move(out));
}

} // namespace fibperm
