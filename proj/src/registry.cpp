#include "fibperm/registry.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "fibperm/families.hpp"
#include "fibperm/gf_formulas.hpp"
#include "fibperm/sequences.hpp"

namespace fibperm {

namespace {

void require_valid(const std::string& id, int valid_from, long long n) {
    if (n < valid_from)
        throw std::domain_error("closed_count: formula '" + id + "' is only asserted for n >= " +
                                std::to_string(valid_from));
}

BigInt falling(long long n, int k) {
    BigInt r = 1;
    for (int i = 0; i < k; ++i) r *= n - i;
    return r;
}

// F_{2m-1} with the m = 0 value pinned to 1, matching b_0 = 1 of the
// bisection recurrence b_m = 3 b_{m-1} - b_{m-2}.
BigInt odd_index_fib(long long m) { return m == 0 ? BigInt(1) : fibonacci(2 * m - 1); }

// Catalan numbers by the convolution recurrence; a route independent of the
// central-binomial closed form.
BigInt catalan_conv(long long m) {
    std::vector<BigInt> c(static_cast<size_t>(m) + 1);
    c[0] = 1;
    for (long long j = 0; j < m; ++j) {
        BigInt acc = 0;
        for (long long i = 0; i <= j; ++i)
            acc += c[static_cast<size_t>(i)] * c[static_cast<size_t>(j - i)];
        c[static_cast<size_t>(j) + 1] = std::move(acc);
    }
    return c[static_cast<size_t>(m)];
}

Permutation ascending_perm(int k) {
    std::vector<int> v(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) v[static_cast<size_t>(i)] = i + 1;
    return Permutation(std::move(v));
}

// sum_{k=1}^{s-1} C(n-1,k-1) + sum_{k=s}^{n} C(k-1,s-1) F_t(n-k+1)
BigInt suffix_free_count(int s, int t, long long n) {
    BigInt acc = 0;
    for (int k = 1; k <= s - 1; ++k) acc += binomial(n - 1, k - 1);
    for (long long k = s; k <= n; ++k) acc += binomial(k - 1, s - 1) * kgen_fib(t, n - k + 1);
    return acc;
}

const Permutation P132({1, 3, 2});
const Permutation P213({2, 1, 3});
const Permutation P123({1, 2, 3});
const Permutation P2341({2, 3, 4, 1});
const Permutation P3241({3, 2, 4, 1});

void add_simion_schmidt(std::vector<Formula>& out) {
    Formula f;
    f.id = "SS-Eq1";
    f.statement = "F(n+1)";
    f.valid_from = 1;
    f.pattern_set = [] { return PatternSet{P123, P132, P213}; };
    f.closed = [](long long n) {
        require_valid("SS-Eq1", 1, n);
        return fibonacci(n + 1);
    };
    f.gf = [] { return tau_gf(RSequence({4, 1})); };
    out.push_back(std::move(f));
}

void add_ascending_tau(std::vector<Formula>& out) {
    for (int k = 2; k <= 6; ++k) {
        Formula f;
        f.id = "cor33-k" + std::to_string(k);
        f.statement = "F_" + std::to_string(k - 1) + "(n+1)";
        f.params = {k};
        f.valid_from = 0;
        f.pattern_set = [k] { return PatternSet{ascending_perm(k), P132, P213}; };
        f.closed = [k](long long n) { return n < 0 ? BigInt(0) : kgen_fib(k - 1, n + 1); };
        f.gf = [k] { return tau_gf(RSequence({k + 1, 1})); };
        out.push_back(std::move(f));
    }
}

void add_alpha(std::vector<Formula>& out) {
    const std::vector<std::pair<int, int>> params = {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 2}, {2, 3}};
    for (auto [s, t] : params) {
        Formula f;
        f.id = "alpha-" + std::to_string(s) + "-" + std::to_string(t);
        f.statement = "sum_{k=1}^{s-1} C(n-1,k-1) + sum_{k=s}^{n} C(k-1,s-1) F_t(n-k+1)";
        f.params = {s, t};
        f.valid_from = 1;
        f.pattern_set = [s, t] { return PatternSet{P132, P213, alpha_perm(s, t)}; };
        f.closed = [s, t, id = f.id](long long n) {
            require_valid(id, 1, n);
            return suffix_free_count(s, t, n);
        };
        f.gf = [s, t] { return tau_gf(alpha_rseq(s, t)); };
        out.push_back(std::move(f));
    }
}

void add_beta(std::vector<Formula>& out) {
    const std::vector<std::array<int, 3>> params = {
        {1, 2, 1}, {2, 2, 1}, {1, 3, 1}, {1, 2, 2}, {0, 3, 2}, {1, 2, 0}};
    for (auto [a, b, c] : params) {
        Formula f;
        f.id = "beta-" + std::to_string(a) + "-" + std::to_string(b) + "-" + std::to_string(c);
        f.statement =
            "sum_{k=1}^{a+c-1} C(n-1,k-1) + sum_{k=a+c}^{n} C(k-1,a+c-1) F_{b-1}(n-k+1)";
        f.params = {a, b, c};
        f.valid_from = 1;
        f.pattern_set = [a, b, c] { return PatternSet{P132, P213, beta_perm(a, b, c)}; };
        f.closed = [a, b, c, id = f.id](long long n) {
            require_valid(id, 1, n);
            return suffix_free_count(a + c, b - 1, n);
        };
        f.gf = [a, b, c] { return tau_gf(beta_rseq(a, b, c)); };
        out.push_back(std::move(f));
    }
}

void add_gamma(std::vector<Formula>& out) {
    auto gamma_set = [](int a, int b, int c) {
        return PatternSet{P123, P132, gamma_perm(a, b, c)};
    };

    for (int b = 2; b <= 5; ++b) {
        Formula f;
        f.id = "gamma-0b0-" + std::to_string(b);
        f.statement = "F_" + std::to_string(b) + "(n+1)";
        f.params = {0, b, 0};
        f.valid_from = 1;
        f.pattern_set = [=] { return gamma_set(0, b, 0); };
        f.closed = [b, id = f.id](long long n) {
            require_valid(id, 1, n);
            return kgen_fib(b, n + 1);
        };
        f.gf = [b] { return gamma_gf(0, b, 0); };
        out.push_back(std::move(f));
    }

    for (int b = 1; b <= 4; ++b) {
        Formula f;
        f.id = "gamma-0b1-" + std::to_string(b);
        f.statement = "sum_{k=1}^{n} F_" + std::to_string(b) + "(k)";
        f.params = {0, b, 1};
        f.valid_from = 1;
        f.pattern_set = [=] { return gamma_set(0, b, 1); };
        f.closed = [b, id = f.id](long long n) {
            require_valid(id, 1, n);
            BigInt acc = 0;
            for (long long k = 1; k <= n; ++k) acc += kgen_fib(b, k);
            return acc;
        };
        f.gf = [b] { return gamma_gf(0, b, 1); };
        out.push_back(std::move(f));
    }

    {
        Formula f;
        f.id = "gamma-022";
        f.statement = "F(n+2) + F(n) - 3";
        f.params = {0, 2, 2};
        f.valid_from = 3;
        f.pattern_set = [=] { return gamma_set(0, 2, 2); };
        f.closed = [id = f.id](long long n) {
            require_valid(id, 3, n);
            return fibonacci(n + 2) + fibonacci(n) - 3;
        };
        f.gf = [] { return gamma_gf(0, 2, 2); };
        out.push_back(std::move(f));
    }

    for (int b = 3; b <= 5; ++b) {
        Formula f;
        f.id = "gamma-0b2-" + std::to_string(b);
        f.statement = "(3 F_b(n+1) + (b-4) F_b(n-1) + 3 sum_{i=3}^{b-1} (b-i) F_b(n-i+1) - 3)/(b-1)";
        f.params = {0, b, 2};
        f.valid_from = 3;
        f.pattern_set = [=] { return gamma_set(0, b, 2); };
        f.closed = [b, id = f.id](long long n) {
            require_valid(id, 3, n);
            BigInt acc = 3 * kgen_fib(b, n + 1) + BigInt(b - 4) * kgen_fib(b, n - 1) - 3;
            for (int i = 3; i <= b - 1; ++i) acc += 3 * BigInt(b - i) * kgen_fib(b, n - i + 1);
            return exact_div(acc, BigInt(b - 1));
        };
        f.gf = [b] { return gamma_gf(0, b, 2); };
        out.push_back(std::move(f));

        Formula alt;
        alt.id = "gamma-0b2alt-" + std::to_string(b);
        alt.statement = "sum_{k=1}^{n-1} F_b(k) + 2 sum_{k=1}^{n-2} F_b(k)";
        alt.params = {0, b, 2};
        alt.valid_from = 3;
        alt.pattern_set = [=] { return gamma_set(0, b, 2); };
        alt.closed = [b, id = alt.id](long long n) {
            require_valid(id, 3, n);
            BigInt acc = 0;
            for (long long k = 1; k <= n - 1; ++k) acc += kgen_fib(b, k);
            for (long long k = 1; k <= n - 2; ++k) acc += 2 * kgen_fib(b, k);
            return acc;
        };
        alt.gf = [b] { return gamma_gf(0, b, 2); };
        out.push_back(std::move(alt));
    }

    for (int b = 2; b <= 4; ++b) {
        Formula f;
        f.id = "gamma-1b1-" + std::to_string(b);
        f.statement = "((b^2-3b)/2 + (1-b) n + g_b(n)) / (b-1)^2";
        f.params = {1, b, 1};
        f.valid_from = 1;
        f.pattern_set = [=] { return gamma_set(1, b, 1); };
        f.closed = [b, id = f.id](long long n) {
            require_valid(id, 1, n);
            const BigInt B = b;
            BigInt g = exact_div(B * B - B + 2, 2) * kgen_fib(b, n + 1) + (B - 1) * kgen_fib(b, n);
            for (int i = 2; i <= b - 1; ++i) {
                BigInt coef = (1 - B) * binomial(i, 2) + exact_div(B * B - B - 2, 2) * i -
                              exact_div(B * B - 3 * B, 2);
                g += coef * kgen_fib(b, n - i + 1);
            }
            BigInt inner = exact_div(B * B - 3 * B, 2) + (1 - B) * n + g;
            return exact_div(inner, (B - 1) * (B - 1));
        };
        f.gf = [b] { return gamma_gf(1, b, 1); };
        out.push_back(std::move(f));
    }

    struct SmallGamma {
        const char* id;
        int a, b, c, valid_from;
        const char* statement;
        BigInt (*closed)(long long);
    };
    const SmallGamma small[] = {
        {"gamma-122", 1, 2, 2, 3, "F(n+3) + F(n+1) - 3n + 2",
         [](long long n) { return BigInt(fibonacci(n + 3) + fibonacci(n + 1) - 3 * n + 2); }},
        {"gamma-222", 2, 2, 2, 5, "5 F(n+1) - 9n + 21",
         [](long long n) { return BigInt(5 * fibonacci(n + 1) - 9 * n + 21); }},
        {"gamma-322", 3, 2, 2, 7, "3 F(n+2) + 3 F(n) - 24n + 91",
         [](long long n) {
             return BigInt(3 * fibonacci(n + 2) + 3 * fibonacci(n) - 24 * n + 91);
         }},
        {"gamma-132", 1, 3, 2, 3, "(F_3(n+2) + 2 F_3(n) + F_3(n-1) - 3n + 5)/2",
         [](long long n) {
             return exact_div(kgen_fib(3, n + 2) + 2 * kgen_fib(3, n) + kgen_fib(3, n - 1) -
                                  BigInt(3 * n - 5),
                              2);
         }},
        {"gamma-232", 2, 3, 2, 5, "(4 F_3(n+1) + F_3(n) - 3 F_3(n-1) - 9n + 30)/2",
         [](long long n) {
             return exact_div(4 * kgen_fib(3, n + 1) + kgen_fib(3, n) - 3 * kgen_fib(3, n - 1) -
                                  BigInt(9 * n - 30),
                              2);
         }},
        {"gamma-332", 3, 3, 2, 7, "(3 F_3(n) + 10 F_3(n-1) - 3 F_3(n-2) - 24n + 115)/2",
         [](long long n) {
             return exact_div(3 * kgen_fib(3, n) + 10 * kgen_fib(3, n - 1) -
                                  3 * kgen_fib(3, n - 2) - BigInt(24 * n - 115),
                              2);
         }},
    };
    for (const auto& s : small) {
        Formula f;
        f.id = s.id;
        f.statement = s.statement;
        f.params = {s.a, s.b, s.c};
        f.valid_from = s.valid_from;
        f.pattern_set = [=] { return gamma_set(s.a, s.b, s.c); };
        f.closed = [fn = s.closed, vf = s.valid_from, id = f.id](long long n) {
            require_valid(id, vf, n);
            return fn(n);
        };
        f.gf = [a = s.a, b = s.b, c = s.c] { return gamma_gf(a, b, c); };
        out.push_back(std::move(f));
    }
}

void add_omega(std::vector<Formula>& out) {
    struct OmegaEntry {
        int k, valid_from;
        const char* statement;
        BigInt (*closed)(long long);
    };
    const OmegaEntry entries[] = {
        {3, 1, "F(n+2) - 1", [](long long n) { return BigInt(fibonacci(n + 2) - 1); }},
        {4, 1, "F(n+5) - C(n+1,2) - 2 C(n+1,1) - 2",
         [](long long n) {
             return BigInt(fibonacci(n + 5) - binomial(n + 1, 2) - 2 * binomial(n + 1, 1) - 2);
         }},
        {5, 2, "3 F(n+5) - 2 C(n+1,3) - 4 C(n+1,2) - 3 C(n+1,1) - 14",
         [](long long n) {
             return BigInt(3 * fibonacci(n + 5) - 2 * binomial(n + 1, 3) -
                           4 * binomial(n + 1, 2) - 3 * binomial(n + 1, 1) - 14);
         }},
        {6, 2, "5 F(n+6) + F(n+4) - 4 C(n+1,4) - 7 C(n+1,3) - 5 C(n+1,2) - 27 C(n+1,1) - 8",
         [](long long n) {
             return BigInt(5 * fibonacci(n + 6) + fibonacci(n + 4) - 4 * binomial(n + 1, 4) -
                           7 * binomial(n + 1, 3) - 5 * binomial(n + 1, 2) -
                           27 * binomial(n + 1, 1) - 8);
         }},
    };
    for (const auto& e : entries) {
        Formula f;
        f.id = "omega" + std::to_string(e.k);
        f.statement = e.statement;
        f.params = {e.k};
        f.valid_from = e.valid_from;
        f.pattern_set = [k = e.k] { return PatternSet{P132, P2341, omega_perm(k)}; };
        f.closed = [fn = e.closed, vf = e.valid_from, id = f.id](long long n) {
            require_valid(id, vf, n);
            return fn(n);
        };
        f.gf = [k = e.k] { return omega_gf(k); };
        out.push_back(std::move(f));
    }
}

void add_mu(std::vector<Formula>& out) {
    struct MuEntry {
        int a, b;
        const char* statement;
        BigInt (*closed)(long long);
    };
    const MuEntry entries[] = {
        {0, 3, "F(n+2) - 1", [](long long n) { return BigInt(fibonacci(n + 2) - 1); }},
        {0, 4, "(2 F_3(n+3) + F_3(n+2) + F_3(n) - 2 F(n+4) + 1)/2",
         [](long long n) {
             return exact_div(2 * kgen_fib(3, n + 3) + kgen_fib(3, n + 2) + kgen_fib(3, n) -
                                  2 * fibonacci(n + 4) + 1,
                              2);
         }},
        {0, 5,
         "(14 F_4(n+4) + 8 F_4(n+3) + 4 F_4(n+2) + 2 F_4(n) - 6 F_3(n+6) - 3 F_3(n+5) - 3 "
         "F_3(n+3) + 6 F(n+5) - 1)/6",
         [](long long n) {
             BigInt acc = 14 * kgen_fib(4, n + 4) + 8 * kgen_fib(4, n + 3) +
                          4 * kgen_fib(4, n + 2) + 2 * kgen_fib(4, n) - 6 * kgen_fib(3, n + 6) -
                          3 * kgen_fib(3, n + 5) - 3 * kgen_fib(3, n + 3) + 6 * fibonacci(n + 5) -
                          1;
             return exact_div(acc, 6);
         }},
        {1, 3, "F(n+5) - C(n+1,2) - 2 C(n+1,1) - 2",
         [](long long n) {
             return BigInt(fibonacci(n + 5) - binomial(n + 1, 2) - 2 * binomial(n + 1, 1) - 2);
         }},
        {2, 3, "F(n+8) - C(n+1,4) - 3 C(n+1,3) - 4 C(n+1,2) - 9 C(n+1,1) - 11",
         [](long long n) {
             return BigInt(fibonacci(n + 8) - binomial(n + 1, 4) - 3 * binomial(n + 1, 3) -
                           4 * binomial(n + 1, 2) - 9 * binomial(n + 1, 1) - 11);
         }},
        {1, 4, "(F_3(n+5) + 2 F_3(n+4) - 2 F(n+7) + C(n+1,2) + 3 C(n+1,1) + 10)/2",
         [](long long n) {
             BigInt acc = kgen_fib(3, n + 5) + 2 * kgen_fib(3, n + 4) - 2 * fibonacci(n + 7) +
                          binomial(n + 1, 2) + 3 * binomial(n + 1, 1) + 10;
             return exact_div(acc, 2);
         }},
    };
    for (const auto& e : entries) {
        Formula f;
        f.id = "mu" + std::to_string(e.a) + std::to_string(e.b);
        f.statement = e.statement;
        f.params = {e.a, e.b};
        f.valid_from = 1;
        f.pattern_set = [a = e.a, b = e.b] { return PatternSet{P132, P3241, mu_perm(a, b)}; };
        f.closed = [fn = e.closed, id = f.id](long long n) {
            require_valid(id, 1, n);
            return fn(n);
        };
        f.gf = [a = e.a, b = e.b] { return mu_gf(a, b); };
        out.push_back(std::move(f));
    }
}

void add_extensions(std::vector<Formula>& out) {
    for (int k = 1; k <= 2; ++k) {
        Formula f;
        f.id = "ext-ss-k" + std::to_string(k);
        f.statement = "n!/(n-k)! F(n+1-k)";
        f.params = {k};
        f.valid_from = k;
        f.pattern_set = [k] { return extension_set(PatternSet{P123, P132, P213}, k); };
        f.closed = [k, id = f.id](long long n) {
            require_valid(id, k, n);
            return falling(n, k) * fibonacci(n + 1 - k);
        };
        f.gf = [k] { return extension_gf(tau_gf(RSequence({4, 1})), k); };
        out.push_back(std::move(f));
    }

    const std::vector<PatternSet> west_sets = {
        PatternSet{P123, Permutation({1, 4, 3, 2})}, PatternSet{P123, Permutation({2, 1, 4, 3})},
        PatternSet{P123, Permutation({2, 4, 1, 3})}, PatternSet{P132, Permutation({1, 2, 3, 4})},
        PatternSet{P132, Permutation({2, 1, 3, 4})}, PatternSet{P132, Permutation({2, 3, 1, 4})},
        PatternSet{P132, P2341},                     PatternSet{P132, P3241},
        PatternSet{P132, Permutation({3, 4, 1, 2})}};
    for (int i = 0; i < static_cast<int>(west_sets.size()); ++i) {
        for (int k = 0; k <= 1; ++k) {
            Formula f;
            f.id = "west" + std::to_string(i + 1) + "-k" + std::to_string(k);
            f.statement = "n!/(n-k)! F(2(n-k)-1)";
            f.params = {i + 1, k};
            f.valid_from = k;
            f.pattern_set = [set = west_sets[static_cast<size_t>(i)], k] {
                return extension_set(set, k);
            };
            f.closed = [k, id = f.id](long long n) {
                require_valid(id, k, n);
                return falling(n, k) * odd_index_fib(n - k);
            };
            f.gf = [k] {
                return extension_gf(RationalGF(Polynomial{1, -2}, Polynomial{1, -3, 1}), k);
            };
            out.push_back(std::move(f));
        }
    }

    const std::vector<std::pair<Permutation, int>> catalan_entries = {
        {P123, 0}, {P132, 0}, {P213, 0},
        {Permutation({2, 3, 1}), 0}, {Permutation({3, 1, 2}), 0}, {Permutation({3, 2, 1}), 0},
        {P123, 1}, {P132, 1}, {P132, 2}};
    for (const auto& [tau, k] : catalan_entries) {
        Formula f;
        std::string pat;
        for (int v : tau.values()) pat += static_cast<char>('0' + v);
        f.id = "cat-" + pat + "-k" + std::to_string(k);
        f.statement = "n!/(n-k+1)! C(2(n-k), n-k)";
        f.params = {k};
        f.valid_from = k;
        f.pattern_set = [tau, k] { return extension_set(PatternSet{tau}, k); };
        f.closed = [k, id = f.id](long long n) {
            require_valid(id, k, n);
            const long long m = n - k;
            return exact_div(falling(n, k) * binomial(2 * m, m), BigInt(m + 1));
        };
        // No rational generating function exists for this class; the
        // independent cross-check route is the Catalan convolution recurrence.
        f.reference = [k](long long n) { return falling(n, k) * catalan_conv(n - k); };
        out.push_back(std::move(f));
    }
}

void add_restrictions(std::vector<Formula>& out) {
    const std::vector<std::pair<int, int>> power_params = {{3, 2}, {4, 1}, {4, 3}, {4, 4}, {5, 2}};
    for (auto [k, a] : power_params) {
        Formula f;
        f.id = "r-powerfact-k" + std::to_string(k) + "-a" + std::to_string(a);
        f.statement = "(k-1)! (k-a)^(n-k+1)";
        f.params = {k, a};
        f.valid_from = k - 1;
        f.pattern_set = [k, a] { return restriction_set(RestrictionSpec(k, {a})); };
        f.closed = [k, a, id = f.id](long long n) {
            require_valid(id, k - 1, n);
            return factorial(k - 1) * pow_int(k - a, n - k + 1);
        };
        f.gf = [k, a] { return restriction_gf(RestrictionSpec(k, {a})); };
        out.push_back(std::move(f));
    }

    {
        Formula f;
        f.id = "r-pell";
        f.statement = "p(n) + p(n-2)";
        f.params = {4, 2, 3};
        f.valid_from = 1;
        f.pattern_set = [] { return restriction_set(RestrictionSpec(4, {2, 3})); };
        f.closed = [id = f.id](long long n) {
            require_valid(id, 1, n);
            return pell(n) + pell(n - 2);
        };
        f.gf = [] { return restriction_gf(RestrictionSpec(4, {2, 3})); };
        out.push_back(std::move(f));
    }

    for (int k = 3; k <= 5; ++k) {
        Formula f;
        f.id = "r-fib-k" + std::to_string(k);
        f.statement = "(k-2)! (F(n-k+4) + (k-3) F(n-k+2))";
        f.params = {k};
        f.valid_from = k;
        f.pattern_set = [k] { return restriction_set(RestrictionSpec(k, {k - 1, k - 1})); };
        f.closed = [k, id = f.id](long long n) {
            require_valid(id, k, n);
            return factorial(k - 2) * (fibonacci(n - k + 4) + BigInt(k - 3) * fibonacci(n - k + 2));
        };
        f.gf = [k] { return restriction_gf(RestrictionSpec(k, {k - 1, k - 1})); };
        out.push_back(std::move(f));
    }
}

std::vector<Formula> build_registry() {
    std::vector<Formula> out;
    add_simion_schmidt(out);
    add_ascending_tau(out);
    add_alpha(out);
    add_beta(out);
    add_gamma(out);
    add_omega(out);
    add_mu(out);
    add_extensions(out);
    add_restrictions(out);
    return out;
}

} // namespace

const std::vector<Formula>& formula_registry() {
    static const std::vector<Formula> registry = build_registry();
    return registry;
}

const Formula& find_formula(const std::string& id) {
    for (const auto& f : formula_registry())
        if (f.id == id) return f;
    throw std::domain_error("unknown formula id '" + id + "'");
}

BigInt closed_count(const std::string& id, long long n) { return find_formula(id).closed(n); }

std::string registry_table() {
    std::ostringstream os;
    os << "id\tparams\tpatterns\tvalid_from\tstatement\n";
    for (const auto& f : formula_registry()) {
        os << f.id << '\t';
        for (size_t i = 0; i < f.params.size(); ++i) os << (i ? "," : "") << f.params[i];
        os << '\t' << f.pattern_set().str() << '\t' << f.valid_from << '\t' << f.statement << '\n';
    }
    return os.str();
}

} // namespace fibperm
