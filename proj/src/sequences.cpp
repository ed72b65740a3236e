#include "fibperm/sequences.hpp"

#include <stdexcept>
#include <string>

namespace fibperm {

BigInt kgen_fib(int k, long long n) {
    if (k < 1) throw std::domain_error("kgen_fib: requires k >= 1");
    if (n <= 0) return 0;
    // window[i] holds F_{k, m-k+i} while advancing m
    std::vector<BigInt> window(static_cast<size_t>(k), 0);
    window.back() = 1; // F_{k,1}
    for (long long m = 2; m <= n; ++m) {
        BigInt next = 0;
        for (const auto& v : window) next += v;
        window.erase(window.begin());
        window.push_back(std::move(next));
    }
    return window.back();
}

BigInt fibonacci(long long n) { return kgen_fib(2, n); }

BigInt tribonacci(long long n) { return kgen_fib(3, n); }

BigInt pell(long long n) {
    if (n < 0) return 0;
    BigInt a = 0, b = 1; // p_0, p_1
    if (n == 0) return a;
    for (long long m = 2; m <= n; ++m) {
        BigInt next = 2 * b + a;
        a = std::move(b);
        b = std::move(next);
    }
    return b;
}

BigInt catalan(long long n) {
    if (n < 0) throw std::domain_error("catalan: negative index");
    return exact_div(binomial(2 * n, n), BigInt(n + 1));
}

BigInt named_sequence(std::string_view name, long long n) {
    if (name == "fibonacci") return fibonacci(n);
    if (name == "tribonacci") return tribonacci(n);
    if (name == "pell") return pell(n);
    if (name == "catalan") return catalan(n);
    throw std::invalid_argument("named_sequence: unknown name '" + std::string(name) + "'");
}

std::vector<BigInt> restriction_recurrence_coeffs(const RestrictionSpec& spec) {
    const auto& a = spec.a();
    std::vector<BigInt> coeffs;
    coeffs.reserve(a.size());
    for (size_t j = 0; j < a.size(); ++j) {
        int eta = 0;
        for (size_t i = 0; i < j; ++i)
            if (a[i] > a[j]) ++eta;
        coeffs.emplace_back(spec.k() - a[j] - eta);
    }
    return coeffs;
}

BigInt recurrence_count(const RestrictionSpec& spec, long long n) {
    if (n < 0) return 0;
    const int k = spec.k();
    if (n < k) return factorial(n);
    const auto coeffs = restriction_recurrence_coeffs(spec);
    std::vector<BigInt> b(static_cast<size_t>(n) + 1);
    for (long long m = 0; m < k; ++m) b[static_cast<size_t>(m)] = factorial(m);
    for (long long m = k; m <= n; ++m) {
        BigInt acc = 0;
        for (size_t j = 0; j < coeffs.size(); ++j) {
            const long long idx = m - static_cast<long long>(j) - 1;
            if (idx >= 0) acc += coeffs[j] * b[static_cast<size_t>(idx)];
        }
        b[static_cast<size_t>(m)] = std::move(acc);
    }
    return b[static_cast<size_t>(n)];
}

} // namespace fibperm
