#include "divsum/arith.hpp"

#include <algorithm>
#include <string>

namespace divsum::arith {

namespace {

// Shared trial-division sieve, grown on demand.
std::mutex g_sieve_mu;
PrimeList g_sieve;

void ensure_sieve(int64_t limit) {
    if (g_sieve.limit >= limit) return;
    int64_t target = std::max<int64_t>(limit, std::max<int64_t>(2 * g_sieve.limit, 1 << 16));
    std::vector<char> composite(static_cast<size_t>(target) + 1, 0);
    PrimeList fresh;
    fresh.limit = target;
    for (int64_t i = 2; i <= target; ++i) {
        if (composite[static_cast<size_t>(i)]) continue;
        fresh.primes.push_back(i);
        for (int64_t j = i * i; j <= target; j += i) composite[static_cast<size_t>(j)] = 1;
    }
    g_sieve = std::move(fresh);
}

}  // namespace

PrimeList primes_up_to(int64_t limit) {
    if (limit < 2) throw DomainError("primes_up_to: limit must be >= 2");
    std::lock_guard<std::mutex> lock(g_sieve_mu);
    ensure_sieve(limit);
    PrimeList out;
    out.limit = limit;
    for (int64_t p : g_sieve.primes) {
        if (p > limit) break;
        out.primes.push_back(p);
    }
    return out;
}

int64_t nth_prime(int n) {
    if (n < 1) throw DomainError("nth_prime: index is 1-based");
    std::lock_guard<std::mutex> lock(g_sieve_mu);
    int64_t limit = 1 << 10;
    for (;;) {
        ensure_sieve(limit);
        if (static_cast<size_t>(n) <= g_sieve.primes.size()) return g_sieve.primes[static_cast<size_t>(n) - 1];
        limit *= 2;
    }
}

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<int64_t, int>> factorize(int64_t n) {
    if (n < 1) throw DomainError("factorize: n must be >= 1");
    std::vector<std::pair<int64_t, int>> out;
    if (n == 1) return out;
    int64_t m = n;
    {
        std::lock_guard<std::mutex> lock(g_sieve_mu);
        int64_t root = 2;
        while (root * root <= n) ++root;
        ensure_sieve(root);
        for (int64_t p : g_sieve.primes) {
            if (p * p > m) break;
            if (m % p != 0) continue;
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

mpz_class sigma(int a, int64_t n) {
    if (a < 0) throw DomainError("sigma: exponent must be >= 0");
    if (n < 1) throw DomainError("sigma: undefined for n < 1");
    mpz_class result = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (a == 0) {
            result *= e + 1;
            continue;
        }
        // (p^{a(e+1)} - 1) / (p^a - 1)
        mpz_class pa;
        mpz_ui_pow_ui(pa.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(a));
        mpz_class num;
        mpz_pow_ui(num.get_mpz_t(), pa.get_mpz_t(), static_cast<unsigned long>(e + 1));
        num -= 1;
        result *= num / (pa - 1);
    }
    return result;
}

bool is_smooth(int64_t n, int64_t p) {
    if (n < 1) throw DomainError("is_smooth: n must be >= 1");
    int64_t m = n;
    for (int64_t q = 2; q <= p && m > 1; ++q) {
        while (m % q == 0) m /= q;
    }
    return m == 1;
}

SmoothSet smooth_set(int64_t p_limit, int64_t bound) {
    if (!is_prime(p_limit)) throw DomainError("smooth_set: p_limit must be prime");
    if (bound < 1) throw DomainError("smooth_set: bound must be >= 1");
    PrimeList ps = primes_up_to(p_limit);
    SmoothSet out;
    out.p_limit = p_limit;
    out.bound = bound;
    std::vector<int64_t> cur{1};
    for (int64_t p : ps.primes) {
        std::vector<int64_t> next;
        for (int64_t base : cur) {
            int64_t v = base;
            while (v <= bound) {
                next.push_back(v);
                if (v > bound / p) break;
                v *= p;
            }
        }
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end());
    out.members = std::move(cur);
    return out;
}

const mpz_class& DivisorOracle::value(int64_t n) const {
    if (n < 1) throw DomainError("DivisorOracle: undefined for n < 1");
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    auto [pos, ok] = cache_.emplace(n, sigma(a_, n));
    (void)ok;
    return pos->second;
}

}  // namespace divsum::arith
