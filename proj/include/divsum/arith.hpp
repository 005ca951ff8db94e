#ifndef DIVSUM_ARITH_HPP
#define DIVSUM_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "divsum/errors.hpp"

namespace divsum::arith {

using std::int64_t;

// Ascending list of all primes <= limit (p_1 = 2).
struct PrimeList {
    int64_t limit = 0;
    std::vector<int64_t> primes;
};

// All p_limit-smooth integers in [1, bound], ascending. 1 is always a member.
struct SmoothSet {
    int64_t p_limit = 0;
    int64_t bound = 0;
    std::vector<int64_t> members;
};

// Sieve of Eratosthenes. Throws DomainError for limit < 2.
PrimeList primes_up_to(int64_t limit);

// The n-th prime, 1-based (nth_prime(1) == 2).
int64_t nth_prime(int n);

bool is_prime(int64_t n);

// Prime factorization by trial division, primes ascending. factorize(1) = {}.
std::vector<std::pair<int64_t, int>> factorize(int64_t n);

// Exact divisor power sum sigma_a(n) = sum_{d|n} d^a via the multiplicative
// product formula. Throws DomainError for n < 1.
mpz_class sigma(int a, int64_t n);

// True when every prime factor of n is <= p.
bool is_smooth(int64_t n, int64_t p);

SmoothSet smooth_set(int64_t p_limit, int64_t bound);

// Cached sigma_a values for one exponent. Safe for concurrent readers.
class DivisorOracle {
  public:
    explicit DivisorOracle(int a) : a_(a) {
        if (a < 0) throw DomainError("DivisorOracle: exponent must be >= 0");
    }
    int exponent() const { return a_; }
    const mpz_class& value(int64_t n) const;

  private:
    int a_;
    mutable std::mutex mu_;
    mutable std::map<int64_t, mpz_class> cache_;
};

}  // namespace divsum::arith

#endif
