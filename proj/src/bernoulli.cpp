#include <gmpxx.h>

#include <mutex>
#include <vector>

#include "divsum/errors.hpp"

namespace divsum::specfun {

namespace {

std::mutex g_mu;
std::vector<mpq_class> g_b2j{mpq_class(1)};  // B_0

// Extend the cache of B_{2j} through index jmax using tangent numbers
// (integer-only O(n^2) triangle):
//   T_1 = 1;  T_k = (k-1) T_{k-1};
//   then for k = 2..n: T_j = (j-k) T_{j-1} + (j-k+2) T_j for j = k..n;
//   B_{2k} = (-1)^(k-1) 2k T_k / (4^k (4^k - 1)).
void extend(int jmax) {
    int n = jmax;
    std::vector<mpz_class> t(static_cast<size_t>(n) + 1);
    t[1] = 1;
    for (int k = 2; k <= n; ++k) t[static_cast<size_t>(k)] = (k - 1) * t[static_cast<size_t>(k - 1)];
    for (int k = 2; k <= n; ++k)
        for (int j = k; j <= n; ++j)
            t[static_cast<size_t>(j)] =
                (j - k) * t[static_cast<size_t>(j - 1)] + (j - k + 2) * t[static_cast<size_t>(j)];
    g_b2j.resize(static_cast<size_t>(n) + 1);
    g_b2j[0] = 1;
    for (int k = 1; k <= n; ++k) {
        mpz_class four_k;
        mpz_ui_pow_ui(four_k.get_mpz_t(), 4u, static_cast<unsigned long>(k));
        mpq_class b(2 * k * t[static_cast<size_t>(k)], four_k * (four_k - 1));
        b.canonicalize();
        if (k % 2 == 0) b = -b;
        g_b2j[static_cast<size_t>(k)] = b;
    }
}

}  // namespace

const mpq_class& bernoulli_2j(int j) {
    if (j < 0) throw DomainError("bernoulli_2j: negative index");
    std::lock_guard<std::mutex> lock(g_mu);
    if (static_cast<size_t>(j) >= g_b2j.size()) extend(j + j / 2 + 16);
    return g_b2j[static_cast<size_t>(j)];
}

}  // namespace divsum::specfun
