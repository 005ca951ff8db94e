#ifndef DIVSUM_SPECFUN_HPP
#define DIVSUM_SPECFUN_HPP

#include <gmpxx.h>

#include "divsum/complexnum.hpp"
#include "divsum/precision.hpp"

namespace divsum::specfun {

// Exact Bernoulli number B_{2j} (B_0 = 1, B_2 = 1/6, B_4 = -1/30, ...).
// Computed once via tangent numbers and cached; thread-safe.
const mpq_class& bernoulli_2j(int j);

// Euler Gamma function for complex s. Argument-shifted Stirling series with
// reflection for Re(s) < 1/2. Throws PoleError at non-positive integers.
Complex gamma(const Complex& s, const PrecisionContext& ctx);

// (s-1) * zeta(s), entire. Euler-Maclaurin with the pole term kept exact,
// so s = 1 is a regular point (value 1).
Complex zeta_times_s_minus_1(const Complex& s, const PrecisionContext& ctx);

// Riemann zeta by analytic continuation (Euler-Maclaurin). Throws PoleError
// at s = 1.
Complex zeta(const Complex& s, const PrecisionContext& ctx);

// g(s) = pi^(-s/2) (s-1) Gamma(s/2 + 1), the Archimedean local factor.
Complex g_func(const Complex& s, const PrecisionContext& ctx);

// Completed zeta xi(s) = g(s) zeta(s), entire; xi(s) = xi(1-s).
Complex xi(const Complex& s, const PrecisionContext& ctx);

// g(s) g(s-a) for odd positive a, via the duplication-formula closed forms.
// Poles at negative integers and at odd l with 3 <= l <= a-1.
Complex gg_product(int a, const Complex& s, const PrecisionContext& ctx);

// Upper incomplete gamma Gamma(s, x) = int_x^inf t^(s-1) e^(-t) dt, x > 0.
Complex inc_gamma_upper(const Complex& s, const Real& x, const PrecisionContext& ctx);

// Exponential integral E_nu(z) = int_1^inf e^(-zt) t^(-nu) dt
//                              = z^(nu-1) Gamma(1-nu, z), z > 0.
Complex expint_E(const Complex& nu, const Real& z, const PrecisionContext& ctx);

// Modified Bessel K_0 or K_1 for real x > 0. Ascending series below the
// crossover, asymptotic series above it.
Real bessel_K(int order, const Real& x, const PrecisionContext& ctx);

// Both orders at once (one series pass below the crossover).
std::pair<Real, Real> bessel_K0_K1(const Real& x, const PrecisionContext& ctx);

// Terminating confluent hypergeometric 1F1(-m; b; x), b >= 1 integer.
Real hyp1f1_term(int m, int b, const Real& x, const PrecisionContext& ctx);

}  // namespace divsum::specfun

#endif
