#ifndef DIVSUM_MELLIN_HPP
#define DIVSUM_MELLIN_HPP

#include "divsum/complexnum.hpp"
#include "divsum/precision.hpp"

namespace divsum::mellin {

// Vertical-line integral configuration. abscissa must sit strictly right of
// every pole of the chosen integrand; im_cutoff <= 0 requests an automatic
// cutoff from the Gamma decay along the line.
struct LineIntegralSpec {
    double abscissa = 0.0;
    double im_cutoff = 0.0;
    int tol_digits = 20;  // absolute quadrature tolerance 10^-tol_digits
};

// Closed-form inverse Mellin transforms J_a(n, s0) of the duplication-formula
// integrands, a in {1,3,5}. a=5 has a pole at s0 = 3.
Complex j_closed(int a, long n, const Complex& s0, const PrecisionContext& ctx);

// The same transforms evaluated as vertical-line integrals; the independent
// numerical route of the closed forms.
Complex j_quadrature(int a, long n, const Complex& s0, const LineIntegralSpec& spec,
                     const PrecisionContext& ctx);

// Leading scale of J_a: a=1: pi (2 pi n)^2 e^(-2 pi n); a=3: 2 pi^2 (2 pi n)
// e^(-2 pi n); a=5: 4 pi^3 e^(-2 pi n).
Real j_leading_scale(int a, long n, const PrecisionContext& ctx);

// xi(s0) xi(s0 - a).
Complex xi_pair_direct(int a, const Complex& s0, const PrecisionContext& ctx);

struct IntegralResult {
    Complex value;
    Real quad_error;   // quadrature error estimate
    Real trunc_error;  // first-omitted-term estimate of the n-truncation
};

// Right side of the two-term line-integral representation of
// xi(s0) xi(s0 - a), summed over n <= n_trunc. Integer a (odd uses the
// duplication closed form; even multiplies the g factors directly).
IntegralResult xi_pair_integral(int a, const Complex& s0, const LineIntegralSpec& spec,
                                long n_trunc, const PrecisionContext& ctx);

// Line-integral representation of the single xi(s0).
IntegralResult xi_single_integral(const Complex& s0, const LineIntegralSpec& spec,
                                  long n_trunc, const PrecisionContext& ctx);

// The tail sum  sum_{n >= p_{N+1}, n not p_N-smooth, n <= n_max}
//   sigma_a(n) [J_a(n, s0) + J_a(n, a+1-s0)]  which equals
// xi(s0) xi(s0-a) - Xi_{N,a}(s0).
Complex xixi_minus_Xi(int N, int a, const Complex& s0, long n_max, const PrecisionContext& ctx);

// Xi_{N,a}(s0) via the tail representation. Entire and symmetric under
// s0 -> a + 1 - s0 (the reflection fixing the product's critical line).
Complex xi_approx_via_tail(int N, int a, const Complex& s0, long n_max,
                           const PrecisionContext& ctx);

// Numerical value of the constraint generator: the k-indexed two-term line
// integral summed over n <= n_trunc, which vanishes for odd a and k >= 0.
Complex constraint_quadrature(int a, int k, const LineIntegralSpec& spec, long n_trunc,
                              const PrecisionContext& ctx);

}  // namespace divsum::mellin

#endif
