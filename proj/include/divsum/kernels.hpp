#ifndef DIVSUM_KERNELS_HPP
#define DIVSUM_KERNELS_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "divsum/precision.hpp"

namespace divsum::kernels {

enum class Variant {
    constraint,            // k-indexed vanishing families, a in {1,3,5}
    cor3,                  // closed sums with targets 1/24, 1/240, 1/504
    higher_homogeneous,    // a in {7,9,11}, target 0
    higher_inhomogeneous,  // a in {7,9,11}, rational targets
    bessel_a0,             // a = 0, K-Bessel kernel
    normalized_Q,          // Q_k(2 pi n) e^(-2 pi n), a in {1,3,5}, k >= 0
};

enum class KernelForm { poly, hyp1f1 };

struct KernelSpec {
    int a = 1;
    int k = -1;  // constraint index; -1 when the family has none
    Variant variant = Variant::constraint;
    KernelForm form = KernelForm::poly;  // only meaningful for constraint

    void validate() const;  // throws SpecError on invalid combinations
    std::string id() const;
};

const char* variant_name(Variant v);

// Exact coefficients of the constraint polynomial P_k^(a): P(x) =
// x^(k+1) * sum_j coeffs[j] x^j with x = 2 pi n. Cached per (a, k).
const std::vector<mpq_class>& constraint_poly_coeffs(int a, int k);

// Degree of P_k^(a) in x: 2k+4, 2k+3, 2k+2 for a = 1, 3, 5.
int constraint_poly_degree(int a, int k);

// Sum of |coefficients| (for tail majorants), exact.
mpq_class constraint_poly_abs_coeff_sum(int a, int k);

// P_k^(a)(x) by Horner at arbitrary real x.
Real constraint_poly_at(int a, int k, const Real& x, const PrecisionContext& ctx);

// P_k^(a)(2 pi n): the finite j-sum of the polynomial constraint form,
// without the e^(-2 pi n) factor.
Real constraint_kernel_poly(int a, int k, long n, const PrecisionContext& ctx);

// The bracketed terminating-1F1 combination of the constraint families.
Real constraint_kernel_1f1(int a, int k, long n, const PrecisionContext& ctx);

// Fixed positive normalization with constraint_kernel_1f1 =
// norm * constraint_kernel_poly. Determined once per (a, k) numerically at
// doubled precision and verified at a second probe point.
Real constraint_norm_constant(int a, int k, const PrecisionContext& ctx);

// Rational-target kernels: a=1: 2 pi n (2 pi n - 3) + 1; a=3: pi n - 1; a=5: 1.
Real cor3_kernel(int a, long n, const PrecisionContext& ctx);

// The printed rational-in-n kernels for a = 7, 9, 11.
Real higher_a_kernel(int a, Variant variant, long n, const PrecisionContext& ctx);

// n^2 [(84 pi^2 n^2 + 45) K0(2 pi n) - 16 pi n (pi^2 n^2 + 6) K1(2 pi n)].
Real bessel_kernel_a0(long n, const PrecisionContext& ctx);

// Q_k(2 pi n) e^(-2 pi n) with Q_k(x) = P_k(x) / (P_k(2 pi) e^(-2 pi)).
// n = 1 gives exactly 1.
Real normalized_Q(int a, int k, long n, const PrecisionContext& ctx);

}  // namespace divsum::kernels

#endif
