#ifndef DIVSUM_IDENTITIES_HPP
#define DIVSUM_IDENTITIES_HPP

#include <gmpxx.h>

#include <vector>

#include "divsum/kernels.hpp"
#include "divsum/precision.hpp"

namespace divsum::identities {

// Outcome of one truncated-sum verification against its exact target.
struct IdentityReport {
    kernels::KernelSpec spec;
    long trunc = 0;
    int digits = 0;
    Real value;
    mpq_class target;
    Real tail_bound;
    Real abs_error;
    bool pass = false;
};

struct PartialSumTable {
    kernels::KernelSpec spec;
    std::vector<long> cutoffs;
    std::vector<Real> values;
};

// Exact rational target of the family (0 for the vanishing ones).
mpq_class target_value(const kernels::KernelSpec& spec);

// One summand sigma_a(n) * kernel(n) * weight(n).
Real term_value(const kernels::KernelSpec& spec, long n, const PrecisionContext& ctx);

// Proven majorant of the discarded remainder beyond n = N_trunc, via
// sigma_a(n) <= n^(a+1), an absolute-coefficient kernel bound, and the
// geometric-type majorant of sum_{n>N} n^D e^(-2 pi n).
Real tail_bound(const kernels::KernelSpec& spec, long n_trunc, const PrecisionContext& ctx);

// Accumulate the truncated sum in ascending n and compare with the target.
// Verdict: |value - target| <= tail_bound + 10^-(digits - guard).
// When tolerance_digits >= 0 and the tail bound or the rounding floor cannot
// certify 10^-tolerance_digits, throws PrecisionError instead of reporting.
IdentityReport evaluate_identity(const kernels::KernelSpec& spec, long n_trunc,
                                 const PrecisionContext& ctx, int tolerance_digits = -1);

// Partial sums at the given ascending cutoffs (one pass).
PartialSumTable partial_sums(const kernels::KernelSpec& spec, const std::vector<long>& cutoffs,
                             const PrecisionContext& ctx);

}  // namespace divsum::identities

#endif
