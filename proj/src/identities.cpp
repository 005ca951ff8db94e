#include "divsum/identities.hpp"

#include <cmath>

#include "divsum/arith.hpp"
#include "divsum/errors.hpp"
#include "divsum/specfun.hpp"

namespace divsum::identities {

using kernels::KernelForm;
using kernels::KernelSpec;
using kernels::Variant;

mpq_class target_value(const KernelSpec& spec) {
    spec.validate();
    switch (spec.variant) {
        case Variant::cor3:
            if (spec.a == 1) return mpq_class(1, 24);
            if (spec.a == 3) return mpq_class(1, 240);
            return mpq_class(1, 504);
        case Variant::higher_inhomogeneous:
            if (spec.a == 7) return mpq_class(1, 225);
            if (spec.a == 9) return mpq_class(4, 693);
            return mpq_class(11056, 1289925);
        default:
            return mpq_class(0);
    }
}

Real term_value(const KernelSpec& spec, long n, const PrecisionContext& ctx) {
    spec.validate();
    if (n < 1) throw DomainError("term_value: n must be >= 1");
    Real sig(arith::sigma(spec.a, n), ctx.prec());
    Real v(0, ctx.prec());
    switch (spec.variant) {
        case Variant::constraint: {
            Real ker = spec.form == KernelForm::poly
                           ? kernels::constraint_kernel_poly(spec.a, spec.k, n, ctx)
                           : kernels::constraint_kernel_1f1(spec.a, spec.k, n, ctx);
            v = sig * ker * exp(-(ctx.two_pi() * n));
            break;
        }
        case Variant::cor3:
            v = sig * kernels::cor3_kernel(spec.a, n, ctx) * exp(-(ctx.two_pi() * n));
            break;
        case Variant::higher_homogeneous:
        case Variant::higher_inhomogeneous:
            v = sig * kernels::higher_a_kernel(spec.a, spec.variant, n, ctx) *
                exp(-(ctx.two_pi() * n));
            break;
        case Variant::bessel_a0:
            v = sig * kernels::bessel_kernel_a0(n, ctx);
            break;
        case Variant::normalized_Q:
            v = sig * kernels::normalized_Q(spec.a, spec.k, n, ctx);
            break;
    }
    return round_to(v, ctx.prec());
}

namespace {

// sum_{n>N} n^D e^(-2 pi n) <= (N+1)^D e^(-2 pi (N+1)) / (1 - (1+1/N)^D e^(-2 pi)).
Real geometric_majorant(const Real& D, long N, const PrecisionContext& ctx) {
    mpfr_prec_t prec = ctx.prec();
    Real two_pi = ctx.two_pi();
    Real n1(N + 1, prec);
    Real lead = pow(n1, D) * exp(-(two_pi * n1));
    Real ratio = pow(Real(1, prec) + Real(1, prec) / N, D) * exp(-two_pi);
    if (!(ratio < 1))
        throw PrecisionError("tail_bound: N_trunc too small for a convergent majorant");
    return lead / (1 - ratio);
}

// |kernel(n)| <= K n^d for n >= 1, with exact-coefficient K where available.
struct KernelMajorant {
    Real K;
    long d;
};

KernelMajorant kernel_majorant(const KernelSpec& spec, const PrecisionContext& ctx) {
    mpfr_prec_t prec = ctx.prec();
    Real pi = ctx.pi();
    Real two_pi = 2 * pi;
    switch (spec.variant) {
        case Variant::constraint: {
            int deg = kernels::constraint_poly_degree(spec.a, spec.k);
            Real cmax(kernels::constraint_poly_abs_coeff_sum(spec.a, spec.k), prec);
            Real K = cmax * pow_si(two_pi, deg);
            if (spec.form == KernelForm::hyp1f1)
                K *= abs(kernels::constraint_norm_constant(spec.a, spec.k, ctx)) * 2;
            return {K, deg};
        }
        case Variant::normalized_Q: {
            int deg = kernels::constraint_poly_degree(spec.a, spec.k);
            Real cmax(kernels::constraint_poly_abs_coeff_sum(spec.a, spec.k), prec);
            Real denom = abs(kernels::constraint_poly_at(spec.a, spec.k, two_pi, ctx)) * exp(-two_pi);
            // weight e^(-2 pi n) is part of the kernel here
            return {cmax * pow_si(two_pi, deg) / denom, deg};
        }
        case Variant::cor3:
            if (spec.a == 1) return {two_pi * two_pi + 6 * pi + 1, 2};
            if (spec.a == 3) return {pi, 1};
            return {Real(1, prec), 0};
        case Variant::higher_homogeneous: {
            long s;
            int dy, p;
            if (spec.a == 7) { s = 45 + 90 + 105 + 90 + 60 + 32 + 16; dy = 6; p = 5; }
            else if (spec.a == 9) { s = 945 + 1890 + 1890 + 1260 + 588 + 168 + 32; dy = 7; p = 7; }
            else { s = 17010 + 34020 + 32445 + 19530 + 7980 + 2016 + 96 + 160 + 64; dy = 8; p = 9; }
            return {Real(s, prec) * pow_si(pi, dy), dy - p};
        }
        case Variant::higher_inhomogeneous: {
            long s;
            if (spec.a == 7) s = 3 + 6 + 7 + 6 + 4;
            else if (spec.a == 9) s = 45 + 90 + 90 + 60 + 28 + 8;
            else s = 630 + 1260 + 1215 + 750 + 324 + 96 + 16;
            // numerator <= s (pi n)^dy, denominator (pi n)^p with dy < p
            return {Real(s, prec), 0};
        }
        case Variant::bessel_a0: {
            // K_nu(2 pi n) <= 2 sqrt(pi/(4 pi n)) e^(-2 pi n) = e^(-2 pi n)/sqrt(n)
            // for nu = 0, 1 and n >= 1; the bracket is <= C n^3, so the kernel
            // is <= C n^(2+3-1/2) e^(-2 pi n). The half power is added by the
            // caller.
            Real C = 84 * pi * pi + 45 + 16 * pi * (pi * pi + 6);
            return {2 * C, 4};
        }
    }
    throw SpecError("kernel_majorant: unhandled variant");
}

}  // namespace

Real tail_bound(const KernelSpec& spec, long n_trunc, const PrecisionContext& ctx) {
    spec.validate();
    if (n_trunc < 2) throw DomainError("tail_bound: N_trunc must be >= 2");
    KernelMajorant km = kernel_majorant(spec, ctx);
    // sigma_a(n) <= n^(a+1); for bessel_a0 the K-Bessel majorant contributes
    // the e^(-2 pi n) decay and an extra n^(-1/2).
    Real D(spec.a + 1 + km.d, ctx.prec());
    if (spec.variant == Variant::bessel_a0) D = D + Real(0.5, ctx.prec());
    return km.K * geometric_majorant(D, n_trunc, ctx);
}

namespace {

// The bessel family cancels through ~2 pi N / ln 10 digits before its
// partial sum emerges; refuse precision that cannot resolve it.
void check_cancellation_depth(const KernelSpec& spec, long max_n, const PrecisionContext& ctx) {
    if (spec.variant != Variant::bessel_a0) return;
    int required = static_cast<int>(std::ceil(2.7287527 * static_cast<double>(max_n + 1)));
    if (ctx.digits() < required)
        throw PrecisionError("bessel_a0 sums to n = " + std::to_string(max_n) + " need >= " +
                             std::to_string(required) + " working digits");
}

}  // namespace

IdentityReport evaluate_identity(const KernelSpec& spec, long n_trunc,
                                 const PrecisionContext& ctx, int tolerance_digits) {
    spec.validate();
    if (n_trunc < 2) throw DomainError("evaluate_identity: N_trunc must be >= 2");
    check_cancellation_depth(spec, n_trunc, ctx);
    IdentityReport rep;
    rep.spec = spec;
    rep.trunc = n_trunc;
    rep.digits = ctx.digits();
    rep.target = target_value(spec);
    rep.tail_bound = tail_bound(spec, n_trunc, ctx);
    if (tolerance_digits >= 0) {
        Real want = pow10(-tolerance_digits, ctx.prec());
        if (rep.tail_bound > want || ctx.rounding_floor() > want)
            throw PrecisionError("evaluate_identity: tail bound or rounding floor exceeds the "
                                 "requested tolerance for " + spec.id());
    }
    Real acc(0, ctx.prec());
    for (long n = 1; n <= n_trunc; ++n) acc += term_value(spec, n, ctx);
    rep.value = acc;
    rep.abs_error = abs(acc - Real(rep.target, ctx.prec()));
    rep.pass = rep.abs_error <= rep.tail_bound + ctx.rounding_floor();
    return rep;
}

PartialSumTable partial_sums(const KernelSpec& spec, const std::vector<long>& cutoffs,
                             const PrecisionContext& ctx) {
    spec.validate();
    for (size_t i = 1; i < cutoffs.size(); ++i)
        if (cutoffs[i] <= cutoffs[i - 1]) throw DomainError("partial_sums: cutoffs must ascend");
    if (!cutoffs.empty() && cutoffs.front() < 1)
        throw DomainError("partial_sums: cutoffs must be >= 1");
    if (!cutoffs.empty()) check_cancellation_depth(spec, cutoffs.back(), ctx);
    PartialSumTable table;
    table.spec = spec;
    table.cutoffs = cutoffs;
    Real acc(0, ctx.prec());
    long n = 1;
    for (long cut : cutoffs) {
        for (; n <= cut; ++n) acc += term_value(spec, n, ctx);
        table.values.push_back(acc);
    }
    return table;
}

}  // namespace divsum::identities
