#include "divsum/mellin.hpp"

#include <cmath>
#include <functional>
#include <vector>

#include "divsum/arith.hpp"
#include "divsum/errors.hpp"
#include "divsum/quadrature.hpp"
#include "divsum/specfun.hpp"

namespace divsum::mellin {

namespace {

constexpr double kLn10 = 2.302585092994046;
constexpr double kPi = 3.141592653589793;

Real at_prec(const Real& x, mpfr_prec_t prec) {
    if (x.prec() >= prec) return x;
    return x + Real(0, prec);
}

Complex at_prec(const Complex& z, mpfr_prec_t prec) {
    return {at_prec(z.re, prec), at_prec(z.im, prec)};
}

void check_a_135(int a) {
    if (!(a == 1 || a == 3 || a == 5)) throw SpecError("J transforms exist for a in {1,3,5}");
}

// Cutoff T with envelope |t|^poly_deg e^(-pi |t| / 2) below 10^-(tol+6).
double choose_T(double poly_deg, double log10_scale, int tol_digits) {
    double L = (tol_digits + log10_scale + 8.0) * kLn10;
    double T = 2.0 * L / kPi + 8.0;
    for (int i = 0; i < 50; ++i)
        T = (2.0 / kPi) * (L + std::max(0.0, poly_deg) * std::log(std::max(T, 3.0)));
    return T + 6.0;
}

// g(s) g(s - a) for integer a: duplication closed form when a is odd,
// direct product otherwise.
Complex gg_any(int a, const Complex& s, const PrecisionContext& ctx) {
    if (a >= 1 && a % 2 == 1) return specfun::gg_product(a, s, ctx);
    return specfun::g_func(s, ctx) * specfun::g_func(s - a, ctx);
}

}  // namespace

Complex j_closed(int a, long n, const Complex& s0, const PrecisionContext& ctx) {
    check_a_135(a);
    if (n < 1) throw DomainError("j_closed: n must be >= 1");
    if (a == 5 && s0.equals_int(3)) throw PoleError("j_closed: J_5 has a pole at s0 = 3");
    mpfr_prec_t prec = ctx.prec();
    Real pi = ctx.pi();
    Real x = 2 * pi * n;  // 2 pi n
    Complex s = at_prec(s0, prec);
    if (a == 1) {
        Complex b = 6 * specfun::inc_gamma_upper(s + 1, x, ctx) -
                    6 * specfun::inc_gamma_upper(s + 2, x, ctx) +
                    specfun::inc_gamma_upper(s + 3, x, ctx);
        return pi * pow(x, -s) * b;
    }
    if (a == 3) {
        Complex e = specfun::expint_E(-s, x, ctx);
        return 4 * pow_si(pi, 3) * n * ((s - 4) * e + Complex(exp(-x)));
    }
    Complex e = specfun::expint_E(-s, x, ctx);
    Real ex = exp(-x);
    Complex num = pow_si(Complex(x), 4) * (s - 6) * e +
                  Complex(12 * pi * n * ex * (pi * n * (x + 3) + 3) + 18 * ex);
    return 4 * pow_si(pi, 3) * num / (pow_si(Complex(x), 3) * (s - 3));
}

Real j_leading_scale(int a, long n, const PrecisionContext& ctx) {
    check_a_135(a);
    Real pi = ctx.pi();
    Real x = 2 * pi * n;
    if (a == 1) return pi * x * x * exp(-x);
    if (a == 3) return 2 * pi * pi * x * exp(-x);
    return 4 * pow_si(pi, 3) * exp(-x);
}

Complex j_quadrature(int a, long n, const Complex& s0, const LineIntegralSpec& spec,
                     const PrecisionContext& ctx) {
    check_a_135(a);
    if (n < 1) throw DomainError("j_quadrature: n must be >= 1");
    double s0re = s0.re.to_double();
    if (!(spec.abscissa > s0re)) throw SpecError("j_quadrature: abscissa must exceed Re(s0)");
    if (a == 5 && !(spec.abscissa > 3))
        throw SpecError("j_quadrature: abscissa must exceed 3 for a = 5");

    // All poles sit left of the requested line, so the line may move further
    // right without changing the integral. Near the saddle of
    // Gamma(s+1) (2 pi n)^-s, at Re(s) ~ 2 pi n - 1, the integrand scale
    // matches the e^(-2 pi n)-sized transform value and no cancellation
    // digits are burned.
    double x = 2 * kPi * static_cast<double>(n);
    double sigma = std::max(spec.abscissa, x - 1.0);
    // Residual cancellation on the chosen line, and the transform's own scale
    // (~ x^2 e^-x): resolving the latter keeps the result relatively accurate
    // to tol_digits, not merely absolutely.
    double peak_log10 = (std::lgamma(sigma + 1.0) - sigma * std::log(x)) / kLn10;
    double result_log10 = (2.0 * std::log(x) - x) / kLn10;
    int cancel = std::max(0, static_cast<int>(std::ceil(peak_log10 - result_log10))) + 5;
    int rel_shift = std::max(0, static_cast<int>(std::ceil(-result_log10)));
    int digits_q = std::max(ctx.digits(), spec.tol_digits + rel_shift + cancel + 30);
    PrecisionContext qctx(digits_q, 10);
    mpfr_prec_t prec = qctx.prec();

    Real pi = Real::pi(prec);
    Real ln_2pin = log(2 * pi * n);
    Complex s0_hi = at_prec(s0, prec);
    Real sig(sigma, prec);

    std::function<Complex(const Real&)> f = [&](const Real& t) -> Complex {
        Complex s(sig, t);
        Complex core = specfun::gamma(s + 1, qctx);
        if (a == 1)
            core = pi * (s - 2) * (s - 1) * core;
        else if (a == 3)
            core = 2 * pi * pi * (s - 4) * core;
        else
            core = 4 * pow_si(pi, 3) * (s - 6) * core / (s - 3);
        Complex dec = exp(Complex(-s.re * ln_2pin, -s.im * ln_2pin));  // (2 pi n)^-s
        return core * dec / (s - s0_hi);
    };

    Real tol = pow10(-(spec.tol_digits + rel_shift + 4), prec);
    double T;
    if (spec.im_cutoff > 0) {
        T = spec.im_cutoff;
    } else {
        // Gamma decays like a Gaussian of width sqrt(sigma) around t = 0 and
        // like e^(-pi |t|/2) past |t| ~ sigma; cover both regimes, then
        // verify against the actual integrand magnitude.
        double L = (spec.tol_digits + rel_shift + cancel + 10) * kLn10;
        T = std::max(std::sqrt(2.0 * (sigma + 1.0) * L) + 10.0,
                     choose_T(sigma + 3.5, 0.0, spec.tol_digits));
        Real floor_mag = tol / (16 * Real(T, prec));
        for (int i = 0; i < 60; ++i) {
            if (abs(f(Real(T, prec))) < floor_mag) break;
            T *= 1.2;
        }
    }
    auto q = quadrature::integrate(f, Real(-T, prec), Real(T, prec), tol, prec);
    return q.value / (2 * pi);
}

Complex xi_pair_direct(int a, const Complex& s0, const PrecisionContext& ctx) {
    return specfun::xi(s0, ctx) * specfun::xi(s0 - a, ctx);
}

namespace {

struct SumTables {
    std::vector<Real> sigma_vals;  // sigma_a(n), n = 1..n_trunc
    std::vector<Real> ln_n;
    std::vector<Real> n_pow_ma;  // n^-a
};

SumTables make_tables(int a, long n_trunc, mpfr_prec_t prec) {
    SumTables t;
    t.sigma_vals.reserve(static_cast<size_t>(n_trunc));
    t.ln_n.reserve(static_cast<size_t>(n_trunc));
    t.n_pow_ma.reserve(static_cast<size_t>(n_trunc));
    for (long n = 1; n <= n_trunc; ++n) {
        t.sigma_vals.emplace_back(arith::sigma(a, n), prec);
        t.ln_n.emplace_back(log(Real(n, prec)));
        t.n_pow_ma.emplace_back(pow_si(Real(n, prec), -a));
    }
    return t;
}

Real first_omitted_estimate(int a, long n_trunc, const Complex& s0, mpfr_prec_t prec) {
    Real pi = Real::pi(prec);
    Real x = 2 * pi * (n_trunc + 1);
    Real s0a = hypot(s0.re, s0.im) + std::abs(a) + 2;
    return 8 * pow_si(pi, 3) * pow(Real(n_trunc + 1, prec), Real(a + 1, prec)) *
           (x * x + s0a * s0a) * exp(-x);
}

}  // namespace

IntegralResult xi_pair_integral(int a, const Complex& s0, const LineIntegralSpec& spec,
                                long n_trunc, const PrecisionContext& ctx) {
    if (a < 0) throw SpecError("xi_pair_integral: a must be a non-negative integer");
    if (n_trunc < 1) throw DomainError("xi_pair_integral: n_trunc must be >= 1");
    double s0re = s0.re.to_double();
    double sigma = spec.abscissa;
    double need = std::max({s0re, 1.0 - s0re, static_cast<double>(a) - 2.0,
                            static_cast<double>(a) + 1.0});
    if (!(sigma > need))
        throw SpecError("xi_pair_integral: abscissa must exceed max(Re s0, 1-Re s0, a-2, a+1)");

    int digits_q = std::max(ctx.digits(), spec.tol_digits + 20);
    PrecisionContext qctx(digits_q, 10);
    mpfr_prec_t prec = qctx.prec();
    SumTables tab = make_tables(a, n_trunc, prec);
    Complex s0_hi = at_prec(s0, prec);
    Real sig(sigma, prec);

    std::function<Complex(const Real&)> f = [&](const Real& t) -> Complex {
        Complex s(sig, t);
        Complex gg_m = gg_any(a, s, qctx);
        Complex gg_p = gg_any(a, s + a, qctx);  // g(s) g(s+a), shifted duplication form
        Complex acc(0, prec);
        for (size_t i = 0; i < tab.sigma_vals.size(); ++i) {
            Complex npw = exp(Complex(-s.re * tab.ln_n[i], -s.im * tab.ln_n[i]));
            Complex term = gg_m * npw / (s - s0_hi) +
                           gg_p * npw * tab.n_pow_ma[i] / (s - 1 + s0_hi);
            acc += tab.sigma_vals[i] * term;
        }
        return acc;
    };

    double T = spec.im_cutoff > 0 ? spec.im_cutoff
                                  : choose_T(sigma + 3.5 + a, 1.0, spec.tol_digits);
    Real tol = pow10(-(spec.tol_digits + 4), prec);
    auto q = quadrature::integrate(f, Real(-T, prec), Real(T, prec), tol, prec);
    IntegralResult out;
    out.value = q.value / (2 * Real::pi(prec));
    out.quad_error = q.error_estimate / (2 * Real::pi(prec));
    out.trunc_error = first_omitted_estimate(a, n_trunc, s0_hi, prec);
    return out;
}

IntegralResult xi_single_integral(const Complex& s0, const LineIntegralSpec& spec,
                                  long n_trunc, const PrecisionContext& ctx) {
    if (n_trunc < 1) throw DomainError("xi_single_integral: n_trunc must be >= 1");
    double s0re = s0.re.to_double();
    double sigma = spec.abscissa;
    if (!(sigma > std::max({s0re, 1.0 - s0re, 1.0})))
        throw SpecError("xi_single_integral: abscissa must exceed max(Re s0, 1-Re s0, 1)");

    int digits_q = std::max(ctx.digits(), spec.tol_digits + 20);
    PrecisionContext qctx(digits_q, 10);
    mpfr_prec_t prec = qctx.prec();
    std::vector<Real> ln_n;
    for (long n = 1; n <= n_trunc; ++n) ln_n.emplace_back(log(Real(n, prec)));
    Complex s0_hi = at_prec(s0, prec);
    Real sig(sigma, prec);

    std::function<Complex(const Real&)> f = [&](const Real& t) -> Complex {
        Complex s(sig, t);
        Complex g = specfun::g_func(s, qctx);
        Complex poles = 1 / (s - s0_hi) + 1 / (s - 1 + s0_hi);
        Complex acc(0, prec);
        for (const Real& ln : ln_n) acc += exp(Complex(-s.re * ln, -s.im * ln));
        return g * poles * acc;
    };

    double T = spec.im_cutoff > 0 ? spec.im_cutoff : choose_T(sigma / 2 + 2.5, 1.0, spec.tol_digits);
    Real tol = pow10(-(spec.tol_digits + 4), prec);
    auto q = quadrature::integrate(f, Real(-T, prec), Real(T, prec), tol, prec);
    IntegralResult out;
    out.value = q.value / (2 * Real::pi(prec));
    out.quad_error = q.error_estimate / (2 * Real::pi(prec));
    Real pi = Real::pi(prec);
    Real x = pi * (n_trunc + 1);  // single-xi terms decay like e^(-pi n) via Gamma(s/2)
    out.trunc_error = Real(n_trunc + 1, prec) * exp(-x) * 100;
    return out;
}

Complex xixi_minus_Xi(int N, int a, const Complex& s0, long n_max, const PrecisionContext& ctx) {
    check_a_135(a);
    if (N < 1) throw DomainError("xixi_minus_Xi: N must be >= 1");
    long p_smooth = arith::nth_prime(N);
    long p_first = arith::nth_prime(N + 1);
    if (n_max < p_first)
        throw DomainError("xixi_minus_Xi: n_max must reach p_{N+1}");
    mpfr_prec_t prec = ctx.prec();
    Complex s0_hi = at_prec(s0, prec);
    Complex refl = Complex(Real(a + 1, prec), Real(0, prec)) - s0_hi;
    Complex acc(0, prec);
    for (long n = p_first; n <= n_max; ++n) {
        if (arith::is_smooth(n, p_smooth)) continue;
        Real sig(arith::sigma(a, n), prec);
        acc += sig * (j_closed(a, n, s0_hi, ctx) + j_closed(a, n, refl, ctx));
    }
    return acc;
}

Complex xi_approx_via_tail(int N, int a, const Complex& s0, long n_max,
                           const PrecisionContext& ctx) {
    return xi_pair_direct(a, s0, ctx) - xixi_minus_Xi(N, a, s0, n_max, ctx);
}

Complex constraint_quadrature(int a, int k, const LineIntegralSpec& spec, long n_trunc,
                              const PrecisionContext& ctx) {
    if (a < 1 || a % 2 == 0) throw SpecError("constraint_quadrature: a must be odd positive");
    if (k < 0) throw DomainError("constraint_quadrature: k must be >= 0");
    if (n_trunc < 1) throw DomainError("constraint_quadrature: n_trunc must be >= 1");
    double sigma = spec.abscissa;
    double need = std::max(1.0, static_cast<double>(a) - 2.0);
    if (!(sigma > need))
        throw SpecError("constraint_quadrature: abscissa must exceed the pole bound");

    int digits_q = std::max(ctx.digits(), spec.tol_digits + 25);
    PrecisionContext qctx(digits_q, 10);
    mpfr_prec_t prec = qctx.prec();
    SumTables tab = make_tables(a, n_trunc, prec);
    Real sig(sigma, prec);

    std::function<Complex(const Real&)> f = [&](const Real& t) -> Complex {
        Complex s(sig, t);
        Complex gg_m = specfun::gg_product(a, s, qctx);
        Complex gg_p = specfun::gg_product(a, s + a, qctx);
        Complex minus_s_k = pow_si(-s, k);
        Complex s1_k = pow_si(s - 1, k);
        Complex acc(0, prec);
        for (size_t i = 0; i < tab.sigma_vals.size(); ++i) {
            Complex npw = exp(Complex(-s.re * tab.ln_n[i], -s.im * tab.ln_n[i]));
            Complex term = -gg_m * npw * minus_s_k + gg_p * npw * tab.n_pow_ma[i] * s1_k;
            acc += tab.sigma_vals[i] * term;
        }
        return acc;
    };

    double T = spec.im_cutoff > 0 ? spec.im_cutoff
                                  : choose_T(sigma + 3.5 + a + k, 1.0, spec.tol_digits);
    Real tol = pow10(-(spec.tol_digits + 4), prec);
    auto q = quadrature::integrate(f, Real(-T, prec), Real(T, prec), tol, prec);
    return q.value / (2 * Real::pi(prec));
}

}  // namespace divsum::mellin
