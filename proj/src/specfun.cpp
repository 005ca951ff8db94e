#include "divsum/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

namespace divsum::specfun {

namespace {

constexpr double kLn10 = 2.302585092994046;
constexpr double kLog10OverTwoPi = 0.36651292058166435;  // ln(10)/(2*pi)

mpfr_prec_t bits_for(int digits) { return PrecisionContext::bits_for(digits); }

Real at_prec(const Real& x, mpfr_prec_t prec) {
    if (x.prec() >= prec) return x;
    return x + Real(0L, prec);
}

Complex at_prec(const Complex& z, mpfr_prec_t prec) {
    return Complex(at_prec(z.re, prec), at_prec(z.im, prec));
}

bool is_nonpositive_integer(const Complex& s) {
    return s.im.is_zero() && s.re <= 0L && s.re == floor(s.re);
}

// B_{2j} / (2j)! as an exact rational, converted at the given precision.
Real bern_over_fact(int j, mpfr_prec_t prec) {
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * j));
    mpq_class q = bernoulli_2j(j) / mpq_class(fact);
    return Real(q, prec);
}

// ln Gamma(z) by the Stirling series; caller guarantees Re(z) large enough
// for `digits` decimal digits of absolute accuracy.
Complex stirling_lngamma(const Complex& z, int digits, mpfr_prec_t prec) {
    Real half(0.5, prec);
    Complex lz = log(z);
    Complex acc = (z - half) * lz - z;
    Real pi = Real::pi(prec);
    acc += Complex(log(2 * pi) / 2, Real(0L, prec));
    Complex zinv = 1 / z;
    Complex zinv2 = zinv * zinv;
    Complex zpow = zinv;  // z^(1-2j) for j = 1
    Real eps = pow10(-(digits + 5), prec);
    for (int j = 1; j <= 4 * digits + 64; ++j) {
        Real c = bern_over_fact(j, prec);
        // B_{2j}/((2j)(2j-1) z^(2j-1)) = [B_{2j}/(2j)!] * (2j-2)! * z^(1-2j)
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(2 * j - 2));
        Complex term = zpow * (c * Real(f, prec));
        acc += term;
        if (abs(term) < eps) return acc;
        zpow *= zinv2;
    }
    throw PrecisionError("stirling_lngamma: series did not reach tolerance");
}

Complex gamma_impl(const Complex& s, int digits) {
    if (is_nonpositive_integer(s))
        throw PoleError("gamma: pole at non-positive integer");
    double sre = s.re.to_double();
    double sim = s.im.to_double();
    if (sre < 0.5) {
        // Reflection: Gamma(s) = pi / (sin(pi s) Gamma(1 - s)).
        mpfr_prec_t prec = bits_for(digits + 12 + static_cast<int>(std::ceil(std::log10(1.0 + std::abs(sre)))));
        Real pi = Real::pi(prec);
        Complex s_hi = at_prec(s, prec);
        Complex g1 = gamma_impl(1 - s_hi, digits + 5);
        Complex sp = sin(Complex(pi * s_hi.re, pi * s_hi.im));
        return Complex(pi) / (sp * g1);
    }
    int threshold = std::max(20, static_cast<int>(std::ceil(kLog10OverTwoPi * (digits + 34))) + 4);
    long shift = 0;
    if (sre < threshold) shift = static_cast<long>(std::ceil(threshold - sre));
    double zre = sre + static_cast<double>(shift);
    double zabs = std::hypot(zre, sim);
    // exp() of lnGamma needs lnGamma to absolute accuracy; account for its size.
    int extra = 12 + static_cast<int>(std::ceil(std::log10(1.0 + zabs * (std::log(zabs) + 2.0))));
    mpfr_prec_t prec = bits_for(digits + extra);
    Complex s_hi = at_prec(s, prec);
    Complex z = s_hi + shift;
    Complex lg = stirling_lngamma(z, digits + extra - 4, prec);
    Complex result = exp(lg);
    if (shift > 0) {
        Complex prod(1, prec);
        Complex w = s_hi;
        for (long i = 0; i < shift; ++i) {
            prod *= w;
            w += Complex(1, prec);
        }
        result = result / prod;
    }
    return result;
}

}  // namespace

Complex gamma(const Complex& s, const PrecisionContext& ctx) {
    return gamma_impl(s, ctx.digits() + ctx.guard_digits());
}

namespace {

Complex em_zeta1_impl(const Complex& s, int digits) {
    if (s.equals_int(1)) return Complex(1, bits_for(digits));
    double sim = std::abs(s.im.to_double());
    double sre = s.re.to_double();
    int M = std::max(16, static_cast<int>(std::ceil(0.40 * digits + 0.25 * sim - 0.5 * std::min(0.0, sre))) + 8);
    int extra = 12 + static_cast<int>(std::ceil(std::log10(static_cast<double>(M)) * std::max(0.0, -sre + 2.0)));
    mpfr_prec_t prec = bits_for(digits + extra);
    Complex s_hi = at_prec(s, prec);
    Complex minus_s = -s_hi;

    Complex acc(1, prec);  // n = 1 term
    for (long n = 2; n < M; ++n) {
        Real ln_n = log(Real(n, prec));
        acc += exp(Complex(minus_s.re * ln_n, minus_s.im * ln_n));
    }
    Real ln_M = log(Real(M, prec));
    Complex M_minus_s = exp(Complex(minus_s.re * ln_M, minus_s.im * ln_M));
    Complex pole_part = M_minus_s * Real(M, prec);  // M^(1-s)
    Complex half_term = M_minus_s / 2;

    // Correction terms  sum_j B_{2j}/(2j)! (s)_{2j-1} M^(1-s-2j).
    Complex corr(0, prec);
    Complex poch = s_hi;                      // (s)_1
    Real Minv2 = Real(1, prec) / Real(static_cast<long>(M) * M, prec);
    Complex Mpow = M_minus_s / Real(M, prec);  // M^(-s-1)
    Real eps = pow10(-(digits + 8), prec);
    Real scale = abs(acc);
    if (scale < Real(1, prec)) scale = Real(1, prec);
    bool converged = false;
    for (int j = 1; j <= 6 * M + 64; ++j) {
        Complex term = poch * Mpow * bern_over_fact(j, prec);
        corr += term;
        if (abs(term) < eps * scale) {
            converged = true;
            break;
        }
        poch *= (s_hi + (2 * j - 1)) * (s_hi + (2 * j));
        Mpow = Mpow * Minv2;
    }
    if (!converged) throw PrecisionError("zeta: Euler-Maclaurin did not reach tolerance");
    return (s_hi - 1) * (acc + half_term + corr) + pole_part;
}

}  // namespace

Complex zeta_times_s_minus_1(const Complex& s, const PrecisionContext& ctx) {
    return em_zeta1_impl(s, ctx.digits() + ctx.guard_digits());
}

Complex zeta(const Complex& s, const PrecisionContext& ctx) {
    if (s.equals_int(1)) throw PoleError("zeta: pole at s = 1");
    Complex z1 = em_zeta1_impl(s, ctx.digits() + ctx.guard_digits() + 5);
    return z1 / (s - 1);
}

Complex g_func(const Complex& s, const PrecisionContext& ctx) {
    mpfr_prec_t prec = std::max<mpfr_prec_t>(ctx.prec(), s.prec());
    Complex s_hi = at_prec(s, prec);
    Complex half_s = s_hi / 2;
    Complex gam = gamma(half_s + 1, ctx);  // pole surfaces here
    Real pi = Real::pi(prec);
    Complex pref = pow(pi, -half_s);
    return pref * (s_hi - 1) * gam;
}

Complex xi(const Complex& s, const PrecisionContext& ctx) {
    // xi = pi^(-s/2) Gamma(s/2+1) * [(s-1) zeta(s)]; at negative even
    // integers Gamma(s/2+1) has a pole cancelled by a trivial zeta zero,
    // so reflect to 1-s there.
    if (s.im.is_zero() && s.re < 0L && s.re == floor(s.re)) {
        mpz_class z = round_to_integer(s.re);
        if (mpz_even_p(z.get_mpz_t())) return xi(1 - s, ctx);
    }
    mpfr_prec_t prec = std::max<mpfr_prec_t>(ctx.prec(), s.prec());
    Complex s_hi = at_prec(s, prec);
    Complex half_s = s_hi / 2;
    Complex gam = gamma(half_s + 1, ctx);
    Real pi = Real::pi(prec);
    return pow(pi, -half_s) * gam * zeta_times_s_minus_1(s_hi, ctx);
}

Complex gg_product(int a, const Complex& s, const PrecisionContext& ctx) {
    if (a < 1 || a % 2 == 0) throw SpecError("gg_product: a must be an odd positive integer");
    if (s.im.is_zero() && s.re == floor(s.re) && s.re.is_finite()) {
        long sv = s.re.to_long();
        if (sv <= -1) throw PoleError("gg_product: pole at negative integer s");
        if (sv >= 3 && sv <= a - 1 && sv % 2 == 1)
            throw PoleError("gg_product: pole at odd s in [3, a-1]");
    }
    mpfr_prec_t prec = std::max<mpfr_prec_t>(ctx.prec(), s.prec());
    Complex s_hi = at_prec(s, prec);
    Real pi = Real::pi(prec);
    Real two_pi = 2 * pi;
    Complex gam = gamma(s_hi + 1, ctx);
    Complex decay = pow(two_pi, -s_hi);
    if (a == 1) return pi * (s_hi - 2) * (s_hi - 1) * gam * decay;
    // 2^((a-1)/2) pi^((a+1)/2) (s-a-1) Gamma(s+1) (2 pi)^(-s) / prod_{j=1}^{(a-3)/2} (s-2j-1)
    Real pref = pow_si(Real(2, prec), (a - 1) / 2) * pow_si(pi, (a + 1) / 2);
    Complex num = (s_hi - (a + 1)) * gam * decay * pref;
    Complex den(1, prec);
    for (int j = 1; j <= (a - 3) / 2; ++j) den *= (s_hi - (2 * j + 1));
    return num / den;
}

namespace {

// Continued fraction for Gamma(s, x), x > 0 reasonably large vs |s|.
Complex inc_gamma_cf(const Complex& s, const Real& x, int digits) {
    mpfr_prec_t prec = bits_for(digits + 10);
    Complex s_hi = at_prec(s, prec);
    Real x_hi = at_prec(x, prec);
    Real tiny = pow10(-(2 * digits + 60), prec);
    Real eps = pow10(-(digits + 5), prec);

    Complex b = Complex(x_hi) + 1 - s_hi;
    if (abs(b) < tiny) b = Complex(tiny, Real(0L, prec));
    Complex c = Complex(1, prec) / Complex(tiny, Real(0L, prec));
    Complex d = 1 / b;
    Complex h = d;
    double xd = x.to_double();
    long max_iter = 2000 + static_cast<long>(1.5 * std::pow(digits * kLn10, 2) / (16.0 * std::max(1.0, xd)));
    for (long i = 1; i <= max_iter; ++i) {
        Complex an = (s_hi - i) * i;  // = -i (i - s)
        b += 2;
        d = an * d + b;
        if (abs(d) < tiny) d = Complex(tiny, Real(0L, prec));
        c = b + an / c;
        if (abs(c) < tiny) c = Complex(tiny, Real(0L, prec));
        d = 1 / d;
        Complex delta = d * c;
        h *= delta;
        if (abs(delta - 1) < eps) {
            return exp(Complex(s_hi.re * log(x_hi) - x_hi, s_hi.im * log(x_hi))) * h;
        }
    }
    throw PrecisionError("inc_gamma_upper: continued fraction did not converge");
}

// Series for the lower incomplete gamma; returns Gamma(s) - gamma(s, x).
Complex inc_gamma_series(const Complex& s, const Real& x, int digits) {
    mpfr_prec_t prec = bits_for(digits + 15);
    Complex s_hi = at_prec(s, prec);
    Real x_hi = at_prec(x, prec);
    Complex whole = gamma_impl(s_hi, digits + 15);
    Complex term = 1 / s_hi;
    Complex sum = term;
    Real eps = pow10(-(digits + 10), prec);
    long max_iter = 200 + 10 * digits + static_cast<long>(10 * x.to_double());
    for (long k = 1; k <= max_iter; ++k) {
        term = term * Complex(x_hi) / (s_hi + k);
        sum += term;
        if (abs(term) < eps * abs(sum)) {
            Complex lower = exp(Complex(s_hi.re * log(x_hi) - x_hi, s_hi.im * log(x_hi))) * sum;
            return whole - lower;
        }
    }
    throw PrecisionError("inc_gamma_upper: series did not converge");
}

Complex inc_gamma_impl(const Complex& s, const Real& x, int digits, int depth) {
    double xd = x.to_double();
    double sabs = std::hypot(s.re.to_double(), s.im.to_double());
    double sre = s.re.to_double();
    if (xd >= sabs + 1.0) return inc_gamma_cf(s, x, digits);
    if (xd >= 8.0 && sre > xd && depth == 0) {
        // Recur upward from a base whose real part sits below x.
        long m = static_cast<long>(std::ceil(sre - xd)) + 1;
        Complex base = inc_gamma_impl(s - m, x, digits + 5, 1);
        mpfr_prec_t prec = base.prec();
        Complex w = s - m;
        w = at_prec(w, prec);
        Real x_hi = at_prec(x, prec);
        Complex xpow = exp(Complex(w.re * log(x_hi) - x_hi, w.im * log(x_hi)));  // x^w e^-x
        Complex acc = base;
        for (long i = 0; i < m; ++i) {
            acc = w * acc + xpow;
            xpow = xpow * Complex(x_hi);
            w += Complex(1, prec);
        }
        return acc;
    }
    // Small-x base: Gamma(s) minus the lower series, with a cancellation retry.
    Complex r = inc_gamma_series(s, x, digits);
    Complex whole = gamma_impl(s, digits);
    Real ra = abs(r), wa = abs(whole);
    if (!r.is_finite()) throw PrecisionError("inc_gamma_upper: lost all accuracy");
    if (ra.is_zero() || (wa / ra) > pow10(12, ra.prec())) {
        if (depth >= 2) throw PrecisionError("inc_gamma_upper: cancellation too deep");
        long lost = ra.is_zero() ? digits : static_cast<long>((wa / ra).exponent2() * 0.302) + 10;
        return inc_gamma_impl(s, x, digits + static_cast<int>(lost) + 10, depth + 2);
    }
    return r;
}

}  // namespace

Complex inc_gamma_upper(const Complex& s, const Real& x, const PrecisionContext& ctx) {
    if (!(x > 0)) throw DomainError("inc_gamma_upper: x must be > 0");
    return inc_gamma_impl(s, x, ctx.digits() + ctx.guard_digits(), 0);
}

Complex expint_E(const Complex& nu, const Real& z, const PrecisionContext& ctx) {
    if (!(z > 0)) throw DomainError("expint_E: z must be > 0");
    Complex g = inc_gamma_upper(1 - nu, z, ctx);
    mpfr_prec_t prec = g.prec();
    Real z_hi = at_prec(z, prec);
    Complex nu_hi = at_prec(nu, prec);
    return exp(Complex((nu_hi.re - 1) * log(z_hi), nu_hi.im * log(z_hi))) * g;
}

namespace {

struct K01 {
    Real k0, k1;
};

K01 bessel_k_series(const Real& x, int digits) {
    double xd = x.to_double();
    int guard = static_cast<int>(std::ceil(2.0 * xd / kLn10)) + 15;
    mpfr_prec_t prec = bits_for(digits + guard);
    Real x_hi = at_prec(x, prec);
    Real q = x_hi * x_hi / 4;
    Real one(1, prec);

    Real t(1, prec);       // q^k / (k!)^2
    Real u(1, prec);       // q^k / (k! (k+1)!)
    Real H(0L, prec);      // H_k
    Real I0(0L, prec), S0(0L, prec), U(0L, prec), SU(0L, prec);
    Real eps = pow10(-(digits + guard), prec);
    for (long k = 0;; ++k) {
        I0 += t;
        S0 += t * H;
        U += u;
        Real H_next = H + one / (k + 1);
        SU += u * (H + H_next);
        if (k > 0 && t < eps && u < eps) break;
        if (k > 100000) throw PrecisionError("bessel_K: series did not converge");
        t = t * q / ((k + 1) * (k + 1));
        u = u * q / ((k + 1) * (k + 2));
        H = H_next;
    }
    Real lg = log(x_hi / 2) + Real::euler_gamma(prec);
    Real I1 = (x_hi / 2) * U;
    K01 out{Real(0L, prec), Real(0L, prec)};
    out.k0 = S0 - lg * I0;
    out.k1 = 1 / x_hi + lg * I1 - (x_hi / 4) * SU;
    return out;
}

Real bessel_k_asymptotic(int order, const Real& x, int digits) {
    mpfr_prec_t prec = bits_for(digits + 15);
    Real x_hi = at_prec(x, prec);
    long fournu2 = order == 0 ? 0 : 4;
    Real term(1, prec);
    Real sum(1, prec);
    Real eps = pow10(-(digits + 8), prec);
    Real prev = abs(term);
    for (long k = 1; k <= 1000000; ++k) {
        long num = fournu2 - (2 * k - 1) * (2 * k - 1);
        term = term * Real(num, prec) / (8 * k) / x_hi;
        Real ta = abs(term);
        if (ta > prev) throw PrecisionError("bessel_K: asymptotic series used below crossover");
        sum += term;
        if (ta < eps) break;
        prev = ta;
    }
    Real pi = Real::pi(prec);
    return sqrt(pi / (2 * x_hi)) * exp(-x_hi) * sum;
}

}  // namespace

Real bessel_K(int order, const Real& x, const PrecisionContext& ctx) {
    if (order != 0 && order != 1) throw SpecError("bessel_K: order must be 0 or 1");
    if (!(x > 0)) throw DomainError("bessel_K: x must be > 0");
    int digits = ctx.digits() + ctx.guard_digits();
    double xd = x.to_double();
    if (2.0 * xd / kLn10 >= digits + 12) return bessel_k_asymptotic(order, x, digits);
    K01 both = bessel_k_series(x, digits);
    return order == 0 ? both.k0 : both.k1;
}

std::pair<Real, Real> bessel_K0_K1(const Real& x, const PrecisionContext& ctx) {
    if (!(x > 0)) throw DomainError("bessel_K: x must be > 0");
    int digits = ctx.digits() + ctx.guard_digits();
    double xd = x.to_double();
    if (2.0 * xd / kLn10 >= digits + 12)
        return {bessel_k_asymptotic(0, x, digits), bessel_k_asymptotic(1, x, digits)};
    K01 both = bessel_k_series(x, digits);
    return {both.k0, both.k1};
}

Real hyp1f1_term(int m, int b, const Real& x, const PrecisionContext& ctx) {
    if (m < 0) throw DomainError("hyp1f1_term: m must be >= 0");
    if (b < 1) throw DomainError("hyp1f1_term: b must be >= 1");
    double xd = std::abs(x.to_double());
    int extra = 10 + static_cast<int>(std::ceil(m * std::log10(1.0 + xd)));
    mpfr_prec_t prec = bits_for(ctx.digits() + ctx.guard_digits() + extra);
    // Exact coefficients c_j = (-m)_j / ((b)_j j!), then Horner.
    std::vector<mpq_class> c(static_cast<size_t>(m) + 1);
    c[0] = 1;
    for (int j = 0; j < m; ++j) {
        c[static_cast<size_t>(j) + 1] = c[static_cast<size_t>(j)] * mpq_class(j - m) / mpq_class(static_cast<long>(b + j) * (j + 1));
        c[static_cast<size_t>(j) + 1].canonicalize();
    }
    Real x_hi = at_prec(x, prec);
    Real acc(c[static_cast<size_t>(m)], prec);
    for (int j = m - 1; j >= 0; --j) acc = fma(acc, x_hi, Real(c[static_cast<size_t>(j)], prec));
    return acc;
}

}  // namespace divsum::specfun
