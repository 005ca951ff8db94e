#include <doctest.h>

#include "divsum/mellin.hpp"
#include "divsum/specfun.hpp"
#include "divsum/arith.hpp"

using namespace divsum;
using namespace divsum::mellin;

namespace {

Complex cplx(const char* re, const char* im, mpfr_prec_t prec) {
    return Complex(Real(std::string(re), prec), Real(std::string(im), prec));
}

}  // namespace

TEST_CASE("j_closed satisfies the large-n asymptotic expansion") {
    PrecisionContext ctx(50);
    mpfr_prec_t prec = ctx.prec();
    Complex s0 = cplx("0.5", "2", prec);
    // fitted constant C <= 10 in |j/scale - bracket| <= C (1+|s0|)^3 / n^3
    Real worst(0, prec);
    for (int a : {1, 3, 5}) {
        for (long n : {45L, 60L, 90L}) {
            Complex j = j_closed(a, n, s0, ctx);
            Real x = 2 * ctx.pi() * n;
            Complex bracket;
            if (a == 1)
                bracket = 1 + (s0 - 4) / Complex(x) + (s0 - 1) * (s0 - 2) / Complex(x * x);
            else if (a == 3)
                bracket = 1 + (s0 - 4) / Complex(x) + s0 * (s0 - 4) / Complex(x * x);
            else
                bracket = 1 + (s0 - 3) / Complex(x) + (s0 * (s0 - 4) - 6) / Complex(x * x);
            Real lhs = abs(j / Complex(j_leading_scale(a, n, ctx)) - bracket);
            Real c = lhs * pow_si(Real(n, prec), 3) / pow_si(1 + abs(s0), 3);
            if (c > worst) worst = c;
        }
    }
    CHECK(worst <= 10);
}

TEST_CASE("j_closed at s0 = 0 reduces to elementary incomplete-gamma values") {
    // Gamma(1,x) = e^-x, Gamma(2,x) = e^-x (1+x), Gamma(3,x) = e^-x (2+2x+x^2),
    // so J_1(1, 0) = pi e^(-2 pi) (4 pi^2 - 8 pi + 2).
    PrecisionContext ctx(45);
    mpfr_prec_t prec = ctx.prec();
    Real pi = ctx.pi();
    Real expect = pi * exp(-(2 * pi)) * (4 * pi * pi - 8 * pi + 2);
    Complex j = j_closed(1, 1, Complex(0, prec), ctx);
    CHECK(abs(j.re - expect) < pow10(-42, prec));
    CHECK(abs(j.im) < pow10(-42, prec));
}

TEST_CASE("j_closed matches j_quadrature on sample points") {
    PrecisionContext ctx(40);
    mpfr_prec_t prec = ctx.prec();
    LineIntegralSpec spec;
    spec.tol_digits = 22;
    Real tol = pow10(-20, prec);

    spec.abscissa = 4;
    Complex s0 = cplx("0.5", "2", prec);
    CHECK(abs(j_closed(1, 1, s0, ctx) - j_quadrature(1, 1, s0, spec, ctx)) < tol);
    Complex s1 = cplx("1", "1", prec);
    CHECK(abs(j_closed(3, 2, s1, ctx) - j_quadrature(3, 2, s1, spec, ctx)) < tol);
    spec.abscissa = 5;
    Complex sm1 = cplx("-1", "0", prec);
    CHECK(abs(j_closed(5, 2, sm1, ctx) - j_quadrature(5, 2, sm1, spec, ctx)) < tol);
}

TEST_CASE("j_quadrature is stable under tolerance tightening") {
    PrecisionContext ctx(40);
    LineIntegralSpec lo;
    lo.abscissa = 4;
    lo.tol_digits = 18;
    LineIntegralSpec hi = lo;
    hi.tol_digits = 26;
    Complex s0 = cplx("0.3", "1.1", ctx.prec());
    Complex a = j_quadrature(1, 2, s0, lo, ctx);
    Complex b = j_quadrature(1, 2, s0, hi, ctx);
    CHECK(abs(a - b) < pow10(-18, ctx.prec()));
}

TEST_CASE("j pole conditions") {
    PrecisionContext ctx(40);
    mpfr_prec_t prec = ctx.prec();
    CHECK_THROWS_AS(j_closed(5, 1, Complex(3, prec), ctx), PoleError);
    LineIntegralSpec spec;
    spec.abscissa = 2.0;  // not > 3
    CHECK_THROWS_AS(j_quadrature(5, 1, Complex(0, prec), spec, ctx), SpecError);
    spec.abscissa = 0.2;  // not > Re s0
    CHECK_THROWS_AS(j_quadrature(1, 1, Complex(1, prec), spec, ctx), SpecError);
}

TEST_CASE("xi pair direct: symmetry and special points") {
    PrecisionContext ctx(45);
    mpfr_prec_t prec = ctx.prec();
    Complex s0 = cplx("0.7", "1.3", prec);
    for (int a : {1, 3, 5}) {
        Complex lhs = xi_pair_direct(a, s0, ctx);
        Complex rhs = xi_pair_direct(a, Complex(Real(a + 1, prec), Real(0, prec)) - s0, ctx);
        CAPTURE(a);
        CHECK(abs(lhs - rhs) < pow10(-40, prec));
    }
    // a=1, s0=2: xi(2) xi(1) with xi(1) = 1/2
    Complex v = xi_pair_direct(1, Complex(2, prec), ctx);
    Real expect = Real::pi(prec) / 6 / 2;
    CHECK(abs(v.re - expect) < pow10(-42, prec));
}

TEST_CASE("pair line-integral representation reproduces xi(s0) xi(s0-a)") {
    PrecisionContext ctx(40);
    mpfr_prec_t prec = ctx.prec();
    LineIntegralSpec spec;
    spec.tol_digits = 18;

    Complex s0 = cplx("0.5", "2", prec);
    spec.abscissa = 3.5;
    auto r1 = xi_pair_integral(1, s0, spec, 60, ctx);
    CHECK(abs(r1.value - xi_pair_direct(1, s0, ctx)) < pow10(-15, prec));

    spec.abscissa = 7;
    Complex half = cplx("0.5", "0", prec);
    auto r5 = xi_pair_integral(5, half, spec, 60, ctx);
    CHECK(abs(r5.value - xi_pair_direct(5, half, ctx)) < pow10(-15, prec));
}

TEST_CASE("even-shift spot check at a = 2") {
    PrecisionContext ctx(40);
    mpfr_prec_t prec = ctx.prec();
    LineIntegralSpec spec;
    spec.tol_digits = 16;
    spec.abscissa = 4;
    Complex s0 = cplx("0.5", "1", prec);
    auto r = xi_pair_integral(2, s0, spec, 40, ctx);
    CHECK(abs(r.value - xi_pair_direct(2, s0, ctx)) < pow10(-12, prec));
}

TEST_CASE("single-xi line integral") {
    PrecisionContext ctx(40);
    mpfr_prec_t prec = ctx.prec();
    LineIntegralSpec spec;
    spec.tol_digits = 18;
    spec.abscissa = 2;
    Complex half = cplx("0.5", "0", prec);
    auto r = xi_single_integral(half, spec, 60, ctx);
    CHECK(abs(r.value - specfun::xi(half, ctx)) < pow10(-15, prec));
    // s0 and 1-s0 produce identical integrands, hence identical values
    Complex s0 = cplx("0.3", "0.4", prec);
    auto ra = xi_single_integral(s0, spec, 40, ctx);
    auto rb = xi_single_integral(1 - s0, spec, 40, ctx);
    CHECK(ra.value.re == rb.value.re);
    CHECK(ra.value.im == rb.value.im);
}

TEST_CASE("Xi tail form: functional equation under s -> a+1-s") {
    PrecisionContext ctx(45);
    mpfr_prec_t prec = ctx.prec();
    Complex s0 = cplx("0.3", "1.7", prec);
    for (int a : {1, 3}) {
        Complex x1 = xi_approx_via_tail(3, a, s0, 40, ctx);
        Complex refl = Complex(Real(a + 1, prec), Real(0, prec)) - s0;
        Complex x2 = xi_approx_via_tail(3, a, refl, 40, ctx);
        Real scale = abs(x1);
        if (scale < 1) scale = Real(1, prec);
        CAPTURE(a);
        CHECK(abs(x1 - x2) / scale < pow10(-12, prec));
    }
}

TEST_CASE("tail leading-order behaviour at N=2, a=5") {
    // (xi xi - Xi_{2,5}) / (8 pi^3 sum_tail sigma_5(n) e^(-2 pi n)) -> 1 with
    // an O(1/p_3^2) defect; the odd 1/(2 pi n) terms cancel in the
    // J(s0) + J(6-s0) combination.
    PrecisionContext ctx(50);
    mpfr_prec_t prec = ctx.prec();
    Complex s0 = cplx("0.1", "0", prec);
    Complex diff = xixi_minus_Xi(2, 5, s0, 40, ctx);
    Real pi = ctx.pi();
    Real lead(0, prec);
    for (long n = 5; n <= 40; ++n) {
        if (arith::is_smooth(n, 3)) continue;
        lead += Real(arith::sigma(5, n), prec) * exp(-(2 * pi * n));
    }
    lead *= 8 * pow_si(pi, 3);
    Real ratio_defect = abs(diff / Complex(lead) - Complex(1, prec));
    CHECK(ratio_defect < Real(1.0 / 25.0, prec));  // 1 / p_3^2
}

TEST_CASE("constraint generator integrals vanish") {
    PrecisionContext ctx(40);
    mpfr_prec_t prec = ctx.prec();
    LineIntegralSpec spec;
    spec.tol_digits = 20;

    // independent reconfirmation of the k=0 polynomial constraint
    spec.abscissa = 3;
    Complex v10 = constraint_quadrature(1, 0, spec, 40, ctx);
    CHECK(abs(v10) < pow10(-18, prec));

    spec.abscissa = 4;
    Complex v51 = constraint_quadrature(5, 1, spec, 40, ctx);
    CHECK(abs(v51) < pow10(-18, prec));

    // odd a beyond the proven range (numeric evidence for the general form)
    spec.abscissa = 6;
    Complex v70 = constraint_quadrature(7, 0, spec, 40, ctx);
    CHECK(abs(v70) < pow10(-18, prec));

    // abscissa left of the g(s)g(s-7) poles is refused
    spec.abscissa = 4;
    CHECK_THROWS_AS(constraint_quadrature(7, 0, spec, 40, ctx), SpecError);
    CHECK_THROWS_AS(constraint_quadrature(2, 0, spec, 40, ctx), SpecError);
}
