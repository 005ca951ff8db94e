#include <doctest.h>

#include "divsum/kernels.hpp"
#include "divsum/errors.hpp"

using namespace divsum;
using namespace divsum::kernels;

namespace {

// Exact rational evaluation of P_k^(a) at integer x.
mpq_class poly_exact(int a, int k, long x) {
    const auto& c = constraint_poly_coeffs(a, k);
    mpq_class acc = 0;
    mpq_class xp = 1;
    for (long e = 0; e < k + 1; ++e) xp *= x;
    for (size_t j = 0; j < c.size(); ++j) {
        acc += c[j] * xp;
        xp *= x;
    }
    return acc;
}

}  // namespace

TEST_CASE("KernelSpec validation") {
    KernelSpec s;
    s.variant = Variant::constraint;
    s.a = 1;
    s.k = 0;
    CHECK_NOTHROW(s.validate());
    s.a = 7;
    CHECK_THROWS_AS(s.validate(), SpecError);
    s.variant = Variant::higher_homogeneous;
    s.k = -1;
    CHECK_NOTHROW(s.validate());
    s.a = 5;
    CHECK_THROWS_AS(s.validate(), SpecError);
    s.variant = Variant::bessel_a0;
    s.a = 0;
    CHECK_NOTHROW(s.validate());
}

TEST_CASE("a=5 k=0 polynomial is x(7-x)/5040") {
    PrecisionContext ctx(40);
    mpfr_prec_t prec = ctx.prec();
    Real x(3, prec);
    Real expect = x * (7 - x) / 5040;
    CHECK(abs(constraint_poly_at(5, 0, x, ctx) - expect) < pow10(-38, prec));
    // zero at x = 7 exactly (rational arithmetic route)
    CHECK(poly_exact(5, 0, 7) == 0);
}

TEST_CASE("k=0 polynomials match the printed reductions up to one constant") {
    // a=1: P_0(2 pi n) = c * n (2 pi^3 n^3 - 10 pi^2 n^2 + 12 pi n - 3),
    // constant -pi/3 as the j-sum coefficients imply.
    PrecisionContext ctx(45);
    mpfr_prec_t prec = ctx.prec();
    Real pi = ctx.pi();
    for (long n : {1L, 2L, 5L}) {
        Real val = constraint_kernel_poly(1, 0, n, ctx);
        Real ref = Real(n, prec) *
                   (2 * pow_si(pi, 3) * n * n * n - 10 * pi * pi * n * n + 12 * pi * n - 3);
        Real c = val / ref;
        CAPTURE(n);
        CHECK(abs(c + pi / 3) < pow10(-40, prec));
    }
    // a=3: P_0(2 pi n) = c' * n (4 pi^2 n^2 - 18 pi n + 15)
    Real c3 = constraint_kernel_poly(3, 0, 2, ctx) /
              (Real(2, prec) * (16 * ctx.pi() * ctx.pi() - 36 * ctx.pi() + 15));
    Real c3b = constraint_kernel_poly(3, 0, 3, ctx) /
               (Real(3, prec) * (36 * ctx.pi() * ctx.pi() - 54 * ctx.pi() + 15));
    CHECK(abs(c3 - c3b) < pow10(-40, prec));
}

TEST_CASE("1F1 and polynomial forms are proportional with a stored constant") {
    PrecisionContext ctx(40);
    mpfr_prec_t prec = ctx.prec();
    // a=5, k=0, n=1: (2 pi) 1F1(-1;7;2 pi) = 2 pi (7 - 2 pi)/7
    Real tp = ctx.two_pi();
    CHECK(abs(constraint_kernel_1f1(5, 0, 1, ctx) - tp * (7 - tp) / 7) < pow10(-37, prec));
    for (auto [a, k, n] : {std::tuple<int, int, long>{1, 2, 3}, {3, 1, 2}, {5, 3, 4}}) {
        Real norm = constraint_norm_constant(a, k, ctx);
        CHECK(norm > 0);
        Real lhs = constraint_kernel_1f1(a, k, n, ctx);
        Real rhs = norm * constraint_kernel_poly(a, k, n, ctx);
        Real scale = abs(lhs);
        if (scale < 1) scale = Real(1, prec);
        CAPTURE(a);
        CHECK(abs(lhs - rhs) < scale * pow10(-36, prec));
    }
}

TEST_CASE("form equivalence across k <= 12, n <= 20") {
    PrecisionContext ctx(40);
    mpfr_prec_t prec = ctx.prec();
    for (int a : {1, 3, 5}) {
        for (int k : {0, 1, 5, 12}) {
            Real norm = constraint_norm_constant(a, k, ctx);
            for (long n = 1; n <= 20; n += 3) {
                Real lhs = constraint_kernel_1f1(a, k, n, ctx);
                Real rhs = norm * constraint_kernel_poly(a, k, n, ctx);
                Real scale = abs(lhs);
                if (scale < 1) scale = Real(1, prec);
                CAPTURE(a);
                CAPTURE(k);
                CAPTURE(n);
                REQUIRE(abs(lhs - rhs) < scale * pow10(-35, prec));
            }
        }
    }
}

TEST_CASE("degree check by exact finite differencing") {
    // A polynomial of degree d is annihilated by the (d+1)-st forward
    // difference and not by the d-th; exact rationals make this sharp.
    for (int a : {1, 3, 5}) {
        for (int k : {0, 2, 6}) {
            int deg = constraint_poly_degree(a, k);
            std::vector<mpq_class> vals;
            for (long x = 1; x <= deg + 2; ++x) vals.push_back(poly_exact(a, k, x));
            size_t valid = vals.size();
            for (int level = 0; level < deg + 1; ++level) {
                for (size_t i = 0; i + 1 < valid; ++i) vals[i] = vals[i + 1] - vals[i];
                --valid;
            }
            // after deg+1 differences over deg+2 samples one value remains
            CHECK(vals[0] == 0);
            // the deg-th difference is deg! times the leading coefficient
            std::vector<mpq_class> v2;
            for (long x = 1; x <= deg + 1; ++x) v2.push_back(poly_exact(a, k, x));
            size_t valid2 = v2.size();
            for (int level = 0; level < deg; ++level) {
                for (size_t i = 0; i + 1 < valid2; ++i) v2[i] = v2[i + 1] - v2[i];
                --valid2;
            }
            CHECK(v2[0] != 0);
        }
    }
}

TEST_CASE("lowest monomial has exponent k+1 and alternating-sign family start") {
    for (int a : {1, 3, 5}) {
        for (int k : {0, 1, 4, 9}) {
            const auto& c = constraint_poly_coeffs(a, k);
            CHECK(c[0] != 0);  // coefficient of x^(k+1)
            CHECK(c[0] > 0);
            if (c.size() > 1) CHECK(c[1] < 0);
        }
    }
}

TEST_CASE("cor3 kernels") {
    PrecisionContext ctx(40);
    mpfr_prec_t prec = ctx.prec();
    Real pi = ctx.pi();
    CHECK(cor3_kernel(5, 7, ctx) == Real(1, prec) + Real(0, prec));
    CHECK(abs(cor3_kernel(3, 1, ctx) - (pi - 1)) < pow10(-38, prec));
    Real expect = 4 * pi * pi - 6 * pi + 1;
    CHECK(abs(cor3_kernel(1, 1, ctx) - expect) < pow10(-37, prec));
    CHECK_THROWS_AS(cor3_kernel(7, 1, ctx), SpecError);
}

TEST_CASE("cor3 kernels positive for n up to 10^4") {
    PrecisionContext ctx(30, 5);
    for (long n = 1; n <= 10000; ++n) {
        REQUIRE(cor3_kernel(1, n, ctx) > 0);
        REQUIRE(cor3_kernel(3, n, ctx) > 0);
    }
}

TEST_CASE("higher-a kernels") {
    PrecisionContext ctx(45);
    mpfr_prec_t prec = ctx.prec();
    Real pi = ctx.pi();
    // a=7 inhomogeneous at n=1: (pi^2+1)(4 pi^2 + 6 pi + 3)/pi^5
    Real expect = (pi * pi + 1) * (4 * pi * pi + 6 * pi + 3) / pow_si(pi, 5);
    CHECK(abs(higher_a_kernel(7, Variant::higher_inhomogeneous, 1, ctx) - expect) <
          pow10(-42, prec));
    // a=9 homogeneous: leading term 32 pi^7 as n grows
    Real big = higher_a_kernel(9, Variant::higher_homogeneous, 100000, ctx);
    CHECK(abs(big / (32 * pow_si(pi, 7)) - 1) < Real(1e-4, prec));
    // a=11 inhomogeneous two-precision agreement at n=2
    Real lo = higher_a_kernel(11, Variant::higher_inhomogeneous, 2, PrecisionContext(40));
    Real hi = higher_a_kernel(11, Variant::higher_inhomogeneous, 2, PrecisionContext(90));
    CHECK(abs(lo - hi) < pow10(-38, prec));
    CHECK_THROWS_AS(higher_a_kernel(5, Variant::higher_homogeneous, 1, ctx), SpecError);
    CHECK_THROWS_AS(higher_a_kernel(7, Variant::cor3, 1, ctx), SpecError);
}

TEST_CASE("bessel kernel") {
    PrecisionContext ctx(60);
    mpfr_prec_t prec = ctx.prec();
    // Direct evaluation: the K0 term wins at n=1, the K1 term from n=2 on.
    CHECK(bessel_kernel_a0(1, ctx) > 0);
    CHECK(bessel_kernel_a0(2, ctx) < 0);
    CHECK(bessel_kernel_a0(3, ctx) < 0);
    // |kernel(n)| <= C e^(-2 pi n) n^(9/2) for n >= 5
    Real pi = ctx.pi();
    Real C = 2 * (84 * pi * pi + 45 + 16 * pi * (pi * pi + 6));
    for (long n = 5; n <= 15; ++n) {
        Real bound = C * pow(Real(n, prec), Real(4.5, prec)) * exp(-(2 * pi * n));
        REQUIRE(abs(bessel_kernel_a0(n, ctx)) <= bound);
    }
    // two-precision agreement at n=10
    Real lo = bessel_kernel_a0(10, PrecisionContext(50));
    Real hi = bessel_kernel_a0(10, PrecisionContext(100));
    CHECK(abs(lo - hi) < pow10(-45, prec) * abs(hi) + pow10(-70, prec));
}

TEST_CASE("normalized Q") {
    PrecisionContext ctx(45);
    mpfr_prec_t prec = ctx.prec();
    // n=1 diagnostic: exactly 1
    CHECK(abs(normalized_Q(1, 0, 1, ctx) - 1) < pow10(-42, prec));
    CHECK(abs(normalized_Q(5, 3, 1, ctx) - 1) < pow10(-42, prec));
    // composition check at a=1, k=0, n=2
    Real tp = ctx.two_pi();
    Real expect = constraint_poly_at(1, 0, 2 * tp, ctx) * exp(-2 * tp) /
                  (constraint_poly_at(1, 0, tp, ctx) * exp(-tp));
    CHECK(abs(normalized_Q(1, 0, 2, ctx) - expect) < pow10(-40, prec) * abs(expect));
}
