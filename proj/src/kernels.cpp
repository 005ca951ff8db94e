#include "divsum/kernels.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "divsum/errors.hpp"
#include "divsum/specfun.hpp"

namespace divsum::kernels {

void KernelSpec::validate() const {
    auto need = [&](bool cond, const char* msg) {
        if (!cond) throw SpecError(std::string("KernelSpec: ") + msg);
    };
    switch (variant) {
        case Variant::constraint:
        case Variant::normalized_Q:
            need(a == 1 || a == 3 || a == 5, "a must be 1, 3 or 5 for this family");
            need(k >= 0, "k must be >= 0 for this family");
            break;
        case Variant::cor3:
            need(a == 1 || a == 3 || a == 5, "a must be 1, 3 or 5 for cor3");
            need(k < 0, "cor3 has no constraint index");
            break;
        case Variant::higher_homogeneous:
        case Variant::higher_inhomogeneous:
            need(a == 7 || a == 9 || a == 11, "a must be 7, 9 or 11 for this family");
            need(k < 0, "higher-a families have no constraint index");
            break;
        case Variant::bessel_a0:
            need(a == 0, "bessel family requires a = 0");
            need(k < 0, "bessel family has no constraint index");
            break;
    }
}

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::constraint: return "constraint";
        case Variant::cor3: return "cor3";
        case Variant::higher_homogeneous: return "higher_homogeneous";
        case Variant::higher_inhomogeneous: return "higher_inhomogeneous";
        case Variant::bessel_a0: return "bessel_a0";
        case Variant::normalized_Q: return "normalized_Q";
    }
    return "?";
}

std::string KernelSpec::id() const {
    std::string s = std::string(variant_name(variant)) + ":a=" + std::to_string(a);
    if (k >= 0) s += ":k=" + std::to_string(k);
    if (variant == Variant::constraint)
        s += (form == KernelForm::poly ? ":poly" : ":1f1");
    return s;
}

namespace {

void check_constraint_family(int a, int k) {
    if (!(a == 1 || a == 3 || a == 5)) throw SpecError("constraint kernel: a must be 1, 3 or 5");
    if (k < 0) throw SpecError("constraint kernel: k must be >= 0");
}

std::mutex g_coeff_mu;
std::map<std::pair<int, int>, std::vector<mpq_class>> g_coeffs;

mpz_class fact(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

// j-sum coefficients of the polynomial constraint kernels; the lowest
// monomial is x^(k+1), coefficient index j multiplies x^(k+1+j).
std::vector<mpq_class> build_coeffs(int a, int k) {
    std::vector<mpq_class> c;
    if (a == 1) {
        for (int j = 0; j <= k + 3; ++j) {
            mpq_class q(k + j + 3, 1);
            q /= mpq_class(fact(j) * fact(k - j + 3) * fact(k + j + 1));
            if (j % 2) q = -q;
            q.canonicalize();
            c.push_back(q);
        }
    } else if (a == 3) {
        for (int j = 0; j <= k + 2; ++j) {
            mpq_class q(k + j + 2, 1);
            q /= mpq_class(fact(j) * fact(k - j + 2) * fact(k + j + 4));
            if (j % 2) q = -q;
            q.canonicalize();
            c.push_back(q);
        }
    } else {
        for (int j = 0; j <= k + 1; ++j) {
            mpq_class q(1, 1);
            q /= mpq_class(fact(j) * fact(k - j + 1) * fact(k + j + 6));
            if (j % 2) q = -q;
            q.canonicalize();
            c.push_back(q);
        }
    }
    return c;
}

}  // namespace

const std::vector<mpq_class>& constraint_poly_coeffs(int a, int k) {
    check_constraint_family(a, k);
    std::lock_guard<std::mutex> lock(g_coeff_mu);
    auto key = std::make_pair(a, k);
    auto it = g_coeffs.find(key);
    if (it == g_coeffs.end()) it = g_coeffs.emplace(key, build_coeffs(a, k)).first;
    return it->second;
}

int constraint_poly_degree(int a, int k) {
    check_constraint_family(a, k);
    switch (a) {
        case 1: return 2 * k + 4;
        case 3: return 2 * k + 3;
        default: return 2 * k + 2;
    }
}

mpq_class constraint_poly_abs_coeff_sum(int a, int k) {
    mpq_class s = 0;
    for (const auto& q : constraint_poly_coeffs(a, k)) s += abs(q);
    return s;
}

Real constraint_poly_at(int a, int k, const Real& x, const PrecisionContext& ctx) {
    const auto& c = constraint_poly_coeffs(a, k);
    mpfr_prec_t prec = std::max<mpfr_prec_t>(ctx.prec(), x.prec());
    Real xx = x + Real(0, prec);
    Real acc(c.back(), prec);
    for (size_t j = c.size() - 1; j-- > 0;) acc = fma(acc, xx, Real(c[j], prec));
    return acc * pow_si(xx, k + 1);
}

Real constraint_kernel_poly(int a, int k, long n, const PrecisionContext& ctx) {
    if (n < 1) throw DomainError("constraint_kernel_poly: n must be >= 1");
    return constraint_poly_at(a, k, ctx.two_pi() * n, ctx);
}

Real constraint_kernel_1f1(int a, int k, long n, const PrecisionContext& ctx) {
    check_constraint_family(a, k);
    if (n < 1) throw DomainError("constraint_kernel_1f1: n must be >= 1");
    Real x = ctx.two_pi() * n;
    mpfr_prec_t prec = x.prec();
    if (a == 1) {
        Real t1 = pow_si(x, k + 1) * specfun::hyp1f1_term(k + 3, k + 2, x, ctx);
        Real t2 = pow_si(x, k + 2) * specfun::hyp1f1_term(k + 2, k + 3, x, ctx) / (k + 2);
        return t1 - t2;
    }
    if (a == 3) {
        Real t1 = pow_si(x, k + 1) * specfun::hyp1f1_term(k + 2, k + 5, x, ctx);
        Real t2 = pow_si(x, k + 2) * specfun::hyp1f1_term(k + 1, k + 6, x, ctx) / (k + 5);
        return t1 - t2;
    }
    (void)prec;
    return pow_si(x, k + 1) * specfun::hyp1f1_term(k + 1, k + 7, x, ctx);
}

namespace {

std::mutex g_norm_mu;
// (a, k) -> (digits of the stored value, value)
std::map<std::pair<int, int>, std::pair<int, Real>> g_norms;

Real compute_norm(int a, int k, int digits) {
    // Probe at two points with doubled precision; mismatch means the
    // polynomial restatement would not match the 1F1 family (errata-level).
    PrecisionContext hi(2 * digits + 20);
    Real r1 = constraint_kernel_1f1(a, k, 1, hi) / constraint_kernel_poly(a, k, 1, hi);
    Real r2 = constraint_kernel_1f1(a, k, 2, hi) / constraint_kernel_poly(a, k, 2, hi);
    Real tol = pow10(-digits, hi.prec()) * abs(r1);
    if (abs(r1 - r2) > tol)
        throw Error("constraint_norm_constant: 1F1 and polynomial forms are not proportional "
                    "(probe mismatch; possible errata)");
    return r1;
}

}  // namespace

Real constraint_norm_constant(int a, int k, const PrecisionContext& ctx) {
    check_constraint_family(a, k);
    int digits = ctx.digits() + ctx.guard_digits();
    std::lock_guard<std::mutex> lock(g_norm_mu);
    auto key = std::make_pair(a, k);
    auto it = g_norms.find(key);
    if (it == g_norms.end() || it->second.first < digits) {
        Real v = compute_norm(a, k, digits);
        if (it == g_norms.end())
            it = g_norms.emplace(key, std::make_pair(digits, v)).first;
        else
            it->second = {digits, v};
    }
    return it->second.second;
}

Real cor3_kernel(int a, long n, const PrecisionContext& ctx) {
    if (n < 1) throw DomainError("cor3_kernel: n must be >= 1");
    mpfr_prec_t prec = ctx.prec();
    Real pi = ctx.pi();
    switch (a) {
        case 1: {
            Real tp = 2 * pi * n;
            return tp * (tp - 3) + 1;
        }
        case 3:
            return pi * n - 1;
        case 5:
            return Real(1, prec);
        default:
            throw SpecError("cor3_kernel: a must be 1, 3 or 5");
    }
}

namespace {

// Numerator polynomials in y = pi n for the a = 7, 9, 11 kernels.
const long kHigherHom7[] = {-45, -90, -105, -90, -60, -32, 16};
const long kHigherHom9[] = {-945, -1890, -1890, -1260, -588, -168, 0, 32};
const long kHigherHom11[] = {-17010, -34020, -32445, -19530, -7980, -2016, -96, 160, 64};
const long kHigherInhom7[] = {3, 6, 7, 6, 4};  // (y^2+1)(4y^2+6y+3)
const long kHigherInhom9[] = {45, 90, 90, 60, 28, 8};
const long kHigherInhom11[] = {630, 1260, 1215, 750, 324, 96, 16};

Real eval_poly_long(const long* c, int deg, const Real& y) {
    Real acc(c[deg], y.prec());
    for (int i = deg - 1; i >= 0; --i) acc = fma(acc, y, Real(c[i], y.prec()));
    return acc;
}

}  // namespace

Real higher_a_kernel(int a, Variant variant, long n, const PrecisionContext& ctx) {
    if (n < 1) throw DomainError("higher_a_kernel: n must be >= 1");
    bool hom = variant == Variant::higher_homogeneous;
    if (!hom && variant != Variant::higher_inhomogeneous)
        throw SpecError("higher_a_kernel: variant must be a higher-a family");
    if (!(a == 7 || a == 9 || a == 11)) throw SpecError("higher_a_kernel: a must be 7, 9 or 11");
    Real pi = ctx.pi();
    Real y = pi * n;
    Real num(0, ctx.prec());
    int npow = 0;
    if (hom) {
        switch (a) {
            case 7: num = eval_poly_long(kHigherHom7, 6, y); npow = 5; break;
            case 9: num = eval_poly_long(kHigherHom9, 7, y); npow = 7; break;
            default: num = eval_poly_long(kHigherHom11, 8, y); npow = 9; break;
        }
        return num / pow_si(Real(n, ctx.prec()), npow);
    }
    switch (a) {
        case 7: num = eval_poly_long(kHigherInhom7, 4, y); npow = 5; break;
        case 9: num = eval_poly_long(kHigherInhom9, 5, y); npow = 7; break;
        default: num = eval_poly_long(kHigherInhom11, 6, y); npow = 9; break;
    }
    return num / pow_si(pi * n, npow);
}

Real bessel_kernel_a0(long n, const PrecisionContext& ctx) {
    if (n < 1) throw DomainError("bessel_kernel_a0: n must be >= 1");
    Real pi = ctx.pi();
    Real x = 2 * pi * n;
    auto [k0, k1] = specfun::bessel_K0_K1(x, ctx);
    Real n2 = Real(n, ctx.prec()) * n;
    Real term0 = (84 * pi * pi * n2 + 45) * k0;
    Real term1 = 16 * pi * n * (pi * pi * n2 + 6) * k1;
    return n2 * (term0 - term1);
}

Real normalized_Q(int a, int k, long n, const PrecisionContext& ctx) {
    check_constraint_family(a, k);
    if (n < 1) throw DomainError("normalized_Q: n must be >= 1");
    Real two_pi = ctx.two_pi();
    Real num = constraint_poly_at(a, k, two_pi * n, ctx) * exp(-(two_pi * n));
    Real den = constraint_poly_at(a, k, two_pi, ctx) * exp(-two_pi);
    return num / den;
}

}  // namespace divsum::kernels
