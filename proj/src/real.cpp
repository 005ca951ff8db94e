#include "divsum/real.hpp"

#include <cctype>
#include <cstdlib>
#include <cstring>

namespace divsum {

#define DIVSUM_UNARY(name, fn)                  \
    Real name(const Real& x) {                  \
        Real r(x.prec());                       \
        fn(r.raw(), x.raw(), MPFR_RNDN);        \
        return r;                               \
    }

DIVSUM_UNARY(abs, mpfr_abs)
DIVSUM_UNARY(sqrt, mpfr_sqrt)
DIVSUM_UNARY(exp, mpfr_exp)
DIVSUM_UNARY(log, mpfr_log)
DIVSUM_UNARY(log2_of, mpfr_log2)
DIVSUM_UNARY(sin, mpfr_sin)
DIVSUM_UNARY(cos, mpfr_cos)
DIVSUM_UNARY(sinh, mpfr_sinh)
DIVSUM_UNARY(cosh, mpfr_cosh)
DIVSUM_UNARY(asinh, mpfr_asinh)

#undef DIVSUM_UNARY

Real floor(const Real& x) {
    Real r(x.prec());
    mpfr_rint(r.raw(), x.raw(), MPFR_RNDD);
    return r;
}

Real atan2(const Real& y, const Real& x) {
    Real r(y.prec() > x.prec() ? y.prec() : x.prec());
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real hypot(const Real& x, const Real& y) {
    Real r(y.prec() > x.prec() ? y.prec() : x.prec());
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

Real pow_si(const Real& x, long e) {
    Real r(x.prec());
    mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}

Real pow(const Real& x, const Real& y) {
    Real r(y.prec() > x.prec() ? y.prec() : x.prec());
    mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

Real fma(const Real& a, const Real& b, const Real& c) {
    mpfr_prec_t p = a.prec();
    if (b.prec() > p) p = b.prec();
    if (c.prec() > p) p = c.prec();
    Real r(p);
    mpfr_fma(r.raw(), a.raw(), b.raw(), c.raw(), MPFR_RNDN);
    return r;
}

Real pow10(long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_ui_pow_ui(r.raw(), 10u, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
    if (e < 0) mpfr_si_div(r.raw(), 1, r.raw(), MPFR_RNDN);
    return r;
}

Real round_to(const Real& x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

mpz_class round_to_integer(const Real& x) {
    if (!x.is_finite()) throw DomainError("round_to_integer: non-finite value");
    Real r(x.prec());
    mpfr_round(r.raw(), x.raw());  // round half away from zero
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), r.raw(), MPFR_RNDN);
    return z;
}

bool is_half_tie(const Real& x) {
    if (!x.is_finite()) return false;
    Real f = x - floor(x);
    Real half(0.5, x.prec());
    return f == half;
}

namespace {

struct MpfrStr {
    char* p = nullptr;
    ~MpfrStr() {
        if (p) mpfr_free_str(p);
    }
};

}  // namespace

std::string to_sci_string(const Real& x, int sig_digits) {
    if (x.is_nan()) return "nan";
    if (!x.is_finite()) return x.sign() < 0 ? "-inf" : "inf";
    if (x.is_zero()) return "0";
    if (sig_digits < 2) sig_digits = 2;
    mpfr_exp_t e = 0;
    MpfrStr s;
    s.p = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(sig_digits), x.raw(), MPFR_RNDN);
    if (!s.p) throw Error("to_sci_string: mpfr_get_str failed");
    std::string digits(s.p);
    std::string sign;
    if (!digits.empty() && digits[0] == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    // value = 0.digits * 10^e  ->  d.ddd e (e-1)
    std::string mant = digits.substr(0, 1) + "." + digits.substr(1);
    return sign + mant + "e" + std::to_string(static_cast<long>(e) - 1);
}

std::string to_table_string(const Real& x, int sig_digits) {
    if (x.is_nan()) return "nan";
    if (!x.is_finite()) return x.sign() < 0 ? "-inf" : "inf";
    if (x.is_zero()) return "0." + std::string(static_cast<size_t>(sig_digits > 1 ? sig_digits - 1 : 1), '0');
    mpfr_exp_t e = 0;
    MpfrStr s;
    s.p = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(sig_digits < 2 ? 2 : sig_digits), x.raw(), MPFR_RNDN);
    if (!s.p) throw Error("to_table_string: mpfr_get_str failed");
    std::string digits(s.p);
    std::string sign;
    if (!digits.empty() && digits[0] == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    long ex = static_cast<long>(e);
    if (ex >= 1 && ex <= static_cast<long>(digits.size())) {
        std::string head = digits.substr(0, static_cast<size_t>(ex));
        std::string tail = digits.substr(static_cast<size_t>(ex));
        if (tail.empty()) tail = "0";
        return sign + head + "." + tail;
    }
    if (ex <= 0 && ex > -6) {
        return sign + "0." + std::string(static_cast<size_t>(-ex), '0') + digits;
    }
    std::string mant = digits.substr(0, 1) + "." + digits.substr(1);
    return sign + mant + "e" + std::to_string(ex - 1);
}

}  // namespace divsum
