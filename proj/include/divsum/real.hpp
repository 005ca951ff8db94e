#ifndef DIVSUM_REAL_HPP
#define DIVSUM_REAL_HPP

#include <mpfr.h>
#include <gmpxx.h>

#include <string>
#include <utility>

#include "divsum/errors.hpp"

namespace divsum {

// Thin RAII wrapper around mpfr_t. Every value carries its own precision in
// bits; binary operations round to the larger of the two operand precisions,
// in-place operations keep the destination precision. Rounding is always
// to nearest.
class Real {
  public:
    Real() { mpfr_init2(v_, 53); }
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }

    Real(long value, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, value, MPFR_RNDN);
    }
    Real(int value, mpfr_prec_t prec) : Real(static_cast<long>(value), prec) {}
    Real(double value, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_d(v_, value, MPFR_RNDN);
    }
    Real(const std::string& s, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw DomainError("Real: cannot parse decimal literal '" + s + "'");
    }
    Real(const mpz_class& z, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
    }
    Real(const mpq_class& q, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }

    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, 53);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    // Base-2 exponent of the value; very negative for zero.
    long exponent2() const {
        if (mpfr_zero_p(v_)) return mpfr_get_emin();
        return static_cast<long>(mpfr_get_exp(v_));
    }

    friend Real operator+(const Real& a, const Real& b) {
        Real r(join(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a, const Real& b) {
        Real r(join(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, const Real& b) {
        Real r(join(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& a, const Real& b) {
        Real r(join(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a) {
        Real r(a.prec());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    friend Real operator+(const Real& a, long b) {
        Real r(a.prec());
        mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator+(long b, const Real& a) { return a + b; }
    friend Real operator-(const Real& a, long b) {
        Real r(a.prec());
        mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator-(long a, const Real& b) {
        Real r(b.prec());
        mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, long b) {
        Real r(a.prec());
        mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator/(const Real& a, long b) {
        Real r(a.prec());
        mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator/(long a, const Real& b) {
        Real r(b.prec());
        mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }

    Real& operator+=(const Real& o) {
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator-=(const Real& o) {
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator*=(const Real& o) {
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator/=(const Real& o) {
        mpfr_div(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator*=(long o) {
        mpfr_mul_si(v_, v_, o, MPFR_RNDN);
        return *this;
    }
    Real& operator/=(long o) {
        mpfr_div_si(v_, v_, o, MPFR_RNDN);
        return *this;
    }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0 && !a.is_nan(); }
    friend bool operator<(const Real& a, long b) { return !a.is_nan() && mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const Real& a, long b) { return !a.is_nan() && mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<=(const Real& a, long b) { return !a.is_nan() && mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const Real& a, long b) { return !a.is_nan() && mpfr_cmp_si(a.v_, b) >= 0; }

    friend void swap(Real& a, Real& b) noexcept { mpfr_swap(a.v_, b.v_); }

    static Real pi(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    static Real euler_gamma(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_euler(r.v_, MPFR_RNDN);
        return r;
    }
    static Real ln2(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_log2(r.v_, MPFR_RNDN);
        return r;
    }
    static Real nan(mpfr_prec_t prec) { return Real(prec); }

  private:
    static mpfr_prec_t join(const Real& a, const Real& b) {
        return a.prec() > b.prec() ? a.prec() : b.prec();
    }
    mpfr_t v_;
};

// Free-function math over Real. Results inherit the argument precision.
Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log2_of(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real asinh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real pow_si(const Real& x, long e);
Real pow(const Real& x, const Real& y);  // requires x > 0
Real floor(const Real& x);
Real fma(const Real& a, const Real& b, const Real& c);  // a*b + c

// 10^e at the given precision.
Real pow10(long e, mpfr_prec_t prec);

// x rounded to exactly the given precision.
Real round_to(const Real& x, mpfr_prec_t prec);

// Nearest integer (round-half-away handled by caller via is_half_tie).
mpz_class round_to_integer(const Real& x);
// True when x lies exactly halfway between two integers.
bool is_half_tie(const Real& x);

// Scientific-format decimal string with the given significant digits.
std::string to_sci_string(const Real& x, int sig_digits);
// Positional format when the exponent is moderate (plain table style),
// scientific otherwise.
std::string to_table_string(const Real& x, int sig_digits);

}  // namespace divsum

#endif
