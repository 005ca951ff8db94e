#ifndef DIVSUM_COMPLEXNUM_HPP
#define DIVSUM_COMPLEXNUM_HPP

#include <string>
#include <utility>

#include "divsum/real.hpp"

namespace divsum {

// Arbitrary-precision complex number as a pair of Reals. All elementary
// functions use the principal branch.
struct Complex {
    Real re, im;

    Complex() = default;
    explicit Complex(mpfr_prec_t prec) : re(0L, prec), im(0L, prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(const Real& r) : re(r), im(0L, r.prec()) {}
    Complex(long r, mpfr_prec_t prec) : re(r, prec), im(0L, prec) {}

    mpfr_prec_t prec() const { return re.prec() > im.prec() ? re.prec() : im.prec(); }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    // Exact equality to a small integer (pole detection).
    bool equals_int(long v) const { return im.is_zero() && re == v; }
    // True if the value is exactly a real integer <= bound.
    bool is_real_integer_leq(long bound) const;

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
    friend Complex operator*(const Real& b, const Complex& a) { return a * b; }
    friend Complex operator*(const Complex& a, long b) { return {a.re * b, a.im * b}; }
    friend Complex operator*(long b, const Complex& a) { return a * b; }
    friend Complex operator+(const Complex& a, long b) { return {a.re + b, a.im}; }
    friend Complex operator+(long b, const Complex& a) { return {a.re + b, a.im}; }
    friend Complex operator-(const Complex& a, long b) { return {a.re - b, a.im}; }
    friend Complex operator+(const Complex& a, const Real& b) { return {a.re + b, a.im}; }
    friend Complex operator-(const Complex& a, const Real& b) { return {a.re - b, a.im}; }
    friend Complex operator-(long b, const Complex& a) { return {b - a.re, -a.im}; }
    friend Complex operator-(const Real& b, const Complex& a) { return {b - a.re, -a.im}; }
    friend Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
    friend Complex operator/(const Complex& a, long b) { return {a.re / b, a.im / b}; }
    friend Complex operator/(const Complex& a, const Complex& b);
    friend Complex operator/(long a, const Complex& b);

    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator+=(long o) {
        re += Real(o, re.prec());
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o) {
        *this = *this * o;
        return *this;
    }
};

Real abs(const Complex& z);
Complex conj(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);  // principal branch
Complex sin(const Complex& z);
Complex sqrt(const Complex& z);
// base^z for real base > 0.
Complex pow(const Real& base, const Complex& z);
// z^n for integer n.
Complex pow_si(const Complex& z, long n);

std::string to_sci_string(const Complex& z, int sig_digits);

}  // namespace divsum

#endif
