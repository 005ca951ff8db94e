#include "divsum/complexnum.hpp"

namespace divsum {

bool Complex::is_real_integer_leq(long bound) const {
    if (!im.is_zero() || !re.is_finite()) return false;
    if (!(re <= Real(bound, re.prec()))) return false;
    return re == floor(re);
}

Complex operator/(const Complex& a, const Complex& b) {
    // Scale by the larger component of b to avoid spurious over/underflow in
    // |b|^2; mpfr's exponent range makes this mostly cosmetic.
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

Complex operator/(long a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {a * b.re / d, -(a * b.im) / d};
}

Real abs(const Complex& z) { return hypot(z.re, z.im); }

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Complex exp(const Complex& z) {
    Real m = exp(z.re);
    Real c(z.prec()), s(z.prec());
    mpfr_sin_cos(s.raw(), c.raw(), z.im.raw(), MPFR_RNDN);
    return {m * c, m * s};
}

Complex log(const Complex& z) {
    if (z.is_zero()) throw DomainError("log: zero argument");
    return {log(abs(z)), atan2(z.im, z.re)};
}

Complex sin(const Complex& z) {
    Real s(z.prec()), c(z.prec());
    mpfr_sin_cos(s.raw(), c.raw(), z.re.raw(), MPFR_RNDN);
    return {s * cosh(z.im), c * sinh(z.im)};
}

Complex sqrt(const Complex& z) {
    if (z.im.is_zero() && z.re.sign() >= 0) return Complex(sqrt(z.re));
    Real r = abs(z);
    Real u = sqrt((r + z.re) / 2);
    Real v = sqrt((r - z.re) / 2);
    if (z.im.sign() < 0) v = -v;
    return {u, v};
}

Complex pow(const Real& base, const Complex& z) {
    if (!(base > 0)) throw DomainError("pow: real base must be positive");
    Real lb = log(base);
    return exp(Complex(z.re * lb, z.im * lb));
}

Complex pow_si(const Complex& z, long n) {
    if (n == 0) return Complex(1, z.prec());
    bool inv = n < 0;
    unsigned long e = static_cast<unsigned long>(inv ? -n : n);
    Complex acc(1, z.prec());
    Complex b = z;
    while (e > 0) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1;
    }
    if (inv) return 1 / acc;
    return acc;
}

std::string to_sci_string(const Complex& z, int sig_digits) {
    return to_sci_string(z.re, sig_digits) + (z.im.sign() < 0 ? " - " : " + ") +
           to_sci_string(abs(z.im), sig_digits) + "i";
}

}  // namespace divsum
