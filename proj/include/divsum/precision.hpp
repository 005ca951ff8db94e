#ifndef DIVSUM_PRECISION_HPP
#define DIVSUM_PRECISION_HPP

#include <cmath>

#include "divsum/errors.hpp"
#include "divsum/real.hpp"

namespace divsum {

// Working-precision configuration. `digits` is the accuracy contract of the
// results in decimal digits; `guard_digits` is extra slack carried through
// intermediate arithmetic. Immutable after construction.
class PrecisionContext {
  public:
    explicit PrecisionContext(int digits, int guard_digits = 20)
        : digits_(digits), guard_(guard_digits) {
        if (digits < 30) throw ConfigError("PrecisionContext: digits must be >= 30");
        if (guard_digits < 0) throw ConfigError("PrecisionContext: guard_digits must be >= 0");
    }

    int digits() const { return digits_; }
    int guard_digits() const { return guard_; }

    // Precision in bits for intermediates (digits + guard, rounded up).
    mpfr_prec_t prec() const { return bits_for(digits_ + guard_); }

    // Bits needed for `d` decimal digits.
    static mpfr_prec_t bits_for(int d) {
        return static_cast<mpfr_prec_t>(std::ceil(d * 3.3219280948873623)) + 8;
    }

    // A context with the same guard and `extra` more digits.
    PrecisionContext with_extra(int extra) const {
        return PrecisionContext(digits_ + extra, guard_);
    }

    Real make(long v) const { return Real(v, prec()); }
    Real make(const std::string& s) const { return Real(s, prec()); }
    Real pi() const { return Real::pi(prec()); }
    Real two_pi() const { return Real::pi(prec()) * 2; }

    // 10^-digits: the accuracy contract.
    Real eps() const { return pow10(-digits_, prec()); }
    // 10^-(digits-10): the reproducibility floor used by verdicts.
    Real rounding_floor() const {
        int e = digits_ - 10;
        if (e < 1) e = 1;
        return pow10(-e, prec());
    }

  private:
    int digits_;
    int guard_;
};

}  // namespace divsum

#endif
