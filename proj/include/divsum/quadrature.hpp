#ifndef DIVSUM_QUADRATURE_HPP
#define DIVSUM_QUADRATURE_HPP

#include <functional>

#include "divsum/complexnum.hpp"
#include "divsum/precision.hpp"

namespace divsum::quadrature {

struct QuadResult {
    Complex value;
    Real error_estimate;  // |I_m - I_{m-1}| based
    int levels = 0;
    long evaluations = 0;
    bool converged = false;
};

// Tanh-sinh (double-exponential) quadrature of a complex-valued integrand
// over the real segment [a, b]. `tol` is an absolute tolerance. Throws
// PrecisionError when the level cap is reached without convergence.
QuadResult integrate(const std::function<Complex(const Real&)>& f,
                     const Real& a, const Real& b, const Real& tol,
                     mpfr_prec_t prec, int max_level = 13);

}  // namespace divsum::quadrature

#endif
