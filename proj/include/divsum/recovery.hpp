#ifndef DIVSUM_RECOVERY_HPP
#define DIVSUM_RECOVERY_HPP

#include <gmpxx.h>

#include <vector>

#include "divsum/precision.hpp"

namespace divsum::recovery {

// Normalized kernel matrix: rows k = 0..N-2, columns n = 2..N, entry
// Q_k(2 pi n) e^(-2 pi n) with Q_k(x) = P_k(x)/(P_k(2 pi) e^(-2 pi)).
struct QMatrix {
    int a = 1;
    long N = 0;
    std::vector<std::vector<Real>> entries;  // (N-1) x (N-1)
};

struct RecoveryRow {
    long n = 0;
    Real approx;
    mpz_class rounded;
    mpz_class oracle;
    bool match = false;
    bool tie = false;  // approx exactly halfway between integers (reported, never hidden)
};

struct RecoveryResult {
    int a = 1;
    long N = 0;
    int digits_used = 0;
    std::vector<RecoveryRow> rows;  // n = 2..N ascending
    Real max_residual;              // ||Q x + 1||_inf at working precision
};

// Default working digits for a size-N solve: ceil(2 pi N / ln 10) + 120
// (row dynamic range plus output and conditioning slack).
int policy_digits(long N);
// Hard floor below which the solve is refused outright.
int min_required_digits(long N);

QMatrix build_q_matrix(int a, long N, const PrecisionContext& ctx);

// Solve Q x = -1 by Gaussian elimination with partial pivoting (never an
// explicit inverse) and compare against the exact divisor oracle.
RecoveryResult solve_divisors(int a, long N, const PrecisionContext& ctx);

// Solve at policy digits, re-solve at 1.5x, and require 30-significant-digit
// agreement; PrecisionError otherwise.
RecoveryResult solve_divisors_auto(int a, long N);

// N! * prod_{k=1}^{N-2} k!  (determinant of {n^(k+1)}).
mpz_class vandermonde_det(long N);

struct ConvergenceEntry {
    long n = 0;
    long N = 0;
    Real abs_error;
};

// |approx_N(n) - sigma_a(n)| for n <= M across the given ascending N values.
std::vector<ConvergenceEntry> convergence_study(int a, long M, const std::vector<long>& N_list);

// Gaussian elimination with partial pivoting; exposed for the row-scaling
// and exact-arithmetic cross-checks.
std::vector<Real> solve_linear(std::vector<std::vector<Real>> A, std::vector<Real> rhs);

}  // namespace divsum::recovery

#endif
