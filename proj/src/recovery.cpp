#include "divsum/recovery.hpp"

#include <cmath>

#include "divsum/arith.hpp"
#include "divsum/errors.hpp"
#include "divsum/kernels.hpp"

namespace divsum::recovery {

namespace {

constexpr double kTwoPiOverLn10 = 2.728752708966449;

void check_a(int a) {
    if (!(a == 1 || a == 3 || a == 5)) throw SpecError("recovery: a must be 1, 3 or 5");
}

}  // namespace

int policy_digits(long N) {
    return static_cast<int>(std::ceil(kTwoPiOverLn10 * static_cast<double>(N))) + 120;
}

int min_required_digits(long N) {
    return static_cast<int>(std::ceil(kTwoPiOverLn10 * static_cast<double>(N))) + 30;
}

QMatrix build_q_matrix(int a, long N, const PrecisionContext& ctx) {
    check_a(a);
    if (N < 3) throw DomainError("build_q_matrix: N must be >= 3");
    if (ctx.digits() < min_required_digits(N))
        throw ConfigError("build_q_matrix: working digits below the precision floor for this N");
    mpfr_prec_t prec = ctx.prec();
    QMatrix qm;
    qm.a = a;
    qm.N = N;
    Real two_pi = ctx.two_pi();
    Real decay = exp(-two_pi);  // e^(-2 pi)
    // e^(-2 pi n) built by repeated multiplication, exact to working precision.
    std::vector<Real> expn;
    expn.reserve(static_cast<size_t>(N) + 1);
    Real e(1, prec);
    for (long n = 0; n <= N; ++n) {
        expn.push_back(e);
        e *= decay;
    }
    qm.entries.reserve(static_cast<size_t>(N - 1));
    for (int k = 0; k <= N - 2; ++k) {
        Real denom = kernels::constraint_poly_at(a, k, two_pi, ctx) * expn[1];
        std::vector<Real> row;
        row.reserve(static_cast<size_t>(N - 1));
        for (long n = 2; n <= N; ++n) {
            Real num = kernels::constraint_poly_at(a, k, two_pi * n, ctx) * expn[static_cast<size_t>(n)];
            row.push_back(num / denom);
        }
        qm.entries.push_back(std::move(row));
    }
    return qm;
}

std::vector<Real> solve_linear(std::vector<std::vector<Real>> A, std::vector<Real> rhs) {
    size_t m = A.size();
    if (m == 0 || rhs.size() != m) throw DomainError("solve_linear: bad dimensions");
    mpfr_prec_t prec = rhs[0].prec();
    Real tiny = pow10(-static_cast<long>(static_cast<double>(prec) * 0.30102 * 2), prec);
    for (size_t col = 0; col < m; ++col) {
        size_t piv = col;
        Real best = abs(A[col][col]);
        for (size_t r = col + 1; r < m; ++r) {
            Real v = abs(A[r][col]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (!(best > tiny))
            throw PrecisionError("solve_linear: matrix singular to working precision");
        if (piv != col) {
            std::swap(A[piv], A[col]);
            swap(rhs[piv], rhs[col]);
        }
        for (size_t r = col + 1; r < m; ++r) {
            if (A[r][col].is_zero()) continue;
            Real f = A[r][col] / A[col][col];
            for (size_t c = col; c < m; ++c) A[r][c] -= f * A[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<Real> x(m, Real(0, prec));
    for (size_t r = m; r-- > 0;) {
        Real acc = rhs[r];
        for (size_t c = r + 1; c < m; ++c) acc -= A[r][c] * x[c];
        x[r] = acc / A[r][r];
    }
    return x;
}

RecoveryResult solve_divisors(int a, long N, const PrecisionContext& ctx) {
    QMatrix qm = build_q_matrix(a, N, ctx);
    mpfr_prec_t prec = ctx.prec();
    size_t m = qm.entries.size();
    std::vector<Real> rhs(m, Real(-1, prec));
    std::vector<Real> x = solve_linear(qm.entries, rhs);

    RecoveryResult out;
    out.a = a;
    out.N = N;
    out.digits_used = ctx.digits();
    out.max_residual = Real(0, prec);
    for (size_t r = 0; r < m; ++r) {
        Real acc(1, prec);  // Q x + 1
        for (size_t c = 0; c < m; ++c) acc += qm.entries[r][c] * x[c];
        Real v = abs(acc);
        if (v > out.max_residual) out.max_residual = v;
    }
    arith::DivisorOracle oracle(a);
    for (size_t c = 0; c < m; ++c) {
        RecoveryRow row;
        row.n = static_cast<long>(c) + 2;
        row.approx = x[c];
        row.tie = is_half_tie(x[c]);
        row.rounded = round_to_integer(x[c]);
        row.oracle = oracle.value(row.n);
        row.match = row.rounded == row.oracle;
        out.rows.push_back(std::move(row));
    }
    return out;
}

RecoveryResult solve_divisors_auto(int a, long N) {
    int d0 = policy_digits(N);
    RecoveryResult lo = solve_divisors(a, N, PrecisionContext(d0));
    RecoveryResult hi = solve_divisors(a, N, PrecisionContext(d0 + d0 / 2));
    for (size_t i = 0; i < lo.rows.size(); ++i) {
        Real scale = abs(hi.rows[i].approx);
        if (scale < 1) scale = Real(1, scale.prec());
        if (abs(lo.rows[i].approx - hi.rows[i].approx) > scale * pow10(-30, scale.prec()))
            throw PrecisionError("solve_divisors_auto: two-precision confirmation failed");
    }
    return hi;
}

mpz_class vandermonde_det(long N) {
    if (N < 3) throw DomainError("vandermonde_det: N must be >= 3");
    mpz_class det;
    mpz_fac_ui(det.get_mpz_t(), static_cast<unsigned long>(N));
    for (long k = 1; k <= N - 2; ++k) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
        det *= f;
    }
    return det;
}

std::vector<ConvergenceEntry> convergence_study(int a, long M, const std::vector<long>& N_list) {
    check_a(a);
    if (N_list.empty()) throw DomainError("convergence_study: empty N list");
    for (size_t i = 1; i < N_list.size(); ++i)
        if (N_list[i] <= N_list[i - 1]) throw DomainError("convergence_study: N list must ascend");
    if (N_list.back() < M) throw DomainError("convergence_study: max(N_list) must be >= M");
    std::vector<ConvergenceEntry> table;
    arith::DivisorOracle oracle(a);
    for (long N : N_list) {
        RecoveryResult res = solve_divisors_auto(a, N);
        for (const auto& row : res.rows) {
            if (row.n > M) break;
            ConvergenceEntry e;
            e.n = row.n;
            e.N = N;
            e.abs_error = abs(row.approx - Real(oracle.value(row.n), row.approx.prec()));
            table.push_back(std::move(e));
        }
    }
    return table;
}

}  // namespace divsum::recovery
