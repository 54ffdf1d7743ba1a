#ifndef TORAL_ASYMPTOTICS_HPP
#define TORAL_ASYMPTOTICS_HPP

#include <utility>
#include <vector>

#include "toral/numeric.hpp"
#include "toral/orbit.hpp"

namespace toral {

enum class FitMethod { two_point, least_squares };

const char* to_string(FitMethod m);

// Fit of M(n) ~ m log n + C over a window.
struct MertensFit {
    double m_hat = 0;
    double c_hat = 0;
    long n_low = 0;
    long n_high = 0;
    FitMethod method = FitMethod::two_point;
    std::vector<std::pair<long, double>> residuals;  // (n, M(n) - m log n - C)

    double max_abs_residual() const;
};

// two_point: m_hat from the endpoint difference quotient, which cancels C
// exactly. least_squares: regression of M(n) on log n. Either way C_hat is
// the windowed mean of M(n) - m_hat log n, averaging out the oscillatory
// remainder. Requires n_low >= 10, n_high <= table length and
// n_high >= 2 n_low (throws WindowError otherwise).
MertensFit fit_mertens(const OrbitTable& table, long n_low, long n_high,
                       FitMethod method = FitMethod::two_point);

// B_0..B_count as exact rationals (B_1 = -1/2 convention), by the
// recurrence sum_{j<=n} binom(n+1, j) B_j = 0.
std::vector<Rat> bernoulli_numbers(int count);

// sum_{r=0}^{k-1} B_{r+1} / ((r+1) N^{r+1}) as an exact rational.
Rat euler_maclaurin_tail_exact(long n, int k);

Real euler_maclaurin_tail(long n, int k);

// Hyperbolic-case expansion check: estimate C from the last row, then
// report D(N) = M(N) - log N - C - tail(N, k) across the sample range.
struct ExpansionReport {
    int order_k = 0;
    double c_estimate = 0;
    std::vector<std::pair<long, double>> deviations;  // (n, D(n))
    double max_abs_deviation = 0;
    bool short_window = false;  // range had to be shrunk to fit the table
    std::string source_hash;
};

// Throws NonErgodicError-family errors upstream; here: logic_error when the
// table is not hyperbolic. The default sample range is [100, 1000] clamped
// to the table; tables shorter than the range are reported with
// short_window = true over [max_n/2, max_n].
ExpansionReport hyperbolic_expansion_check(const OrbitTable& table, int k,
                                           long n_lo = 100, long n_hi = 1000);

// Scaled-residual report: the sequence n * residual(n) over the fit window.
// For a quasihyperbolic table this sequence stays bounded but keeps
// oscillating; for a hyperbolic table it settles near B_1-term behaviour.
struct OscillationReport {
    std::vector<std::pair<long, double>> scaled;  // (n, n * residual(n))
    double max_abs = 0;
    double median_abs = 0;
    int direction_reversals = 0;  // non-monotone joints in the sequence
    int sign_changes = 0;
    bool negligible = false;  // residuals at floating-point noise level
    std::string source_hash;
};

OscillationReport oscillation_report(const OrbitTable& table, const MertensFit& fit);

}  // namespace toral

#endif
