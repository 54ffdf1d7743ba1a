#ifndef TORAL_RESONANCE_HPP
#define TORAL_RESONANCE_HPP

#include <vector>

#include "toral/int_matrix.hpp"
#include "toral/numeric.hpp"
#include "toral/spectrum.hpp"

namespace toral {

// Finitely supported Laurent polynomial with exact integer coefficients,
// stored densely over [min_exp, min_exp + coeffs.size() - 1].
struct LaurentPoly {
    int min_exp = 0;
    std::vector<Int> coeffs;

    static LaurentPoly one();

    Int coeff(int exponent) const;
    Int constant_term() const { return coeff(0); }
    int max_exp() const { return min_exp + static_cast<int>(coeffs.size()) - 1; }
    void trim();
};

// cur * (2 - z^a - z^{-a}), exact.
LaurentPoly mul_pair_factor(const LaurentPoly& cur, int a);

enum class ResonanceMethod { numeric, exact_block };

struct OmegaEntry {
    Real argument;  // in [0, 1): omega = e^{2 pi i argument}
    Cplx omega;
    Int k;  // signed subset count K(omega)
};

// The resonance set Omega with its signed counts, and m = K(1).
struct ResonanceProfile {
    int t = 0;
    std::vector<OmegaEntry> omegas;  // sorted by argument; zero K dropped
    Int m;
    ResonanceMethod method = ResonanceMethod::numeric;
    int precision_digits = 0;
};

// Numeric resonance detection: enumerate all 2^{2t} subsets of the
// unit-modulus eigenvalues, cluster the products by argument with radius
// 10^{-P/2} and sum the signs (-1)^{|I|} per cluster. Distinct cluster
// centers inside the 10^{-P/4} ambiguity band raise
// PrecisionAmbiguityError. The subset walk is Gray-coded, so each step
// costs one high-precision addition.
//
// resonance_numeric splits the subset index range into fixed-size chunks
// across OpenMP threads and merges the per-chunk clusters in chunk order;
// the result does not depend on the thread count.
// resonance_numeric_serial is the single-pass reference.
//
// t = 0 yields the trivial profile {1 -> +1}, m = 1.
// t > 12 (16M subsets) is rejected.
ResonanceProfile resonance_numeric(const Spectrum& sp);
ResonanceProfile resonance_numeric_serial(const Spectrum& sp);

// Exact resonance count for the block construction with one unit pair in
// the base: m equals the constant term of prod_j (2 - z^{a_j} - z^{-a_j}),
// computed by exact Laurent multiplication.
Int m_exact_block(const std::vector<int>& powers);

// Full profile for the block construction: exponent e of the Laurent
// product maps to omega = e^{2 pi i e theta}, where theta is the base's
// unit argument. Requires the base spectrum to have exactly one unit pair.
ResonanceProfile block_profile_exact(const std::vector<int>& powers,
                                     const Real& base_theta, int precision_digits);

// [m_exact_block({1..t}) for t = 1..max_t], computed incrementally.
std::vector<Int> m_sequence(int max_t);

// Cesaro average (1/N) sum_{n=1..N} prod_i (2 - 2 cos(2 pi theta_i n)) in
// double precision; converges to m by equidistribution. The parallel
// version sums fixed 4096-term chunks in order (thread-count independent
// up to the usual double rounding); the serial version is the reference.
double cesaro_average(const std::vector<Real>& unit_args, long n_terms);
double cesaro_average_serial(const std::vector<Real>& unit_args, long n_terms);

// Re( -sum_{omega != 1} K(omega) log(1 - omega) ): the resonance part of
// the Mertens constant. The imaginary parts cancel by conjugate symmetry;
// a residual above 10^{-P/3} raises an internal error.
Real resonance_log_constant(const ResonanceProfile& profile);

}  // namespace toral

#endif
