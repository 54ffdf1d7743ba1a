#ifndef TORAL_ORBIT_HPP
#define TORAL_ORBIT_HPP

#include <string>
#include <vector>

#include "toral/int_matrix.hpp"
#include "toral/numeric.hpp"
#include "toral/spectrum.hpp"

namespace toral {

struct OrbitRow {
    long n = 0;
    Int fix;     // F(n) = |det(M^n - I)|, exact
    Int orbits;  // O(n) by Moebius inversion, exact
    Real mertens;  // M(n) = sum_{k <= n} O(k) e^{-hk}
};

struct OrbitTable {
    std::vector<OrbitRow> rows;  // n = 1..N
    Real entropy_h{0};
    int working_digits = 0;
    DynClass classification = DynClass::non_ergodic;
    std::string source_hash;  // canonical hash of the defining matrix

    long max_n() const { return static_cast<long>(rows.size()); }
    const OrbitRow& row(long n) const { return rows.at(static_cast<size_t>(n - 1)); }
};

// Moebius function by trial-division factorization.
int mobius(long n);

// F(n): number of points fixed by the n-th iterate, as an exact integer.
// Throws NonErgodicError when some eigenvalue is a root of unity and
// NonUnimodularError when |det M| != 1.
Int fix_count(const IntMatrix& m, long n);

// O(n) = (1/n) sum_{d | n} mu(n/d) F(d), exact. The divisibility by n is
// asserted; failure indicates an arithmetic bug, not bad input.
Int orbit_count(const IntMatrix& m, long n);

// Full table for n = 1..N: exact F and O plus the Mertens partial sums
// M(n) = sum_{k<=n} O(k) e^{-hk}, each term evaluated in the log domain so
// no intermediate e^{-hk} underflows. N = 0 yields an empty table.
//
// mertens_series runs the power chain in fixed-size blocks across OpenMP
// threads; mertens_series_serial is the single-chain reference. Both
// produce bit-identical integers and identical Mertens digits (summation
// is performed in ascending n either way).
OrbitTable mertens_series(const IntMatrix& m, long n_max, int working_digits);
OrbitTable mertens_series_serial(const IntMatrix& m, long n_max, int working_digits);

// Block-aware variants: det((+)_k B_k^n - I) = prod_k det(B_k^n - I), so the
// table of a block construction is computed from per-block power chains
// instead of one large determinant. Exactness is unchanged; the rows agree
// with the generic route on the realized matrix.
OrbitTable mertens_series(const BlockSpec& spec, long n_max, int working_digits);
OrbitTable mertens_series_serial(const BlockSpec& spec, long n_max,
                                 int working_digits);

// E_n = | F(n) / |Lambda|^n - V_n |, evaluated from the spectrum through
// the identity F(n) = |Lambda|^n V_n prod(1 - lambda^{-n}) prod(1 - mu^n)
// with the tiny factors kept in the log domain. Direct subtraction would
// cancel below any fixed precision once n log(kappa) exceeds the digit
// budget; this route stays accurate in relative terms for all n here.
Real fix_ratio_deviation(const Spectrum& sp, long n);

}  // namespace toral

#endif
