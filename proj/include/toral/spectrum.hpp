#ifndef TORAL_SPECTRUM_HPP
#define TORAL_SPECTRUM_HPP

#include <utility>
#include <vector>

#include "toral/int_matrix.hpp"
#include "toral/int_poly.hpp"
#include "toral/numeric.hpp"

namespace toral {

enum class DynClass { hyperbolic, quasihyperbolic, non_ergodic };

const char* to_string(DynClass c);

// Eigenvalue data of a toral automorphism together with the derived
// dynamical invariants.
//
//   s          eigenvalues with |lambda| > 1, counted with multiplicity
//   t          unit-modulus conjugate pairs
//   entropy_h  sum of log|lambda| over the expanding eigenvalues
//   lambda_abs product of the expanding |lambda| (= e^h)
//   kappa      min{|lambda_s|, |lambda_{s+2t+1}|^{-1}}, > 1 when ergodic
//   rate_R     min{kappa, lambda_abs^{1/2}}
//   unit_args  one theta in (0, 1/2) per unit-modulus conjugate pair
//
// For non-ergodic input kappa and rate_R are reported as 0 when undefined.
struct Spectrum {
    std::vector<std::pair<Cplx, int>> roots;  // sorted by decreasing modulus
    int s = 0;
    int t = 0;
    Real entropy_h{0};
    Real lambda_abs{1};
    Real kappa{0};
    Real rate_R{0};
    std::vector<Real> unit_args;
    DynClass classification = DynClass::non_ergodic;
    int precision_digits = 0;

    bool ergodic() const { return classification != DynClass::non_ergodic; }
};

// Exact root-of-unity detection: true iff some cyclotomic polynomial
// Phi_k with phi(k) <= deg p divides p. This is a certificate, not a
// numeric test.
bool has_cyclotomic_factor(const IntPoly& p);

// How a modulus value relates to the unit circle at precision P:
// within 10^{-P/2} counts as unit, within 10^{-P/4} but not 10^{-P/2}
// is ambiguous (throws at the call sites that must decide).
enum class ModulusBand { inside, unit, outside, ambiguous };
ModulusBand classify_modulus(const Real& modulus, int precision_digits);

// Full classification of the automorphism with characteristic polynomial p.
// Requires |p(0)| = 1 (a GL_d(Z) source). Ergodicity is decided exactly;
// the unit-circle membership of each root is decided numerically within
// the P-derived bands and cross-checked against pair parity.
Spectrum classify(const IntPoly& p, int precision_digits);

// Spectrum of the block construction directly from the base spectrum:
// the roots are lambda^{a_k}; no large characteristic polynomial is solved.
// Throws NonErgodicError if the base is not ergodic.
Spectrum spectrum_of_block(const BlockSpec& spec, int precision_digits);

// Almost-periodic factor V_n = prod_i (2 - 2 cos(2 pi theta_i n)).
Real v_factor(const Spectrum& s, long n);

}  // namespace toral

#endif
