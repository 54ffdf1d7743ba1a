#ifndef TORAL_POLY_ROOTS_HPP
#define TORAL_POLY_ROOTS_HPP

#include <utility>
#include <vector>

#include "toral/int_poly.hpp"
#include "toral/numeric.hpp"

namespace toral {

// All complex roots of p with multiplicities. Multiplicities are detected
// exactly (square-free factorization over Z) before any numeric refinement;
// each square-free factor is then solved by Aberth-Ehrlich simultaneous
// iteration on the high-precision substrate. Conjugate symmetry is enforced
// structurally: non-real roots are returned as exact conjugate pairs.
//
// Roots are sorted by decreasing modulus, ties broken by decreasing real
// part, then decreasing imaginary part. Throws ConvergenceError if the
// iteration does not settle within its budget.
std::vector<std::pair<Cplx, int>> find_roots(const IntPoly& p, int precision_digits);

}  // namespace toral

#endif
