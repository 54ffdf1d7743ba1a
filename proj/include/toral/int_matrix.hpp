#ifndef TORAL_INT_MATRIX_HPP
#define TORAL_INT_MATRIX_HPP

#include <vector>

#include "toral/int_poly.hpp"
#include "toral/numeric.hpp"

namespace toral {

// Dense square matrix over Z with arbitrary-precision entries, row-major.
struct IntMatrix {
    int dim = 0;
    std::vector<Int> e;

    IntMatrix() = default;
    explicit IntMatrix(int d) : dim(d), e(static_cast<size_t>(d) * d, Int(0)) {}
    IntMatrix(int d, std::vector<Int> entries);

    static IntMatrix identity(int d);

    Int& at(int i, int j) { return e[static_cast<size_t>(i) * dim + j]; }
    const Int& at(int i, int j) const { return e[static_cast<size_t>(i) * dim + j]; }

    bool operator==(const IntMatrix& o) const { return dim == o.dim && e == o.e; }
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

// Exact M^n for n >= 0 by binary powering; M^0 is the identity.
IntMatrix matrix_power(const IntMatrix& m, long n);

// Exact determinant: cofactor expansion for dim <= 4, Bareiss elimination
// beyond (the two routes cross-check each other in the tests).
Int det(const IntMatrix& m);

// Characteristic polynomial det(xI - M), monic, exact integer coefficients,
// by the Faddeev-LeVerrier recurrence. Every internal division is exact.
IntPoly char_poly(const IntMatrix& m);

// Exact det(M^n - I) for n >= 1. A zero result is valid output here;
// ergodicity enforcement lives in the orbit-counting layer.
Int det_power_minus_identity(const IntMatrix& m, long n);

bool is_unimodular(const IntMatrix& m);

// FNV-1a hash of the canonical entry string; stable across runs and
// platforms, used to stamp derived tables and reports.
std::string matrix_hash(const IntMatrix& m);

// Block construction: the direct sum of base^{a_1}, ..., base^{a_t}.
struct BlockSpec {
    IntMatrix base;
    std::vector<int> powers;
};

// Materialize the block-diagonal matrix described by a BlockSpec.
IntMatrix realize(const BlockSpec& spec);

}  // namespace toral

#endif
