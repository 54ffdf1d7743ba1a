// Test-only oracles, kept independent of the library code paths they check.
#ifndef TORAL_TESTS_ORACLES_HPP
#define TORAL_TESTS_ORACLES_HPP

#include <random>
#include <vector>

#include "toral/int_matrix.hpp"
#include "toral/int_poly.hpp"
#include "toral/numeric.hpp"

namespace oracles {

using toral::Cplx;
using toral::Int;
using toral::IntMatrix;
using toral::IntPoly;
using toral::Real;

inline IntPoly poly(std::initializer_list<long> coeffs) {
    std::vector<Int> c;
    for (long v : coeffs) c.emplace_back(v);
    return IntPoly(std::move(c));
}

// The running example matrix: companion form of x^4 - 8x^3 + 6x^2 - 8x + 1.
inline IntMatrix quasi4() {
    IntMatrix m(4);
    m.at(0, 3) = -1;
    m.at(1, 0) = 1;
    m.at(1, 3) = 8;
    m.at(2, 1) = 1;
    m.at(2, 3) = -6;
    m.at(3, 2) = 1;
    m.at(3, 3) = 8;
    return m;
}

inline IntMatrix golden_mean() {
    IntMatrix m(2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    m.at(1, 1) = 1;
    return m;
}

inline IntMatrix rotation90() {
    IntMatrix m(2);
    m.at(0, 1) = -1;
    m.at(1, 0) = 1;
    return m;
}

// Characteristic polynomial by Laplace cofactor expansion of xI - M over
// polynomial entries; independent of the Faddeev-LeVerrier route.
inline IntPoly charpoly_cofactor(const IntMatrix& m) {
    const int d = m.dim;
    std::vector<IntPoly> entries(static_cast<size_t>(d) * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            IntPoly p = IntPoly::constant(-m.at(i, j));
            if (i == j) p = p + IntPoly::monomial(1);
            entries[static_cast<size_t>(i) * d + j] = p;
        }
    auto det_rec = [&](auto&& self, std::vector<IntPoly> a, int n) -> IntPoly {
        if (n == 1) return a[0];
        IntPoly acc;
        for (int col = 0; col < n; ++col) {
            std::vector<IntPoly> minor;
            minor.reserve(static_cast<size_t>(n - 1) * (n - 1));
            for (int i = 1; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (j != col) minor.push_back(a[static_cast<size_t>(i) * n + j]);
            IntPoly term = a[static_cast<size_t>(col)] * self(self, minor, n - 1);
            acc = (col % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    return det_rec(det_rec, entries, d);
}

// Schoolbook product, used to check the library multiplication and powers.
inline IntMatrix naive_mul(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix r(a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            Int acc = 0;
            for (int k = 0; k < a.dim; ++k) acc += a.at(i, k) * b.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

// Closed-form spectral data of quasi4 through the palindromic substitution
// y = x + 1/x: y^2 - 8y + 4 = 0, y = 4 +- 2 sqrt(3). The expanding root is
// (y1 + sqrt(y1^2 - 4))/2 with y1 = 4 + 2 sqrt(3); the unit pair satisfies
// 2 cos(2 pi theta) = 4 - 2 sqrt(3).
inline Real quasi4_lambda() {
    Real y1 = 4 + 2 * sqrt(Real(3));
    return (y1 + sqrt(y1 * y1 - 4)) / 2;
}

inline Real quasi4_theta() {
    Real c = (4 - 2 * sqrt(Real(3))) / 2;
    return acos(c) / (2 * toral::pi());
}

inline Real golden_mean_lambda() { return (3 + sqrt(Real(5))) / 2; }

inline Int factorial(int n) {
    Int acc = 1;
    for (int i = 2; i <= n; ++i) acc *= i;
    return acc;
}

inline Int central_binomial(int t) {
    return factorial(2 * t) / (factorial(t) * factorial(t));
}

// Random element of GL_d(Z) as a bounded product of elementary shears and
// transpositions; deterministic for a given seed.
inline IntMatrix random_unimodular(int dim, unsigned seed, int ops = 14) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(0, dim - 1);
    std::uniform_int_distribution<int> shear(-2, 2);
    std::uniform_int_distribution<int> kind(0, 3);
    IntMatrix m = IntMatrix::identity(dim);
    for (int step = 0; step < ops; ++step) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        if (kind(rng) == 0) {
            for (int c = 0; c < dim; ++c) std::swap(m.at(i, c), m.at(j, c));
        } else {
            int s = shear(rng);
            if (s == 0) s = 1;
            for (int c = 0; c < dim; ++c) m.at(i, c) += s * m.at(j, c);
        }
    }
    return m;
}

// Exact inverse of a unimodular matrix via the adjugate.
inline IntMatrix adjugate_inverse(const IntMatrix& m) {
    const int d = m.dim;
    auto minor_det = [&](int row, int col) {
        IntMatrix minor(d - 1);
        int ii = 0;
        for (int i = 0; i < d; ++i) {
            if (i == row) continue;
            int jj = 0;
            for (int j = 0; j < d; ++j) {
                if (j == col) continue;
                minor.at(ii, jj++) = m.at(i, j);
            }
            ++ii;
        }
        return toral::det(minor);
    };
    Int determinant = toral::det(m);
    IntMatrix inv(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Int c = minor_det(j, i);
            if ((i + j) % 2 == 1) c = -c;
            inv.at(i, j) = c / determinant;  // det = +-1
        }
    return inv;
}

inline Real harmonic(long n) {
    Real acc = 0;
    for (long k = 1; k <= n; ++k) acc += Real(1) / k;
    return acc;
}

}  // namespace oracles

#endif
