#ifndef TORAL_INT_POLY_HPP
#define TORAL_INT_POLY_HPP

#include <utility>
#include <vector>

#include "toral/numeric.hpp"

namespace toral {

// Dense univariate polynomial over Z, constant coefficient first.
// Normal form: empty vector is the zero polynomial; otherwise the leading
// coefficient is nonzero.
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

    static IntPoly constant(Int v);
    static IntPoly monomial(int degree, Int coeff = Int(1));

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Int& lc() const { return c.back(); }
    Int coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : Int(0);
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    Int eval(const Int& x) const;

    bool operator==(const IntPoly& o) const { return c == o.c; }

    std::string str() const;  // human-readable, for diagnostics
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const Int& s, const IntPoly& p);

IntPoly derivative(const IntPoly& p);

// Exact division: throws std::logic_error if b does not divide a over Z[x].
IntPoly div_exact(const IntPoly& a, const IntPoly& b);

// True iff b | a in Q[x] (equivalently Z[x] up to content for primitive b).
bool divides(const IntPoly& b, const IntPoly& a);

Int content(const IntPoly& p);
IntPoly primitive_part(const IntPoly& p);  // positive leading coefficient

// Primitive gcd with positive leading coefficient (primitive PRS).
IntPoly poly_gcd(IntPoly a, IntPoly b);

// Yun square-free decomposition: list of (primitive factor, multiplicity)
// with multiplicities in increasing order. Constant content is dropped.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

// k-th cyclotomic polynomial, computed by the exact integer recursion
// Phi_k = (x^k - 1) / prod_{d | k, d < k} Phi_d and memoized.
IntPoly cyclotomic(int k);

// Euler's totient by trial division.
long euler_phi(long k);

// Resultant Res(a, b), exact, via the Sylvester matrix and fraction-free
// elimination. For monic a this equals prod b(alpha_i) over the roots of a.
Int resultant(const IntPoly& a, const IntPoly& b);

}  // namespace toral

#endif
