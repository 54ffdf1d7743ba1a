#include "toral/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "toral/detail/bareiss.hpp"

namespace toral {

IntMatrix::IntMatrix(int d, std::vector<Int> entries) : dim(d), e(std::move(entries)) {
    if (e.size() != static_cast<size_t>(d) * d)
        throw std::logic_error("IntMatrix: entry count does not match dimension");
}

IntMatrix IntMatrix::identity(int d) {
    IntMatrix m(d);
    for (int i = 0; i < d; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.dim != b.dim) throw std::logic_error("matrix product: dimension mismatch");
    IntMatrix r(a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int k = 0; k < a.dim; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < a.dim; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.dim != b.dim) throw std::logic_error("matrix sum: dimension mismatch");
    IntMatrix r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
    return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.dim != b.dim) throw std::logic_error("matrix difference: dimension mismatch");
    IntMatrix r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] -= b.e[i];
    return r;
}

IntMatrix matrix_power(const IntMatrix& m, long n) {
    if (n < 0) throw std::logic_error("matrix_power: negative exponent");
    IntMatrix acc = IntMatrix::identity(m.dim);
    IntMatrix base = m;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return acc;
}

namespace {

Int det_cofactor(const IntMatrix& m) {
    switch (m.dim) {
        case 0:
            return Int(1);
        case 1:
            return m.at(0, 0);
        case 2:
            return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
        default: {
            Int acc = 0;
            IntMatrix minor(m.dim - 1);
            for (int col = 0; col < m.dim; ++col) {
                if (m.at(0, col) == 0) continue;
                for (int i = 1; i < m.dim; ++i) {
                    int jj = 0;
                    for (int j = 0; j < m.dim; ++j) {
                        if (j == col) continue;
                        minor.at(i - 1, jj++) = m.at(i, j);
                    }
                }
                Int term = m.at(0, col) * det_cofactor(minor);
                if (col & 1) acc -= term;
                else acc += term;
            }
            return acc;
        }
    }
}

}  // namespace

Int det(const IntMatrix& m) {
    if (m.dim <= 4) return det_cofactor(m);
    return detail::bareiss_determinant(m.e, m.dim);
}

IntPoly char_poly(const IntMatrix& m) {
    const int d = m.dim;
    std::vector<Int> coeffs(d + 1, Int(0));
    coeffs[d] = 1;
    IntMatrix work = IntMatrix::identity(d);  // M_0
    for (int k = 1; k <= d; ++k) {
        work = m * work;
        Int tr = 0;
        for (int i = 0; i < d; ++i) tr += work.at(i, i);
        if (tr % k != 0)
            throw std::logic_error("char_poly: Faddeev-LeVerrier division not exact");
        Int ck = -tr / k;
        coeffs[d - k] = ck;
        for (int i = 0; i < d; ++i) work.at(i, i) += ck;
    }
    return IntPoly(std::move(coeffs));
}

Int det_power_minus_identity(const IntMatrix& m, long n) {
    if (n < 1) throw std::logic_error("det_power_minus_identity: n must be >= 1");
    IntMatrix p = matrix_power(m, n);
    for (int i = 0; i < p.dim; ++i) p.at(i, i) -= 1;
    return det(p);
}

bool is_unimodular(const IntMatrix& m) {
    Int d = det(m);
    return d == 1 || d == -1;
}

std::string matrix_hash(const IntMatrix& m) {
    std::ostringstream os;
    os << m.dim;
    for (const Int& x : m.e) os << ';' << x.str();
    const std::string canon = os.str();
    unsigned long long h = 1469598103934665603ULL;
    for (unsigned char ch : canon) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    std::ostringstream hex;
    hex << std::hex << h;
    return hex.str();
}

IntMatrix realize(const BlockSpec& spec) {
    if (spec.powers.empty()) throw std::logic_error("BlockSpec: empty power list");
    for (int a : spec.powers)
        if (a < 1) throw std::logic_error("BlockSpec: powers must be positive");
    const int db = spec.base.dim;
    IntMatrix out(db * static_cast<int>(spec.powers.size()));
    int offset = 0;
    for (int a : spec.powers) {
        IntMatrix blk = matrix_power(spec.base, a);
        for (int i = 0; i < db; ++i)
            for (int j = 0; j < db; ++j) out.at(offset + i, offset + j) = blk.at(i, j);
        offset += db;
    }
    return out;
}

}  // namespace toral
