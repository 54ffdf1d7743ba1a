#include "toral/int_poly.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "toral/detail/bareiss.hpp"

namespace toral {

IntPoly IntPoly::constant(Int v) {
    IntPoly p;
    if (v != 0) p.c.push_back(std::move(v));
    return p;
}

IntPoly IntPoly::monomial(int degree, Int coeff) {
    IntPoly p;
    if (coeff != 0) {
        p.c.assign(degree + 1, Int(0));
        p.c[degree] = std::move(coeff);
    }
    return p;
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c[i] == 0) continue;
        if (!first) os << (c[i] > 0 ? " + " : " - ");
        else if (c[i] < 0) os << "-";
        Int a = abs(c[i]);
        if (a != 1 || i == 0) os << a.str();
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    IntPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

IntPoly operator*(const Int& s, const IntPoly& p) {
    if (s == 0) return IntPoly();
    IntPoly r = p;
    for (auto& x : r.c) x *= s;
    return r;
}

IntPoly derivative(const IntPoly& p) {
    IntPoly r;
    if (p.degree() < 1) return r;
    r.c.resize(p.c.size() - 1);
    for (size_t i = 1; i < p.c.size(); ++i) r.c[i - 1] = Int(i) * p.c[i];
    r.trim();
    return r;
}

IntPoly div_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::logic_error("polynomial division by zero");
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree())
        throw std::logic_error("div_exact: degree of divisor exceeds dividend");
    std::vector<Int> rem = a.c;
    int dq = a.degree() - b.degree();
    std::vector<Int> q(dq + 1, Int(0));
    for (int k = dq; k >= 0; --k) {
        Int& head = rem[k + b.degree()];
        if (head == 0) continue;
        if (head % b.lc() != 0)
            throw std::logic_error("div_exact: inexact leading division");
        q[k] = head / b.lc();
        for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= q[k] * b.c[j];
    }
    for (const Int& x : rem)
        if (x != 0) throw std::logic_error("div_exact: nonzero remainder");
    IntPoly r;
    r.c = std::move(q);
    r.trim();
    return r;
}

bool divides(const IntPoly& b, const IntPoly& a) {
    if (b.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    if (a.degree() < b.degree()) return false;
    // Pseudo-division; b | a in Q[x] iff the pseudo-remainder vanishes.
    std::vector<Int> rem = a.c;
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Int head = rem[k + b.degree()];
        if (head == 0) continue;
        for (int i = 0; i < k + b.degree(); ++i) rem[i] *= b.lc();
        for (int j = 0; j < b.degree(); ++j) rem[k + j] -= head * b.c[j];
        rem[k + b.degree()] = 0;
    }
    for (const Int& x : rem)
        if (x != 0) return false;
    return true;
}

Int content(const IntPoly& p) {
    Int g = 0;
    for (const Int& x : p.c) g = gcd(g, x);
    return g;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    if (p.lc() < 0) g = -g;
    IntPoly r = p;
    for (auto& x : r.c) x /= g;
    return r;
}

namespace {

// Pseudo-remainder prem(a, b): lc(b)^{deg a - deg b + 1} * a mod b.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> rem = a.c;
    int db = b.degree();
    for (int k = a.degree() - db; k >= 0; --k) {
        Int head = rem[k + db];
        for (int i = 0; i < static_cast<int>(rem.size()); ++i)
            if (i != k + db) rem[i] *= b.lc();
        for (int j = 0; j < db; ++j) rem[k + j] -= head * b.c[j];
        rem[k + db] = 0;
    }
    rem.resize(db);
    IntPoly r;
    r.c = std::move(rem);
    r.trim();
    return r;
}

}  // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(a, b);
        a = std::move(b);
        b = primitive_part(r);
    }
    if (a.degree() == 0) return IntPoly::constant(Int(1));
    return a;
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
    std::vector<std::pair<IntPoly, int>> out;
    if (p.degree() < 1) return out;
    IntPoly f = primitive_part(p);
    IntPoly fp = derivative(f);
    IntPoly a0 = poly_gcd(f, fp);
    IntPoly b = div_exact(f, a0);
    IntPoly c = div_exact(fp, a0);
    IntPoly d = c - derivative(b);
    int i = 1;
    while (b.degree() > 0) {
        IntPoly ai = poly_gcd(b, d);
        if (ai.degree() > 0) out.emplace_back(ai, i);
        b = div_exact(b, ai);
        c = div_exact(d, ai);
        d = c - derivative(b);
        ++i;
    }
    return out;
}

long euler_phi(long k) {
    long result = k;
    for (long q = 2; q * q <= k; ++q) {
        if (k % q == 0) {
            while (k % q == 0) k /= q;
            result -= result / q;
        }
    }
    if (k > 1) result -= result / k;
    return result;
}

IntPoly cyclotomic(int k) {
    static std::map<int, IntPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto compute = [](auto&& self, int n) -> const IntPoly& {
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
        IntPoly num = IntPoly::monomial(n) - IntPoly::constant(Int(1));
        IntPoly den = IntPoly::constant(Int(1));
        for (int d = 1; d < n; ++d)
            if (n % d == 0) den = den * self(self, d);
        return cache.emplace(n, div_exact(num, den)).first->second;
    };
    return compute(compute, k);
}

Int resultant(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return Int(0);
    int m = a.degree(), n = b.degree();
    if (m == 0) return pow(a.c[0], n);
    if (n == 0) return pow(b.c[0], m);
    int size = m + n;
    std::vector<Int> s(static_cast<size_t>(size) * size, Int(0));
    // Sylvester matrix: n rows of a's coefficients, m rows of b's.
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) s[r * size + r + j] = a.c[m - j];
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) s[(n + r) * size + r + j] = b.c[n - j];
    return detail::bareiss_determinant(std::move(s), size);
}

}  // namespace toral
