#include "toral/poly_roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace toral {

namespace {

Cplx eval_poly(const std::vector<Real>& c, const Cplx& z) {
    Cplx acc(c.back());
    for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) {
        acc *= z;
        acc.re += c[i];
    }
    return acc;
}

// Roots of a square-free integer polynomial, simple by construction.
std::vector<Cplx> roots_squarefree(const IntPoly& p) {
    const int deg = p.degree();
    std::vector<Cplx> z;
    if (deg == 1) {
        z.emplace_back(Real(-p.c[0]) / Real(p.c[1]), Real(0));
        return z;
    }
    if (deg == 2) {
        // Quadratic formula with an exact integer discriminant.
        Int disc = p.c[1] * p.c[1] - 4 * p.c[2] * p.c[0];
        Real a2 = 2 * Real(p.c[2]);
        Real mb = -Real(p.c[1]);
        if (disc >= 0) {
            Real s = sqrt(Real(disc));
            z.emplace_back((mb + s) / a2, Real(0));
            z.emplace_back((mb - s) / a2, Real(0));
        } else {
            Real s = sqrt(Real(-disc));
            z.emplace_back(mb / a2, s / a2);
            z.emplace_back(mb / a2, -s / a2);
        }
        return z;
    }

    std::vector<Real> coeffs(deg + 1);
    for (int i = 0; i <= deg; ++i) coeffs[i] = Real(p.c[i]);
    std::vector<Real> dcoeffs(deg);
    for (int i = 1; i <= deg; ++i) dcoeffs[i - 1] = Real(i) * coeffs[i];

    // Seeds on two rings: the geometric mean of the root moduli and the
    // Cauchy bound, with an angular offset breaking conjugate symmetry.
    Real cauchy = 0;
    for (int i = 0; i < deg; ++i) cauchy = (std::max)(cauchy, abs(coeffs[i] / coeffs[deg]));
    cauchy += 1;
    Real gmean = pow(abs(Real(p.c[0]) / Real(p.c[deg])), Real(1) / deg);
    if (gmean == 0) gmean = Real(1) / 2;
    z.resize(deg);
    for (int k = 0; k < deg; ++k) {
        Real radius = (k % 2 == 0) ? gmean : cauchy;
        Real angle = 2 * pi() * (Real(k) + Real(37) / 100) / deg + Real(1) / 2;
        z[k] = {radius * cos(angle), radius * sin(angle)};
    }

    const Real stop = pow10(-(kSubstrateDigits - 6));
    const int max_iters = 600;
    for (int iter = 0; iter < max_iters; ++iter) {
        Real worst = 0;
        for (int k = 0; k < deg; ++k) {
            Cplx pv = eval_poly(coeffs, z[k]);
            Cplx dv = eval_poly(dcoeffs, z[k]);
            if (abs(dv) == 0) {
                // Nudge off a critical point; square-free input guarantees
                // the root itself is simple.
                z[k].re += stop;
                worst = 1;
                continue;
            }
            Cplx newton = pv / dv;
            Cplx repel(Real(0));
            for (int j = 0; j < deg; ++j) {
                if (j == k) continue;
                Cplx diff = z[k] - z[j];
                repel += Cplx(Real(1)) / diff;
            }
            Cplx denom = Cplx(Real(1)) - newton * repel;
            Cplx corr = newton / denom;
            z[k] -= corr;
            Real rel = abs(corr) / (1 + abs(z[k]));
            worst = (std::max)(worst, rel);
        }
        if (worst < stop) return z;
    }
    throw ConvergenceError("root refinement did not converge for " + p.str());
}

// Force exact conjugate symmetry on a converged simple-root list.
void enforce_conjugate_pairs(std::vector<Cplx>& roots) {
    const Real real_band = pow10(-(kSubstrateDigits - 20));
    for (auto& r : roots)
        if (abs(r.im) <= real_band * (1 + abs(r.re))) r.im = 0;
    std::vector<bool> done(roots.size(), false);
    for (size_t i = 0; i < roots.size(); ++i) {
        if (done[i] || roots[i].im == 0) continue;
        size_t best = i;
        Real best_dist = -1;
        for (size_t j = 0; j < roots.size(); ++j) {
            if (j == i || done[j] || roots[j].im == 0) continue;
            if ((roots[i].im > 0) == (roots[j].im > 0)) continue;
            Real dist = abs(roots[i] - roots[j].conj());
            if (best_dist < 0 || dist < best_dist) {
                best_dist = dist;
                best = j;
            }
        }
        if (best == i)
            throw ConvergenceError("unpaired complex root in conjugate enforcement");
        Cplx avg{(roots[i].re + roots[best].re) / 2,
                 (abs(roots[i].im) + abs(roots[best].im)) / 2};
        bool i_positive = roots[i].im > 0;
        roots[i] = i_positive ? avg : avg.conj();
        roots[best] = i_positive ? avg.conj() : avg;
        done[i] = done[best] = true;
    }
}

}  // namespace

std::vector<std::pair<Cplx, int>> find_roots(const IntPoly& p, int precision_digits) {
    validate_precision(precision_digits);
    if (p.degree() < 1) throw std::logic_error("find_roots: degree must be >= 1");

    std::vector<std::pair<Cplx, int>> out;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        std::vector<Cplx> roots = roots_squarefree(factor);
        enforce_conjugate_pairs(roots);
        for (auto& r : roots) out.emplace_back(r, mult);
    }

    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        Real ma = abs(a.first), mb = abs(b.first);
        if (ma != mb) return ma > mb;
        if (a.first.re != b.first.re) return a.first.re > b.first.re;
        return a.first.im > b.first.im;
    });

    int total = 0;
    for (const auto& [root, mult] : out) total += mult;
    if (total != p.degree())
        throw std::logic_error("find_roots: multiplicity total mismatch");
    return out;
}

}  // namespace toral
