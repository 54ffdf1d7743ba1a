#include "toral/spectrum.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "toral/poly_roots.hpp"

namespace toral {

const char* to_string(DynClass c) {
    switch (c) {
        case DynClass::hyperbolic: return "hyperbolic";
        case DynClass::quasihyperbolic: return "quasihyperbolic";
        case DynClass::non_ergodic: return "non_ergodic";
    }
    return "?";
}

bool has_cyclotomic_factor(const IntPoly& p) {
    const int d = p.degree();
    // phi(k) >= sqrt(k/2), so phi(k) <= d forces k <= 2 d^2.
    for (long k = 1; k <= 2L * d * d; ++k) {
        if (euler_phi(k) > d) continue;
        if (divides(cyclotomic(static_cast<int>(k)), p)) return true;
    }
    return false;
}

ModulusBand classify_modulus(const Real& modulus, int precision_digits) {
    Real dev = abs(modulus - 1);
    if (dev <= pow10(-precision_digits / 2))
        return ModulusBand::unit;
    if (dev <= pow10(-precision_digits / 4))
        return ModulusBand::ambiguous;
    return modulus > 1 ? ModulusBand::outside : ModulusBand::inside;
}

namespace {

Spectrum assemble(std::vector<std::pair<Cplx, int>> roots, bool ergodic_exact,
                  int precision_digits) {
    Spectrum sp;
    sp.precision_digits = precision_digits;

    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        Real ma = abs(a.first), mb = abs(b.first);
        if (ma != mb) return ma > mb;
        if (a.first.re != b.first.re) return a.first.re > b.first.re;
        return a.first.im > b.first.im;
    });
    sp.roots = std::move(roots);

    int real_unit_count = 0;
    Real smallest_expanding{0};
    Real largest_contracting{0};
    for (const auto& [root, mult] : sp.roots) {
        Real modulus = abs(root);
        switch (classify_modulus(modulus, precision_digits)) {
            case ModulusBand::outside:
                sp.s += mult;
                sp.entropy_h += mult * log(modulus);
                sp.lambda_abs *= pow(modulus, mult);
                smallest_expanding = modulus;  // roots sorted by modulus
                break;
            case ModulusBand::unit:
                if (root.im > 0) {
                    sp.t += mult;
                    for (int r = 0; r < mult; ++r) {
                        Real theta = arg(root) / (2 * pi());  // in (0, 1/2)
                        sp.unit_args.push_back(theta);
                    }
                } else if (root.im == 0) {
                    real_unit_count += mult;
                }
                break;
            case ModulusBand::inside:
                if (largest_contracting == 0) largest_contracting = modulus;
                largest_contracting = (std::max)(largest_contracting, modulus);
                break;
            case ModulusBand::ambiguous: {
                std::ostringstream os;
                os << "eigenvalue modulus " << real_str(modulus, 30)
                   << " is too close to 1 to classify at precision "
                   << precision_digits << "; retry with higher precision";
                throw PrecisionAmbiguityError(os.str());
            }
        }
    }
    std::sort(sp.unit_args.begin(), sp.unit_args.end());

    if (ergodic_exact) {
        if (real_unit_count > 0 || sp.s == 0)
            throw PrecisionAmbiguityError(
                "classification disagrees with the exact ergodicity certificate; "
                "retry with higher precision");
        sp.classification = sp.t > 0 ? DynClass::quasihyperbolic : DynClass::hyperbolic;
        sp.kappa = smallest_expanding;
        if (largest_contracting > 0)
            sp.kappa = (std::min)(sp.kappa, 1 / largest_contracting);
        sp.rate_R = (std::min)(sp.kappa, sqrt(sp.lambda_abs));
    } else {
        sp.classification = DynClass::non_ergodic;
        if (sp.s > 0) {
            sp.kappa = smallest_expanding;
            if (largest_contracting > 0)
                sp.kappa = (std::min)(sp.kappa, 1 / largest_contracting);
            sp.rate_R = (std::min)(sp.kappa, sqrt(sp.lambda_abs));
        }
    }
    return sp;
}

}  // namespace

Spectrum classify(const IntPoly& p, int precision_digits) {
    validate_precision(precision_digits);
    if (p.degree() < 1) throw std::logic_error("classify: degree must be >= 1");
    if (abs(p.coeff(0)) != 1)
        throw NonUnimodularError(
            "characteristic polynomial has |constant term| != 1; "
            "the source matrix is not in GL_d(Z)");
    bool ergodic = !has_cyclotomic_factor(p);
    return assemble(find_roots(p, precision_digits), ergodic, precision_digits);
}

Spectrum spectrum_of_block(const BlockSpec& spec, int precision_digits) {
    Spectrum base = classify(char_poly(spec.base), precision_digits);
    if (!base.ergodic())
        throw NonErgodicError("block construction requires an ergodic base");
    std::vector<std::pair<Cplx, int>> roots;
    for (int a : spec.powers) {
        if (a < 1) throw std::logic_error("spectrum_of_block: powers must be positive");
        for (const auto& [root, mult] : base.roots)
            roots.emplace_back(cplx_pow(root, a), mult);
    }
    return assemble(std::move(roots), true, precision_digits);
}

Real v_factor(const Spectrum& s, long n) {
    Real acc = 1;
    for (const Real& theta : s.unit_args)
        acc *= 2 - 2 * cos(2 * pi() * frac01(theta * n));
    return acc;
}

}  // namespace toral
