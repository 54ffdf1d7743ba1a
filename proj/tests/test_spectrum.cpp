#include <doctest.h>

#include "oracles.hpp"
#include "toral/poly_roots.hpp"
#include "toral/spectrum.hpp"

using namespace toral;

namespace {

const Real kTight = pow10(-50);

bool near(const Real& a, const Real& b, const Real& tol = kTight) {
    return abs(a - b) <= tol;
}

Spectrum classify_matrix(const IntMatrix& m, int digits = 60) {
    return classify(char_poly(m), digits);
}

// Numeric root-of-unity probe: some root z has |z^k - 1| tiny for k <= 2d^2.
bool numeric_root_of_unity(const IntPoly& p) {
    auto roots = find_roots(p, 60);
    long bound = 2L * p.degree() * p.degree();
    for (const auto& [z, mult] : roots)
        for (long k = 1; k <= bound; ++k) {
            Cplx zk = cplx_pow(z, k);
            if (abs(Cplx{zk.re - 1, zk.im}) <= pow10(-25)) return true;
        }
    return false;
}

}  // namespace

TEST_CASE("classification of the companion quartic") {
    Spectrum sp = classify_matrix(oracles::quasi4());
    CHECK(sp.classification == DynClass::quasihyperbolic);
    CHECK(sp.s == 1);
    CHECK(sp.t == 1);
    Real lambda = oracles::quasi4_lambda();
    CHECK(near(sp.entropy_h, log(lambda)));
    CHECK(near(sp.lambda_abs, lambda));
    CHECK(near(sp.kappa, lambda));
    CHECK(near(sp.rate_R, sqrt(lambda)));
    REQUIRE(sp.unit_args.size() == 1);
    CHECK(near(sp.unit_args[0], oracles::quasi4_theta()));
    CHECK(near(log(sp.lambda_abs), sp.entropy_h));  // h = log|Lambda|
}

TEST_CASE("classification of the golden-mean matrix") {
    Spectrum sp = classify_matrix(oracles::golden_mean());
    CHECK(sp.classification == DynClass::hyperbolic);
    CHECK(sp.s == 1);
    CHECK(sp.t == 0);
    CHECK(sp.unit_args.empty());
    CHECK(near(sp.entropy_h, log(oracles::golden_mean_lambda())));
}

TEST_CASE("rotation and identity are non-ergodic") {
    Spectrum rot = classify_matrix(oracles::rotation90());
    CHECK(rot.classification == DynClass::non_ergodic);
    CHECK(rot.t == 1);
    REQUIRE(rot.unit_args.size() == 1);
    CHECK(near(rot.unit_args[0], Real(1) / 4));

    Spectrum id = classify(oracles::poly({1, -2, 1}), 60);
    CHECK(id.classification == DynClass::non_ergodic);
    CHECK(id.s == 0);
}

TEST_CASE("unimodularity is enforced at classification") {
    // char poly of diag(2, 1): constant term 2
    CHECK_THROWS_AS(classify(oracles::poly({2, -3, 1}), 60), NonUnimodularError);
}

TEST_CASE("exact ergodicity certificate") {
    CHECK(!has_cyclotomic_factor(oracles::poly({1, -3, 1})));
    CHECK(has_cyclotomic_factor(oracles::poly({1, 0, 1})));  // Phi_4
    CHECK(has_cyclotomic_factor(oracles::poly({1, -3, 1}) * cyclotomic(12)));
    CHECK(!has_cyclotomic_factor(oracles::poly({1, -8, 6, -8, 1})));
}

TEST_CASE("exact certificate agrees with the numeric criterion") {
    std::vector<IntPoly> polys = {
        oracles::poly({1, -3, 1}),
        oracles::poly({1, -8, 6, -8, 1}),
        oracles::poly({1, 0, 1}),
        oracles::poly({1, -3, 1}) * cyclotomic(12),
        char_poly(oracles::random_unimodular(4, 41)),
    };
    for (const IntPoly& p : polys)
        CHECK(has_cyclotomic_factor(p) == numeric_root_of_unity(p));
}

TEST_CASE("modulus bands derived from the precision") {
    CHECK(classify_modulus(Real(1) + pow10(-40), 60) == ModulusBand::unit);
    CHECK(classify_modulus(Real(1) - pow10(-40), 60) == ModulusBand::unit);
    CHECK(classify_modulus(Real(1) + pow10(-20), 60) == ModulusBand::ambiguous);
    CHECK(classify_modulus(Real(11) / 10, 60) == ModulusBand::outside);
    CHECK(classify_modulus(Real(9) / 10, 60) == ModulusBand::inside);
}

TEST_CASE("classification is a similarity invariant") {
    std::vector<IntMatrix> mats = {oracles::quasi4(), oracles::golden_mean(),
                                   oracles::random_unimodular(4, 5)};
    unsigned seed = 900;
    for (const IntMatrix& m : mats) {
        Spectrum base = classify_matrix(m);
        for (int trial = 0; trial < 2; ++trial) {
            IntMatrix s = oracles::random_unimodular(m.dim, ++seed);
            IntMatrix conj = oracles::naive_mul(
                oracles::naive_mul(s, m), oracles::adjugate_inverse(s));
            Spectrum sp = classify_matrix(conj);
            CHECK(sp.classification == base.classification);
            CHECK(sp.s == base.s);
            CHECK(sp.t == base.t);
            CHECK(near(sp.entropy_h, base.entropy_h, pow10(-40)));
        }
    }
}

TEST_CASE("block spectrum: duplicated base") {
    Spectrum sp = spectrum_of_block(BlockSpec{oracles::quasi4(), {1, 1}}, 60);
    CHECK(sp.classification == DynClass::quasihyperbolic);
    CHECK(sp.t == 2);
    CHECK(sp.s == 2);
    REQUIRE(sp.unit_args.size() == 2);
    CHECK(near(sp.unit_args[0], oracles::quasi4_theta()));
    CHECK(near(sp.unit_args[1], oracles::quasi4_theta()));
    CHECK(near(sp.entropy_h, 2 * log(oracles::quasi4_lambda())));
}

TEST_CASE("block spectrum: powers 1,2,3") {
    Real theta = oracles::quasi4_theta();
    Spectrum sp = spectrum_of_block(BlockSpec{oracles::quasi4(), {1, 2, 3}}, 60);
    CHECK(sp.t == 3);
    CHECK(sp.s == 3);
    CHECK(near(sp.entropy_h, 6 * log(oracles::quasi4_lambda())));
    REQUIRE(sp.unit_args.size() == 3);
    std::vector<Real> expected = {theta, frac01(2 * theta), 1 - frac01(3 * theta)};
    std::sort(expected.begin(), expected.end());
    for (size_t i = 0; i < 3; ++i) CHECK(near(sp.unit_args[i], expected[i]));
    CHECK(near(sp.kappa, oracles::quasi4_lambda()));
}

TEST_CASE("single-block spectrum equals direct classification") {
    Spectrum direct = classify_matrix(oracles::quasi4());
    Spectrum block = spectrum_of_block(BlockSpec{oracles::quasi4(), {1}}, 60);
    CHECK(block.classification == direct.classification);
    CHECK(block.s == direct.s);
    CHECK(block.t == direct.t);
    CHECK(near(block.entropy_h, direct.entropy_h));
    CHECK(near(block.kappa, direct.kappa));
    CHECK(near(block.unit_args[0], direct.unit_args[0]));
}

TEST_CASE("block entropy is additive in the powers") {
    Real h = classify_matrix(oracles::quasi4()).entropy_h;
    for (std::vector<int> powers : {std::vector<int>{2}, {1, 4}, {3, 3, 5}}) {
        Spectrum sp = spectrum_of_block(BlockSpec{oracles::quasi4(), powers}, 60);
        long total = 0;
        for (int a : powers) total += a;
        CHECK(near(sp.entropy_h, total * h));
    }
}

TEST_CASE("non-ergodic base is rejected") {
    CHECK_THROWS_AS(spectrum_of_block(BlockSpec{oracles::rotation90(), {1, 2}}, 60),
                    NonErgodicError);
}

TEST_CASE("v_factor at the first step") {
    Spectrum sp = classify_matrix(oracles::quasi4());
    // 2 - 2cos(2 pi theta) = 2 - (4 - 2 sqrt 3) = 2 sqrt(3) - 2
    CHECK(near(v_factor(sp, 1), 2 * sqrt(Real(3)) - 2));
    Spectrum gm = classify_matrix(oracles::golden_mean());
    CHECK(v_factor(gm, 7) == 1);  // empty product
}

TEST_CASE("conjugation-product invariant: all moduli multiply to 1") {
    for (unsigned seed : {3u, 9u}) {
        Spectrum sp = classify_matrix(oracles::random_unimodular(4, seed));
        Real prod = 1;
        for (const auto& [root, mult] : sp.roots) prod *= pow(abs(root), mult);
        CHECK(near(prod, Real(1), pow10(-30)));
    }
}
