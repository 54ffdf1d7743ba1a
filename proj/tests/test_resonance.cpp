#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "toral/resonance.hpp"

using namespace toral;

namespace {

Spectrum block_spectrum(const std::vector<int>& powers, int digits = 60) {
    return spectrum_of_block(BlockSpec{oracles::quasi4(), powers}, digits);
}

Int k_at(const ResonanceProfile& p, const Real& argument) {
    for (const OmegaEntry& e : p.omegas)
        if (circular_distance(e.argument, argument) <= pow10(-25)) return e.k;
    return Int(0);
}

Spectrum synthetic_spectrum(std::vector<Real> args) {
    Spectrum sp;
    sp.classification = DynClass::quasihyperbolic;
    sp.t = static_cast<int>(args.size());
    sp.unit_args = std::move(args);
    sp.precision_digits = 60;
    return sp;
}

}  // namespace

TEST_CASE("Laurent pair factors") {
    LaurentPoly p = mul_pair_factor(LaurentPoly::one(), 1);
    CHECK(p.min_exp == -1);
    CHECK(p.coeff(-1) == -1);
    CHECK(p.coeff(0) == 2);
    CHECK(p.coeff(1) == -1);
    CHECK(p.constant_term() == 2);

    LaurentPoly q = mul_pair_factor(p, 2);  // (2 - z - 1/z)(2 - z^2 - 1/z^2)
    CHECK(q.coeff(-3) == 1);
    CHECK(q.coeff(0) == 4);
    CHECK(q.coeff(3) == 1);
    // symmetric support
    for (int e = q.min_exp; e <= q.max_exp(); ++e) CHECK(q.coeff(e) == q.coeff(-e));
}

TEST_CASE("exact block counts on the worked examples") {
    CHECK(m_exact_block({1}) == 2);
    CHECK(m_exact_block({1, 1}) == 6);
    CHECK(m_exact_block({1, 2, 3}) == 6);
    CHECK(m_exact_block({1, 2, 3, 5, 7, 8, 11, 13}) == 16);  // 2^{t/2}, t = 8
}

TEST_CASE("repeated blocks give central binomial coefficients") {
    for (int t = 1; t <= 10; ++t) {
        std::vector<int> ones(static_cast<size_t>(t), 1);
        CHECK(m_exact_block(ones) == oracles::central_binomial(t));
    }
}

TEST_CASE("m sequence for power lists 1..t") {
    const std::vector<long> expected = {2,   4,   6,   10,  12,  20,  24,
                                        34,  44,  64,  78,  116, 148, 208,
                                        286, 410, 556, 808, 1120, 1620};
    std::vector<Int> seq = m_sequence(20);
    REQUIRE(seq.size() == 20);
    for (size_t i = 0; i < 20; ++i) CHECK(seq[i] == expected[i]);
    CHECK(m_sequence(1) == std::vector<Int>{Int(2)});
    auto five = m_sequence(5);
    CHECK(five.back() == 12);
}

TEST_CASE("exact block count is invariant under permutation and scaling") {
    CHECK(m_exact_block({3, 1, 2}) == m_exact_block({1, 2, 3}));
    CHECK(m_exact_block({2, 4, 6}) == m_exact_block({1, 2, 3}));
    CHECK(m_exact_block({5, 10}) == m_exact_block({1, 2}));
}

TEST_CASE("numeric profile of the base matrix") {
    Spectrum sp = classify(char_poly(oracles::quasi4()), 60);
    ResonanceProfile p = resonance_numeric(sp);
    CHECK(p.m == 2);
    CHECK(p.t == 1);
    REQUIRE(p.omegas.size() == 3);
    Real theta = oracles::quasi4_theta();
    CHECK(k_at(p, Real(0)) == 2);
    CHECK(k_at(p, theta) == -1);
    CHECK(k_at(p, 1 - theta) == -1);
}

TEST_CASE("numeric equals exact on block constructions") {
    const std::vector<std::vector<int>> lists = {
        {1}, {1, 1}, {1, 2}, {1, 2, 3}, {1, 2, 3, 4}, {1, 1, 1, 1, 1, 1, 1, 1}};
    for (const auto& powers : lists) {
        ResonanceProfile numeric = resonance_numeric(block_spectrum(powers));
        CHECK(numeric.m == m_exact_block(powers));
    }
}

TEST_CASE("numeric and exact profiles agree entry by entry") {
    std::vector<int> powers = {1, 2};
    Spectrum sp = block_spectrum(powers);
    ResonanceProfile numeric = resonance_numeric(sp);
    Real theta = oracles::quasi4_theta();
    ResonanceProfile exact = block_profile_exact(powers, theta, 60);
    CHECK(numeric.m == exact.m);
    REQUIRE(numeric.omegas.size() == exact.omegas.size());
    for (size_t i = 0; i < exact.omegas.size(); ++i) {
        CHECK(circular_distance(numeric.omegas[i].argument,
                                exact.omegas[i].argument) <= pow10(-25));
        CHECK(numeric.omegas[i].k == exact.omegas[i].k);
    }
}

TEST_CASE("serial and parallel enumeration produce the same profile") {
    for (const auto& powers : {std::vector<int>{1, 2, 3}, {1, 1, 1, 1, 1}}) {
        Spectrum sp = block_spectrum(powers);
        ResonanceProfile a = resonance_numeric(sp);
        ResonanceProfile b = resonance_numeric_serial(sp);
        CHECK(a.m == b.m);
        REQUIRE(a.omegas.size() == b.omegas.size());
        for (size_t i = 0; i < a.omegas.size(); ++i) {
            CHECK(a.omegas[i].k == b.omegas[i].k);
            CHECK(circular_distance(a.omegas[i].argument, b.omegas[i].argument) <=
                  pow10(-100));
        }
    }
}

TEST_CASE("profile identities: signed counts sum to zero and recover V_n") {
    const std::vector<std::vector<int>> lists = {{1}, {1, 1}, {1, 2, 3}};
    for (const auto& powers : lists) {
        Spectrum sp = block_spectrum(powers);
        ResonanceProfile p = resonance_numeric(sp);

        Int total = 0;
        for (const OmegaEntry& e : p.omegas) total += e.k;
        CHECK(total == 0);
        CHECK(p.m >= 1);

        for (long n : {1L, 2L, 3L, 5L, 10L, 25L, 50L}) {
            Cplx acc(Real(0));
            for (const OmegaEntry& e : p.omegas)
                acc += Real(e.k) * cplx_pow(e.omega, n);
            CHECK(abs(acc.im) <= pow10(-20));
            CHECK(abs(acc.re - v_factor(sp, n)) <= pow10(-20));
        }
    }
}

TEST_CASE("profiles are conjugate-symmetric") {
    ResonanceProfile p = resonance_numeric(block_spectrum({1, 2}));
    for (const OmegaEntry& e : p.omegas) {
        Real mirrored = e.argument == 0 ? Real(0) : 1 - e.argument;
        CHECK(k_at(p, mirrored) == e.k);
    }
}

TEST_CASE("hyperbolic spectra get the trivial profile") {
    Spectrum gm = classify(char_poly(oracles::golden_mean()), 60);
    ResonanceProfile p = resonance_numeric(gm);
    CHECK(p.m == 1);
    CHECK(p.t == 0);
    REQUIRE(p.omegas.size() == 1);
    CHECK(resonance_log_constant(p) == 0);
}

TEST_CASE("resonance preconditions") {
    Spectrum rot = classify(char_poly(oracles::rotation90()), 60);
    CHECK_THROWS_AS(resonance_numeric(rot), NonErgodicError);

    Spectrum wide = synthetic_spectrum(std::vector<Real>(13, Real(1) / 7));
    CHECK_THROWS_AS(resonance_numeric(wide), std::logic_error);
}

TEST_CASE("ambiguity band raises a precision error") {
    Real theta = oracles::quasi4_theta();
    Spectrum sp = synthetic_spectrum({theta, theta + pow10(-20)});
    CHECK_THROWS_AS(resonance_numeric_serial(sp), PrecisionAmbiguityError);
    CHECK_THROWS_AS(resonance_numeric(sp), PrecisionAmbiguityError);
}

TEST_CASE("log constant of the base profile") {
    Spectrum sp = classify(char_poly(oracles::quasi4()), 60);
    ResonanceProfile p = resonance_numeric(sp);
    // -sum K(w) log(1-w) over the unit pair collapses to log(2 - 2cos(2 pi theta))
    Real expected = log(2 * sqrt(Real(3)) - 2);
    CHECK(abs(resonance_log_constant(p) - expected) <= pow10(-25));
}

TEST_CASE("log constant agrees between numeric and exact routes") {
    std::vector<int> powers = {1, 1};
    ResonanceProfile numeric = resonance_numeric(block_spectrum(powers));
    ResonanceProfile exact =
        block_profile_exact(powers, oracles::quasi4_theta(), 60);
    CHECK(abs(resonance_log_constant(numeric) - resonance_log_constant(exact)) <=
          pow10(-20));
}

TEST_CASE("Cesaro averages converge to m") {
    Spectrum sp = classify(char_poly(oracles::quasi4()), 60);
    Real v1 = v_factor(sp, 1);
    CHECK(std::abs(cesaro_average(sp.unit_args, 1) -
                   static_cast<double>(v1)) <= 1e-12);

    double a1 = cesaro_average(sp.unit_args, 100000);
    CHECK(std::abs(a1 - 2.0) <= 0.05);

    std::vector<Real> doubled = {sp.unit_args[0], sp.unit_args[0]};
    double a2 = cesaro_average(doubled, 100000);
    CHECK(std::abs(a2 - 6.0) <= 0.2);
}

TEST_CASE("Cesaro error shrinks over decades") {
    const std::vector<std::vector<int>> lists = {{1}, {1, 1}, {1, 2, 3}};
    for (const auto& powers : lists) {
        Spectrum sp = block_spectrum(powers);
        double m = static_cast<double>(m_exact_block(powers));
        double e3 = std::abs(cesaro_average(sp.unit_args, 1000) - m);
        double e5 = std::abs(cesaro_average(sp.unit_args, 100000) - m);
        CHECK(e5 < e3);
        CHECK(e5 <= 0.2);
    }
}

TEST_CASE("serial and parallel Cesaro averages agree") {
    Spectrum sp = block_spectrum({1, 2});
    double a = cesaro_average(sp.unit_args, 50000);
    double b = cesaro_average_serial(sp.unit_args, 50000);
    CHECK(std::abs(a - b) <= 1e-9);
}
