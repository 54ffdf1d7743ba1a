#include "toral/orbit.hpp"

#include <omp.h>

#include <boost/math/special_functions/expm1.hpp>

#include <sstream>
#include <stdexcept>

namespace toral {

int mobius(long n) {
    if (n < 1) throw std::logic_error("mobius: n must be positive");
    int parity = 0;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            n /= q;
            if (n % q == 0) return 0;
            ++parity;
        }
    }
    if (n > 1) ++parity;
    return (parity % 2 == 0) ? 1 : -1;
}

namespace {

void require_automorphism(const IntMatrix& m) {
    if (!is_unimodular(m))
        throw NonUnimodularError("matrix determinant is not +-1");
}

void require_ergodic(const IntMatrix& m) {
    require_automorphism(m);
    if (has_cyclotomic_factor(char_poly(m)))
        throw NonErgodicError("an eigenvalue is a root of unity");
}

Int fix_count_unchecked(const IntMatrix& m, long n) {
    Int d = det_power_minus_identity(m, n);
    if (d == 0)
        throw std::logic_error(
            "det(M^n - I) = 0 for supposedly ergodic input: classification bug");
    return abs(d);
}

// F(1..N) with the consecutive power chain split into fixed-size blocks.
// Block boundaries do not depend on the thread count, and every F(n) is an
// exact integer, so the output is identical however the blocks are farmed out.
std::vector<Int> fix_range_parallel(const IntMatrix& m, long n_max) {
    constexpr long kBlock = 128;
    std::vector<Int> fix(static_cast<size_t>(n_max) + 1);
    const long blocks = (n_max + kBlock - 1) / kBlock;
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (long b = 0; b < blocks; ++b) {
        try {
            const long lo = b * kBlock + 1;
            const long hi = (std::min)(n_max, lo + kBlock - 1);
            IntMatrix power = matrix_power(m, lo);
            for (long n = lo; n <= hi; ++n) {
                if (n > lo) power = power * m;
                IntMatrix shifted = power;
                for (int i = 0; i < shifted.dim; ++i) shifted.at(i, i) -= 1;
                Int d = det(shifted);
                if (d == 0)
                    throw std::logic_error(
                        "det(M^n - I) = 0 for supposedly ergodic input: "
                        "classification bug");
                fix[static_cast<size_t>(n)] = abs(d);
            }
        } catch (...) {
#pragma omp critical(toral_fix_range_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return fix;
}

std::vector<Int> fix_range_serial(const IntMatrix& m, long n_max) {
    std::vector<Int> fix(static_cast<size_t>(n_max) + 1);
    IntMatrix power = IntMatrix::identity(m.dim);
    for (long n = 1; n <= n_max; ++n) {
        power = power * m;
        IntMatrix shifted = power;
        for (int i = 0; i < shifted.dim; ++i) shifted.at(i, i) -= 1;
        Int d = det(shifted);
        if (d == 0)
            throw std::logic_error(
                "det(M^n - I) = 0 for supposedly ergodic input: classification bug");
        fix[static_cast<size_t>(n)] = abs(d);
    }
    return fix;
}

Int orbit_from_fix(const std::vector<Int>& fix, long n) {
    Int acc = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        long e = n / d;
        acc += mobius(e) * fix[static_cast<size_t>(d)];
        if (d != e) acc += mobius(d) * fix[static_cast<size_t>(e)];
    }
    if (acc % n != 0) {
        std::ostringstream os;
        os << "Moebius sum for n = " << n << " is not divisible by n: arithmetic bug";
        throw std::logic_error(os.str());
    }
    Int orbits = acc / n;
    if (orbits < 0)
        throw std::logic_error("negative orbit count: arithmetic bug");
    return orbits;
}

void validate_table_args(long n_max, int working_digits) {
    if (n_max < 0) throw std::logic_error("mertens_series: n_max must be >= 0");
    if (working_digits < 40 || working_digits > kMaxPrecisionDigits)
        throw ParseError("working_digits must lie in [40, 100]");
}

OrbitTable finish_table(std::vector<Int> fix, const Spectrum& sp, long n_max,
                        int working_digits, std::string hash) {
    OrbitTable table;
    table.entropy_h = sp.entropy_h;
    table.working_digits = working_digits;
    table.classification = sp.classification;
    table.source_hash = std::move(hash);
    if (n_max == 0) return table;

    table.rows.resize(static_cast<size_t>(n_max));
    Real partial = 0;
    for (long n = 1; n <= n_max; ++n) {
        OrbitRow& row = table.rows[static_cast<size_t>(n - 1)];
        row.n = n;
        row.fix = fix[static_cast<size_t>(n)];
        row.orbits = orbit_from_fix(fix, n);
        if (row.orbits > 0)
            partial += exp(log(Real(row.orbits)) - sp.entropy_h * n);
        row.mertens = partial;
    }
    return table;
}

OrbitTable build_table(const IntMatrix& m, long n_max, int working_digits,
                       bool parallel) {
    validate_table_args(n_max, working_digits);
    require_automorphism(m);
    Spectrum sp = classify(char_poly(m), (std::max)(working_digits, 60));
    if (!sp.ergodic()) throw NonErgodicError("an eigenvalue is a root of unity");
    std::vector<Int> fix;
    if (n_max > 0)
        fix = parallel ? fix_range_parallel(m, n_max) : fix_range_serial(m, n_max);
    return finish_table(std::move(fix), sp, n_max, working_digits, matrix_hash(m));
}

OrbitTable build_block_table(const BlockSpec& spec, long n_max, int working_digits,
                             bool parallel) {
    validate_table_args(n_max, working_digits);
    require_automorphism(spec.base);
    Spectrum sp = spectrum_of_block(spec, (std::max)(working_digits, 60));
    std::vector<Int> fix;
    if (n_max > 0) {
        fix.assign(static_cast<size_t>(n_max) + 1, Int(1));
        fix[0] = 0;
        for (int a : spec.powers) {
            IntMatrix step = matrix_power(spec.base, a);
            std::vector<Int> part = parallel ? fix_range_parallel(step, n_max)
                                             : fix_range_serial(step, n_max);
            for (long n = 1; n <= n_max; ++n)
                fix[static_cast<size_t>(n)] *= part[static_cast<size_t>(n)];
        }
    }
    return finish_table(std::move(fix), sp, n_max, working_digits,
                        matrix_hash(realize(spec)));
}

}  // namespace

Int fix_count(const IntMatrix& m, long n) {
    if (n < 1) throw std::logic_error("fix_count: n must be positive");
    require_ergodic(m);
    return fix_count_unchecked(m, n);
}

Int orbit_count(const IntMatrix& m, long n) {
    if (n < 1) throw std::logic_error("orbit_count: n must be positive");
    require_ergodic(m);
    std::vector<Int> fix(static_cast<size_t>(n) + 1);
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) fix[static_cast<size_t>(d)] = fix_count_unchecked(m, d);
    return orbit_from_fix(fix, n);
}

OrbitTable mertens_series(const IntMatrix& m, long n_max, int working_digits) {
    return build_table(m, n_max, working_digits, true);
}

OrbitTable mertens_series_serial(const IntMatrix& m, long n_max, int working_digits) {
    return build_table(m, n_max, working_digits, false);
}

OrbitTable mertens_series(const BlockSpec& spec, long n_max, int working_digits) {
    return build_block_table(spec, n_max, working_digits, true);
}

OrbitTable mertens_series_serial(const BlockSpec& spec, long n_max,
                                 int working_digits) {
    return build_block_table(spec, n_max, working_digits, false);
}

namespace {

// Re(log(1 + w)) for complex w bounded away from -1, accurate for tiny |w|.
Real real_log1p(const Cplx& w) {
    Real mag = abs(w);
    if (mag > Real(1) / 1000) {
        Cplx z{1 + w.re, w.im};
        return log(abs(z));
    }
    // Series sum Re(-(-w)^k / k); terms shrink by |w| < 1e-3 per step.
    Cplx term = w;
    Cplx acc = w;
    const Real cutoff = pow10(-(kSubstrateDigits + 10)) * (mag + pow10(-kSubstrateDigits));
    for (int k = 2; k < 200; ++k) {
        term *= w;
        Cplx contrib = (Real(1) / k) * term;
        if (k % 2 == 0) acc -= contrib;
        else acc += contrib;
        if (abs(contrib) < cutoff) break;
    }
    return acc.re;
}

}  // namespace

Real fix_ratio_deviation(const Spectrum& sp, long n) {
    if (n < 1) throw std::logic_error("fix_ratio_deviation: n must be positive");
    Real log_ratio = 0;
    for (const auto& [root, mult] : sp.roots) {
        switch (classify_modulus(abs(root), sp.precision_digits)) {
            case ModulusBand::outside: {
                Cplx inv = Cplx(Real(1)) / root;
                Cplx w = Cplx(Real(-1)) * cplx_pow(inv, n);
                log_ratio += mult * real_log1p(w);
                break;
            }
            case ModulusBand::inside: {
                Cplx w = Cplx(Real(-1)) * cplx_pow(root, n);
                log_ratio += mult * real_log1p(w);
                break;
            }
            default:
                break;  // unit-modulus roots form V_n
        }
    }
    return v_factor(sp, n) * abs(boost::math::expm1(log_ratio));
}

}  // namespace toral
