#include "toral/resonance.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace toral {

LaurentPoly LaurentPoly::one() {
    LaurentPoly p;
    p.min_exp = 0;
    p.coeffs = {Int(1)};
    return p;
}

Int LaurentPoly::coeff(int exponent) const {
    int idx = exponent - min_exp;
    if (idx < 0 || idx >= static_cast<int>(coeffs.size())) return Int(0);
    return coeffs[static_cast<size_t>(idx)];
}

void LaurentPoly::trim() {
    size_t lo = 0, hi = coeffs.size();
    while (lo < hi && coeffs[lo] == 0) ++lo;
    while (hi > lo && coeffs[hi - 1] == 0) --hi;
    if (lo == hi) {
        min_exp = 0;
        coeffs.clear();
        return;
    }
    coeffs = std::vector<Int>(coeffs.begin() + lo, coeffs.begin() + hi);
    min_exp += static_cast<int>(lo);
}

LaurentPoly mul_pair_factor(const LaurentPoly& cur, int a) {
    if (a < 1) throw std::logic_error("mul_pair_factor: exponent must be positive");
    LaurentPoly out;
    out.min_exp = cur.min_exp - a;
    out.coeffs.assign(cur.coeffs.size() + 2 * static_cast<size_t>(a), Int(0));
    for (size_t i = 0; i < cur.coeffs.size(); ++i) {
        const Int& c = cur.coeffs[i];
        if (c == 0) continue;
        out.coeffs[i + a] += 2 * c;   // 2 z^e
        out.coeffs[i] -= c;           // -z^{e-a}
        out.coeffs[i + 2 * a] -= c;   // -z^{e+a}
    }
    out.trim();
    return out;
}

namespace {

constexpr int kMaxNumericPairs = 12;
constexpr std::int64_t kBinCount = 1000000000;  // 1e-9 argument bins

// Incremental cluster store over circle arguments in [0, 1).
struct ClusterSet {
    Real tol;
    std::vector<Real> center;
    std::vector<Int> weight;
    std::unordered_map<std::int64_t, std::vector<int>> bins;

    explicit ClusterSet(Real tolerance) : tol(std::move(tolerance)) {}

    static std::int64_t key_of(const Real& a) {
        auto k = static_cast<std::int64_t>(static_cast<double>(a) * kBinCount);
        if (k < 0) k = 0;
        if (k >= kBinCount) k = kBinCount - 1;
        return k;
    }

    void add(const Real& argument, const Int& w) {
        std::int64_t k = key_of(argument);
        for (std::int64_t probe : {k - 1, k, k + 1}) {
            std::int64_t wrapped = (probe % kBinCount + kBinCount) % kBinCount;
            auto it = bins.find(wrapped);
            if (it == bins.end()) continue;
            for (int idx : it->second) {
                if (circular_distance(center[idx], argument) <= tol) {
                    weight[idx] += w;
                    return;
                }
            }
        }
        center.push_back(argument);
        weight.push_back(w);
        bins[k].push_back(static_cast<int>(center.size()) - 1);
    }
};

// Signed arguments of the 2t unit eigenvalues: +theta_i and -theta_i.
std::vector<Real> signed_args(const Spectrum& sp) {
    std::vector<Real> a;
    a.reserve(2 * sp.unit_args.size());
    for (const Real& th : sp.unit_args) {
        a.push_back(th);
        a.push_back(-th);
    }
    return a;
}

// Walk subsets [begin, end) of the masks over `args` in Gray-code order,
// clustering (argument mod 1, parity sign) as we go.
void enumerate_range(const std::vector<Real>& args, std::uint64_t begin,
                     std::uint64_t end, ClusterSet& clusters) {
    if (begin >= end) return;
    std::uint64_t gray = begin ^ (begin >> 1);
    Real sum = 0;
    for (size_t b = 0; b < args.size(); ++b)
        if (gray & (1ULL << b)) sum += args[b];
    int popcount = __builtin_popcountll(gray);
    for (std::uint64_t i = begin;;) {
        clusters.add(frac01(sum), Int((popcount & 1) ? -1 : 1));
        if (++i >= end) break;
        std::uint64_t next_gray = i ^ (i >> 1);
        std::uint64_t flipped = gray ^ next_gray;
        int bit = __builtin_ctzll(flipped);
        if (next_gray & flipped) {
            sum += args[static_cast<size_t>(bit)];
            ++popcount;
        } else {
            sum -= args[static_cast<size_t>(bit)];
            --popcount;
        }
        gray = next_gray;
    }
}

ResonanceProfile profile_from_clusters(ClusterSet&& clusters, int t,
                                       ResonanceMethod method, int precision_digits) {
    struct Entry {
        Real argument;
        Int k;
    };
    std::vector<Entry> entries;
    entries.reserve(clusters.center.size());
    for (size_t i = 0; i < clusters.center.size(); ++i)
        entries.push_back({clusters.center[i], clusters.weight[i]});
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.argument < b.argument; });

    // Ambiguity scan: distinct clusters whose centers fall inside the
    // 10^{-P/4} band cannot be trusted apart at this precision.
    const Real amb = pow10(-precision_digits / 4);
    for (size_t i = 0; i + 1 < entries.size(); ++i) {
        if (circular_distance(entries[i].argument, entries[i + 1].argument) <= amb)
            throw PrecisionAmbiguityError(
                "two resonance clusters are closer than the ambiguity band; "
                "retry with higher precision");
    }
    if (entries.size() > 1 &&
        circular_distance(entries.front().argument, entries.back().argument) <= amb)
        throw PrecisionAmbiguityError(
            "two resonance clusters are closer than the ambiguity band; "
            "retry with higher precision");

    ResonanceProfile profile;
    profile.t = t;
    profile.method = method;
    profile.precision_digits = precision_digits;
    profile.m = 0;
    const Real tol = pow10(-precision_digits / 2);
    for (const Entry& e : entries) {
        bool is_one = circular_distance(e.argument, Real(0)) <= tol;
        if (is_one) profile.m = e.k;
        if (e.k == 0 && !is_one) continue;  // cancelled cluster, not in Omega
        OmegaEntry oe;
        oe.argument = is_one ? Real(0) : e.argument;
        oe.omega = is_one ? Cplx(Real(1)) : unit_circle_point(e.argument);
        oe.k = e.k;
        profile.omegas.push_back(std::move(oe));
    }
    if (profile.m < 1)
        throw std::logic_error("resonance profile has m < 1: arithmetic bug");
    return profile;
}

void check_numeric_preconditions(const Spectrum& sp) {
    if (!sp.ergodic())
        throw NonErgodicError("resonance analysis requires an ergodic spectrum");
    if (sp.t > kMaxNumericPairs) {
        std::ostringstream os;
        os << "t = " << sp.t << " exceeds the numeric enumeration bound "
           << kMaxNumericPairs;
        throw std::logic_error(os.str());
    }
}

ResonanceProfile trivial_profile(int precision_digits) {
    ResonanceProfile p;
    p.t = 0;
    p.method = ResonanceMethod::numeric;
    p.precision_digits = precision_digits;
    p.m = 1;
    p.omegas.push_back({Real(0), Cplx(Real(1)), Int(1)});
    return p;
}

}  // namespace

ResonanceProfile resonance_numeric_serial(const Spectrum& sp) {
    check_numeric_preconditions(sp);
    if (sp.t == 0) return trivial_profile(sp.precision_digits);
    std::vector<Real> args = signed_args(sp);
    ClusterSet clusters(pow10(-sp.precision_digits / 2));
    enumerate_range(args, 0, 1ULL << args.size(), clusters);
    return profile_from_clusters(std::move(clusters), sp.t, ResonanceMethod::numeric,
                                 sp.precision_digits);
}

ResonanceProfile resonance_numeric(const Spectrum& sp) {
    check_numeric_preconditions(sp);
    if (sp.t == 0) return trivial_profile(sp.precision_digits);
    std::vector<Real> args = signed_args(sp);
    const std::uint64_t total = 1ULL << args.size();
    constexpr std::uint64_t kChunk = 1ULL << 14;
    const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
    const Real tol = pow10(-sp.precision_digits / 2);

    std::vector<ClusterSet> partial(chunks, ClusterSet(tol));
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
        try {
            std::uint64_t lo = static_cast<std::uint64_t>(c) * kChunk;
            std::uint64_t hi = (std::min)(total, lo + kChunk);
            enumerate_range(args, lo, hi, partial[static_cast<size_t>(c)]);
        } catch (...) {
#pragma omp critical(toral_resonance_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    ClusterSet merged(tol);
    for (ClusterSet& p : partial)
        for (size_t i = 0; i < p.center.size(); ++i) merged.add(p.center[i], p.weight[i]);
    return profile_from_clusters(std::move(merged), sp.t, ResonanceMethod::numeric,
                                 sp.precision_digits);
}

Int m_exact_block(const std::vector<int>& powers) {
    if (powers.empty()) throw std::logic_error("m_exact_block: empty power list");
    long support = 0;
    for (int a : powers) {
        if (a < 1) throw std::logic_error("m_exact_block: powers must be positive");
        support += a;
    }
    if (support > 200000)
        throw std::logic_error("m_exact_block: total degree too large");
    LaurentPoly acc = LaurentPoly::one();
    for (int a : powers) acc = mul_pair_factor(acc, a);
    return acc.constant_term();
}

ResonanceProfile block_profile_exact(const std::vector<int>& powers,
                                     const Real& base_theta, int precision_digits) {
    validate_precision(precision_digits);
    if (powers.empty()) throw std::logic_error("block_profile_exact: empty power list");
    LaurentPoly acc = LaurentPoly::one();
    for (int a : powers) {
        if (a < 1) throw std::logic_error("block_profile_exact: powers must be positive");
        acc = mul_pair_factor(acc, a);
    }

    ResonanceProfile profile;
    profile.t = static_cast<int>(powers.size());
    profile.method = ResonanceMethod::exact_block;
    profile.precision_digits = precision_digits;
    profile.m = acc.constant_term();

    struct Entry {
        Real argument;
        Int k;
    };
    std::vector<Entry> entries;
    for (int e = acc.min_exp; e <= acc.max_exp(); ++e) {
        Int k = acc.coeff(e);
        if (k == 0 && e != 0) continue;
        entries.push_back({e == 0 ? Real(0) : frac01(e * base_theta), std::move(k)});
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.argument < b.argument; });
    for (Entry& e : entries) {
        OmegaEntry oe;
        oe.omega = (e.argument == 0) ? Cplx(Real(1)) : unit_circle_point(e.argument);
        oe.argument = std::move(e.argument);
        oe.k = std::move(e.k);
        profile.omegas.push_back(std::move(oe));
    }
    if (profile.m < 1)
        throw std::logic_error("resonance profile has m < 1: arithmetic bug");
    return profile;
}

std::vector<Int> m_sequence(int max_t) {
    if (max_t < 1) throw std::logic_error("m_sequence: max_t must be >= 1");
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(max_t));
    LaurentPoly acc = LaurentPoly::one();
    for (int t = 1; t <= max_t; ++t) {
        acc = mul_pair_factor(acc, t);
        out.push_back(acc.constant_term());
    }
    return out;
}

namespace {

double cesaro_chunk(const std::vector<double>& thetas, long lo, long hi) {
    double acc = 0;
    for (long n = lo; n <= hi; ++n) {
        double term = 1;
        for (double th : thetas) {
            double x = std::fmod(static_cast<double>(n) * th, 1.0);
            term *= 2 - 2 * std::cos(2 * M_PI * x);
        }
        acc += term;
    }
    return acc;
}

std::vector<double> to_double_args(const std::vector<Real>& unit_args) {
    std::vector<double> thetas;
    thetas.reserve(unit_args.size());
    for (const Real& th : unit_args) thetas.push_back(static_cast<double>(th));
    return thetas;
}

}  // namespace

double cesaro_average_serial(const std::vector<Real>& unit_args, long n_terms) {
    if (n_terms < 1) throw std::logic_error("cesaro_average: n_terms must be >= 1");
    std::vector<double> thetas = to_double_args(unit_args);
    return cesaro_chunk(thetas, 1, n_terms) / static_cast<double>(n_terms);
}

double cesaro_average(const std::vector<Real>& unit_args, long n_terms) {
    if (n_terms < 1) throw std::logic_error("cesaro_average: n_terms must be >= 1");
    std::vector<double> thetas = to_double_args(unit_args);
    constexpr long kChunk = 4096;
    const long chunks = (n_terms + kChunk - 1) / kChunk;
    std::vector<double> partial(static_cast<size_t>(chunks), 0.0);
#pragma omp parallel for schedule(static)
    for (long c = 0; c < chunks; ++c) {
        long lo = c * kChunk + 1;
        long hi = (std::min)(n_terms, lo + kChunk - 1);
        partial[static_cast<size_t>(c)] = cesaro_chunk(thetas, lo, hi);
    }
    double acc = 0;
    for (double p : partial) acc += p;  // fixed order, thread-count independent
    return acc / static_cast<double>(n_terms);
}

Real resonance_log_constant(const ResonanceProfile& profile) {
    const Real tol = pow10(-profile.precision_digits / 2);
    Real real_part = 0;
    Real imag_part = 0;
    for (const OmegaEntry& e : profile.omegas) {
        if (e.argument == 0) continue;  // the omega = 1 cluster
        if (circular_distance(e.argument, Real(0)) <= tol)
            throw PrecisionAmbiguityError(
                "omega != 1 entry within cluster tolerance of 1");
        Cplx one_minus{1 - e.omega.re, -e.omega.im};
        real_part -= Real(e.k) * log(abs(one_minus));
        imag_part -= Real(e.k) * arg(one_minus);
    }
    if (abs(imag_part) > pow10(-profile.precision_digits / 3))
        throw std::logic_error(
            "imaginary parts of the log constant failed to cancel: profile is "
            "not conjugate-symmetric");
    return real_part;
}

}  // namespace toral
