#include "toral/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace toral {

const char* to_string(FitMethod m) {
    return m == FitMethod::two_point ? "two_point" : "least_squares";
}

double MertensFit::max_abs_residual() const {
    double worst = 0;
    for (const auto& [n, r] : residuals) worst = (std::max)(worst, std::abs(r));
    return worst;
}

MertensFit fit_mertens(const OrbitTable& table, long n_low, long n_high,
                       FitMethod method) {
    if (n_low < 10) throw WindowError("fit window must start at n >= 10");
    if (n_high > table.max_n())
        throw WindowError("fit window exceeds the table length");
    if (n_high < 2 * n_low)
        throw WindowError("fit window too small: need n_high >= 2 n_low");

    MertensFit fit;
    fit.n_low = n_low;
    fit.n_high = n_high;
    fit.method = method;

    auto m_of = [&](long n) { return static_cast<double>(table.row(n).mertens); };

    if (method == FitMethod::two_point) {
        fit.m_hat = (m_of(n_high) - m_of(n_low)) /
                    (std::log(static_cast<double>(n_high)) -
                     std::log(static_cast<double>(n_low)));
    } else {
        // Least squares of M(n) against log n.
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double count = static_cast<double>(n_high - n_low + 1);
        for (long n = n_low; n <= n_high; ++n) {
            double x = std::log(static_cast<double>(n));
            double y = m_of(n);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        fit.m_hat = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    }

    double mean = 0;
    for (long n = n_low; n <= n_high; ++n)
        mean += m_of(n) - fit.m_hat * std::log(static_cast<double>(n));
    mean /= static_cast<double>(n_high - n_low + 1);
    fit.c_hat = mean;

    fit.residuals.reserve(static_cast<size_t>(n_high - n_low + 1));
    for (long n = n_low; n <= n_high; ++n)
        fit.residuals.emplace_back(
            n, m_of(n) - fit.m_hat * std::log(static_cast<double>(n)) - fit.c_hat);
    return fit;
}

std::vector<Rat> bernoulli_numbers(int count) {
    if (count < 0) throw std::logic_error("bernoulli_numbers: count must be >= 0");
    std::vector<Rat> b(static_cast<size_t>(count) + 1);
    b[0] = 1;
    std::vector<Int> binom(static_cast<size_t>(count) + 2);
    for (int n = 1; n <= count; ++n) {
        // Row n+1 of Pascal's triangle, then B_n = -sum_{j<n} C(n+1,j) B_j / C(n+1,n).
        binom[0] = 1;
        for (int i = 1; i <= n + 1; ++i) {
            binom[static_cast<size_t>(i)] = binom[static_cast<size_t>(i) - 1] *
                                            Int(n + 2 - i) / Int(i);
        }
        Rat acc = 0;
        for (int j = 0; j < n; ++j)
            acc += Rat(binom[static_cast<size_t>(j)]) * b[static_cast<size_t>(j)];
        b[static_cast<size_t>(n)] = -acc / Rat(binom[static_cast<size_t>(n)]);
    }
    return b;
}

Rat euler_maclaurin_tail_exact(long n, int k) {
    if (k < 1) throw std::logic_error("euler_maclaurin_tail: k must be >= 1");
    if (n < 1) throw std::logic_error("euler_maclaurin_tail: N must be >= 1");
    std::vector<Rat> b = bernoulli_numbers(k);
    Rat acc = 0;
    Rat npow = 1;
    for (int r = 0; r < k; ++r) {
        npow *= Rat(n);
        acc += b[static_cast<size_t>(r) + 1] / (Rat(r + 1) * npow);
    }
    return acc;
}

Real euler_maclaurin_tail(long n, int k) {
    Rat exact = euler_maclaurin_tail_exact(n, k);
    return Real(numerator(exact)) / Real(denominator(exact));
}

ExpansionReport hyperbolic_expansion_check(const OrbitTable& table, int k,
                                           long n_lo, long n_hi) {
    if (table.classification != DynClass::hyperbolic)
        throw std::logic_error(
            "hyperbolic_expansion_check requires a hyperbolic table");
    if (table.max_n() < 2)
        throw WindowError("table too short for an expansion check");
    ExpansionReport report;
    report.order_k = k;
    report.source_hash = table.source_hash;

    const long n_max = table.max_n();
    n_hi = (std::min)(n_hi, n_max);
    if (n_hi < n_lo) {
        report.short_window = true;
        n_lo = (std::max)(2L, n_max / 2);
        n_hi = n_max;
    }

    auto dev_at = [&](long n) {
        double tail = static_cast<double>(euler_maclaurin_tail(n, k));
        return static_cast<double>(table.row(n).mertens) -
               std::log(static_cast<double>(n)) - tail;
    };
    report.c_estimate = dev_at(n_max);

    report.deviations.reserve(static_cast<size_t>(n_hi - n_lo + 1));
    for (long n = n_lo; n <= n_hi; ++n) {
        double d = dev_at(n) - report.c_estimate;
        report.deviations.emplace_back(n, d);
        report.max_abs_deviation = (std::max)(report.max_abs_deviation, std::abs(d));
    }
    return report;
}

OscillationReport oscillation_report(const OrbitTable& table, const MertensFit& fit) {
    OscillationReport report;
    report.source_hash = table.source_hash;
    if (fit.residuals.empty()) return report;

    std::vector<double> absvals;
    absvals.reserve(fit.residuals.size());
    double max_residual = 0;
    for (const auto& [n, r] : fit.residuals) {
        double scaled = static_cast<double>(n) * r;
        report.scaled.emplace_back(n, scaled);
        absvals.push_back(std::abs(scaled));
        report.max_abs = (std::max)(report.max_abs, std::abs(scaled));
        max_residual = (std::max)(max_residual, std::abs(r));
    }
    std::nth_element(absvals.begin(), absvals.begin() + absvals.size() / 2,
                     absvals.end());
    report.median_abs = absvals[absvals.size() / 2];

    report.negligible = max_residual < 1e-12;
    const double noise = 1e-13 * (1 + report.max_abs);
    int prev_dir = 0;
    for (size_t i = 1; i < report.scaled.size(); ++i) {
        double delta = report.scaled[i].second - report.scaled[i - 1].second;
        int dir = delta > noise ? 1 : (delta < -noise ? -1 : 0);
        if (dir != 0 && prev_dir != 0 && dir != prev_dir) ++report.direction_reversals;
        if (dir != 0) prev_dir = dir;
        if ((report.scaled[i].second > 0) != (report.scaled[i - 1].second > 0))
            ++report.sign_changes;
    }
    return report;
}

}  // namespace toral
