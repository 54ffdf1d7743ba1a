#include "toral/json_io.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <sstream>

namespace toral {

using nlohmann::json;

namespace {

Int parse_entry(const json& v) {
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_number_unsigned()) return Int(v.get<unsigned long long>());
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s.empty()) throw ParseError("empty string entry in matrix");
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw ParseError("bad integer entry: " + s);
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw ParseError("bad integer entry: " + s);
        return Int(s);
    }
    throw ParseError("matrix entries must be integers or decimal strings");
}

IntMatrix matrix_from_rows(const json& rows) {
    if (!rows.is_array() || rows.empty())
        throw ParseError("matrix must be a nonempty array of rows");
    const int d = static_cast<int>(rows.size());
    IntMatrix m(d);
    for (int i = 0; i < d; ++i) {
        const json& row = rows[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != d)
            throw ParseError("matrix must be square with equal-length rows");
        for (int j = 0; j < d; ++j) m.at(i, j) = parse_entry(row[static_cast<size_t>(j)]);
    }
    return m;
}

json entry_to_json(const Int& x) {
    static const Int lo = -(Int(1) << 53), hi = Int(1) << 53;
    if (x >= lo && x <= hi) return json(static_cast<long long>(x));
    return json(x.str());
}

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("input is not valid JSON");
    return j;
}

}  // namespace

IntMatrix parse_matrix_json(const std::string& text) {
    json j = parse_text(text);
    if (j.is_array()) return matrix_from_rows(j);
    if (j.is_object() && j.contains("matrix")) return matrix_from_rows(j["matrix"]);
    throw ParseError("expected a matrix: [[...]] or {\"matrix\": [[...]]}");
}

AutomorphismInput parse_input_json(const std::string& text) {
    json j = parse_text(text);
    if (j.is_array()) return matrix_from_rows(j);
    if (!j.is_object()) throw ParseError("expected a matrix or block object");
    if (j.contains("matrix")) return matrix_from_rows(j["matrix"]);
    if (j.contains("base")) {
        BlockSpec spec;
        spec.base = matrix_from_rows(j["base"]);
        if (!j.contains("powers") || !j["powers"].is_array() || j["powers"].empty())
            throw ParseError("block form requires a nonempty \"powers\" array");
        for (const json& p : j["powers"]) {
            if (!p.is_number_integer() && !p.is_number_unsigned())
                throw ParseError("block powers must be positive integers");
            long v = p.get<long>();
            if (v < 1) throw ParseError("block powers must be positive integers");
            spec.powers.push_back(static_cast<int>(v));
        }
        return spec;
    }
    throw ParseError("expected {\"matrix\": ...} or {\"base\": ..., \"powers\": ...}");
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim; ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim; ++j) row.push_back(entry_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"matrix", std::move(rows)}};
}

json spectrum_to_json(const Spectrum& sp) {
    const int digits = sp.precision_digits;
    json roots = json::array();
    for (const auto& [root, mult] : sp.roots)
        roots.push_back(json::array(
            {real_str(root.re, digits), real_str(root.im, digits), mult}));
    json args = json::array();
    for (const Real& th : sp.unit_args) args.push_back(real_str(th, digits));
    return json{{"classification", to_string(sp.classification)},
                {"s", sp.s},
                {"t", sp.t},
                {"entropy_h", real_str(sp.entropy_h, digits)},
                {"lambda_abs", real_str(sp.lambda_abs, digits)},
                {"kappa", real_str(sp.kappa, digits)},
                {"rate_R", real_str(sp.rate_R, digits)},
                {"unit_args", std::move(args)},
                {"roots", std::move(roots)},
                {"precision_digits", digits}};
}

json profile_to_json(const ResonanceProfile& profile) {
    const int digits = profile.precision_digits;
    json omegas = json::array();
    for (const OmegaEntry& e : profile.omegas)
        omegas.push_back(json{{"omega", json::array({real_str(e.omega.re, digits),
                                                     real_str(e.omega.im, digits)})},
                              {"argument", real_str(e.argument, digits)},
                              {"K", e.k.str()}});
    return json{{"m", profile.m.str()},
                {"t", profile.t},
                {"method", profile.method == ResonanceMethod::numeric ? "numeric"
                                                                      : "exact_block"},
                {"omegas", std::move(omegas)},
                {"precision_digits", digits}};
}

json orbit_table_to_json(const OrbitTable& table) {
    json rows = json::array();
    for (const OrbitRow& row : table.rows)
        rows.push_back(json{{"n", row.n},
                            {"F", row.fix.str()},
                            {"O", row.orbits.str()},
                            {"M", real_str(row.mertens, table.working_digits)}});
    return json{{"rows", std::move(rows)},
                {"entropy_h", real_str(table.entropy_h, table.working_digits)},
                {"classification", to_string(table.classification)},
                {"working_digits", table.working_digits},
                {"matrix_hash", table.source_hash}};
}

json fit_to_json(const OrbitTable& table, const MertensFit& fit) {
    double max_res = fit.max_abs_residual();
    return json{{"m_hat", fit.m_hat},
                {"C_hat", fit.c_hat},
                {"method", to_string(fit.method)},
                {"window", json::array({fit.n_low, fit.n_high})},
                {"max_abs_residual", max_res},
                {"working_digits", table.working_digits},
                {"matrix_hash", table.source_hash}};
}

json oscillation_to_json(const OscillationReport& report) {
    json scaled = json::array();
    for (const auto& [n, v] : report.scaled) scaled.push_back(json::array({n, v}));
    return json{{"scaled_residuals", std::move(scaled)},
                {"max_abs", report.max_abs},
                {"median_abs", report.median_abs},
                {"direction_reversals", report.direction_reversals},
                {"sign_changes", report.sign_changes},
                {"negligible", report.negligible},
                {"matrix_hash", report.source_hash}};
}

json expansion_to_json(const ExpansionReport& report) {
    json devs = json::array();
    for (const auto& [n, v] : report.deviations) devs.push_back(json::array({n, v}));
    return json{{"k", report.order_k},
                {"C_estimate", report.c_estimate},
                {"deviations", std::move(devs)},
                {"max_abs_deviation", report.max_abs_deviation},
                {"short_window", report.short_window},
                {"matrix_hash", report.source_hash}};
}

std::string orbit_table_to_csv(const OrbitTable& table) {
    std::ostringstream os;
    os << "n,F,O,M\n";
    for (const OrbitRow& row : table.rows)
        os << row.n << ',' << row.fix.str() << ',' << row.orbits.str() << ','
           << real_str(row.mertens, table.working_digits) << '\n';
    return os.str();
}

}  // namespace toral
