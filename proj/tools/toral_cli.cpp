// Command-line front end: classify | count | resonance | sequence | fit.
//
// Input selection (shared by all subcommands that take an automorphism):
//   positional INPUT   file path, builtin name, or inline JSON
//   --matrix '[[...]]' inline matrix rows
//   --block BASE:1,2,3 block construction over a base matrix
//
// Builtin names: golden-mean ([[2,1],[1,1]]), quasi4 (the 4x4 companion of
// x^4 - 8x^3 + 6x^2 - 8x + 1, which has one expanding and one unit-modulus
// pair), rotation ([[0,-1],[1,0]]).
//
// Exit codes: 0 success, 1 malformed input or bad usage, 2 non-unimodular
// matrix, 3 non-ergodic where ergodicity is required, 4 precision ambiguity.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "toral/asymptotics.hpp"
#include "toral/json_io.hpp"
#include "toral/orbit.hpp"
#include "toral/resonance.hpp"
#include "toral/spectrum.hpp"

using nlohmann::json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitNonUnimodular = 2;
constexpr int kExitNonErgodic = 3;
constexpr int kExitAmbiguous = 4;

struct Options {
    std::string input;       // positional: file, builtin, or inline JSON
    std::string matrix_arg;  // --matrix
    std::string block_arg;   // --block BASE:1,2,3
    std::string format = "table";
    int precision = 60;
    int working_digits = 60;
    long max_n = 0;
    std::string window;  // LO:HI
    int max_t = 0;
    std::string method = "two_point";
};

std::string builtin_matrix(const std::string& name) {
    if (name == "golden-mean") return "[[2,1],[1,1]]";
    if (name == "quasi4")
        return "[[0,0,0,-1],[1,0,0,8],[0,1,0,-6],[0,0,1,8]]";
    if (name == "rotation") return "[[0,-1],[1,0]]";
    return {};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw toral::ParseError("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string resolve_source_text(const std::string& token) {
    std::string builtin = builtin_matrix(token);
    if (!builtin.empty()) return builtin;
    if (token.find('[') != std::string::npos || token.find('{') != std::string::npos)
        return token;
    return slurp(token);
}

toral::AutomorphismInput load_input(const Options& opt) {
    int sources = (!opt.input.empty()) + (!opt.matrix_arg.empty()) +
                  (!opt.block_arg.empty());
    if (sources == 0)
        throw toral::ParseError("no input: pass INPUT, --matrix, or --block");
    if (sources > 1)
        throw toral::ParseError("pass exactly one of INPUT, --matrix, --block");

    if (!opt.matrix_arg.empty())
        return toral::parse_matrix_json(opt.matrix_arg);

    if (!opt.block_arg.empty()) {
        auto colon = opt.block_arg.rfind(':');
        if (colon == std::string::npos)
            throw toral::ParseError("--block expects BASE:1,2,3");
        toral::BlockSpec spec;
        spec.base =
            toral::parse_matrix_json(resolve_source_text(opt.block_arg.substr(0, colon)));
        std::stringstream list(opt.block_arg.substr(colon + 1));
        std::string item;
        while (std::getline(list, item, ',')) {
            try {
                int v = std::stoi(item);
                if (v < 1) throw std::invalid_argument("nonpositive");
                spec.powers.push_back(v);
            } catch (const std::exception&) {
                throw toral::ParseError("bad block power: " + item);
            }
        }
        if (spec.powers.empty()) throw toral::ParseError("--block power list is empty");
        return spec;
    }

    return toral::parse_input_json(resolve_source_text(opt.input));
}

void require_unimodular(const toral::AutomorphismInput& input) {
    const toral::IntMatrix* m = std::get_if<toral::IntMatrix>(&input);
    const toral::IntMatrix base =
        m ? *m : std::get<toral::BlockSpec>(input).base;
    if (!toral::is_unimodular(base))
        throw toral::NonUnimodularError("matrix determinant is not +-1");
}

toral::Spectrum spectrum_of(const toral::AutomorphismInput& input, int precision) {
    if (const auto* m = std::get_if<toral::IntMatrix>(&input))
        return toral::classify(toral::char_poly(*m), precision);
    return toral::spectrum_of_block(std::get<toral::BlockSpec>(input), precision);
}

void emit(const json& j, const Options& opt, const std::string& table_text) {
    if (opt.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << table_text;
}

int cmd_classify(const Options& opt) {
    auto input = load_input(opt);
    require_unimodular(input);
    toral::Spectrum sp = spectrum_of(input, opt.precision);

    std::ostringstream os;
    os << "classification: " << toral::to_string(sp.classification) << "\n"
       << "s: " << sp.s << "\n"
       << "t: " << sp.t << "\n"
       << "h: " << toral::real_str(sp.entropy_h, 12) << "\n"
       << "|Lambda|: " << toral::real_str(sp.lambda_abs, 12) << "\n"
       << "kappa: " << toral::real_str(sp.kappa, 12) << "\n"
       << "R: " << toral::real_str(sp.rate_R, 12) << "\n";
    for (size_t i = 0; i < sp.unit_args.size(); ++i)
        os << "theta_" << i + 1 << ": " << toral::real_str(sp.unit_args[i], 12) << "\n";
    emit(toral::spectrum_to_json(sp), opt, os.str());
    return 0;
}

toral::OrbitTable table_of(const toral::AutomorphismInput& input, long max_n,
                           int working_digits) {
    if (const auto* spec = std::get_if<toral::BlockSpec>(&input))
        return toral::mertens_series(*spec, max_n, working_digits);
    return toral::mertens_series(std::get<toral::IntMatrix>(input), max_n,
                                 working_digits);
}

int cmd_count(const Options& opt) {
    if (opt.max_n < 1) throw toral::ParseError("count requires --max-n >= 1");
    auto input = load_input(opt);
    require_unimodular(input);
    toral::OrbitTable table = table_of(input, opt.max_n, opt.working_digits);

    if (opt.format == "csv") {
        std::cout << toral::orbit_table_to_csv(table);
        return 0;
    }
    std::ostringstream os;
    for (const toral::OrbitRow& row : table.rows)
        os << row.n << "  F=" << row.fix.str() << "  O=" << row.orbits.str()
           << "  M=" << toral::real_str(row.mertens, 15) << "\n";
    emit(toral::orbit_table_to_json(table), opt, os.str());
    return 0;
}

int cmd_resonance(const Options& opt) {
    auto input = load_input(opt);
    require_unimodular(input);

    toral::ResonanceProfile profile;
    toral::Spectrum sp = spectrum_of(input, opt.precision);
    if (sp.classification == toral::DynClass::non_ergodic)
        throw toral::NonErgodicError("resonance analysis requires an ergodic input");

    std::string note;
    if (sp.classification == toral::DynClass::hyperbolic) {
        profile = toral::resonance_numeric(sp);  // trivial profile, m = 1
        note = "hyperbolic input: V_n = 1, so m = 1";
    } else if (const auto* spec = std::get_if<toral::BlockSpec>(&input);
               spec != nullptr) {
        toral::Spectrum base =
            toral::classify(toral::char_poly(spec->base), opt.precision);
        if (base.t == 1) {
            profile = toral::block_profile_exact(spec->powers, base.unit_args[0],
                                                 opt.precision);
        } else {
            profile = toral::resonance_numeric(sp);
        }
    } else {
        profile = toral::resonance_numeric(sp);
    }
    toral::Real log_constant = toral::resonance_log_constant(profile);

    json j = toral::profile_to_json(profile);
    j["log_constant"] = toral::real_str(log_constant, 30);
    if (!note.empty()) j["note"] = note;

    std::ostringstream os;
    os << "m = " << profile.m.str() << "\n";
    if (!note.empty()) os << note << "\n";
    os << "method: "
       << (profile.method == toral::ResonanceMethod::numeric ? "numeric"
                                                             : "exact_block")
       << "\nt: " << profile.t << "\n"
       << "log-constant: " << toral::real_str(log_constant, 15) << "\n"
       << "omega table (argument, K):\n";
    for (const toral::OmegaEntry& e : profile.omegas)
        os << "  " << toral::real_str(e.argument, 12) << "  K=" << e.k.str() << "\n";
    emit(j, opt, os.str());
    return 0;
}

int cmd_sequence(const Options& opt) {
    if (opt.max_t < 1) throw toral::ParseError("sequence requires --max-t >= 1");
    std::vector<toral::Int> seq = toral::m_sequence(opt.max_t);
    if (opt.format == "json") {
        json arr = json::array();
        for (const toral::Int& v : seq) arr.push_back(v.str());
        std::cout << arr.dump() << "\n";
        return 0;
    }
    for (const toral::Int& v : seq) std::cout << v.str() << "\n";
    return 0;
}

int cmd_fit(const Options& opt) {
    long max_n = opt.max_n > 0 ? opt.max_n : 2000;
    auto input = load_input(opt);
    require_unimodular(input);

    long lo = max_n / 4, hi = max_n;
    if (!opt.window.empty()) {
        auto colon = opt.window.find(':');
        if (colon == std::string::npos)
            throw toral::ParseError("--window expects LO:HI");
        try {
            lo = std::stol(opt.window.substr(0, colon));
            hi = std::stol(opt.window.substr(colon + 1));
        } catch (const std::exception&) {
            throw toral::ParseError("bad --window bounds");
        }
    }

    toral::OrbitTable table = table_of(input, max_n, opt.working_digits);
    toral::FitMethod method = opt.method == "least_squares"
                                  ? toral::FitMethod::least_squares
                                  : toral::FitMethod::two_point;
    toral::MertensFit fit = toral::fit_mertens(table, lo, hi, method);
    toral::OscillationReport osc = toral::oscillation_report(table, fit);

    // Exact m for comparison: 1 in the hyperbolic case, K(1) otherwise.
    toral::Spectrum sp = spectrum_of(input, opt.precision);
    toral::ResonanceProfile profile = toral::resonance_numeric(sp);
    double m_exact = static_cast<double>(profile.m);
    double rel_dev = std::abs(fit.m_hat - m_exact) / m_exact;

    json j = toral::fit_to_json(table, fit);
    j["oscillation"] = toral::oscillation_to_json(osc);
    j["m_exact"] = profile.m.str();
    j["relative_deviation"] = rel_dev;

    std::ostringstream os;
    os << "m_hat = " << fit.m_hat << "\n"
       << "C_hat = " << fit.c_hat << "\n"
       << "window: [" << fit.n_low << ", " << fit.n_high << "]  method: "
       << toral::to_string(fit.method) << "\n"
       << "max |residual| = " << fit.max_abs_residual() << "\n"
       << "m exact = " << profile.m.str() << ", relative deviation = " << rel_dev
       << "\n"
       << "oscillation: max|n r(n)| = " << osc.max_abs
       << ", median = " << osc.median_abs
       << ", direction reversals = " << osc.direction_reversals
       << ", sign changes = " << osc.sign_changes
       << (osc.negligible ? " (no oscillation detectable)" : "") << "\n";
    emit(j, opt, os.str());
    return 0;
}

void add_input_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("input", opt.input, "matrix file, builtin name, or inline JSON");
    cmd->add_option("--matrix", opt.matrix_arg, "inline matrix rows [[...],...]");
    cmd->add_option("--block", opt.block_arg, "block construction BASE:1,2,3");
    cmd->add_option("--precision", opt.precision, "eigenvalue precision digits")
        ->default_val(60);
    cmd->add_option("--working-digits", opt.working_digits,
                    "Mertens sum working digits")
        ->default_val(60);
    cmd->add_option("--format", opt.format, "table | json | csv")->default_val("table");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"periodic-orbit statistics of ergodic toral automorphisms"};
    app.require_subcommand(1);

    Options opt;
    CLI::App* classify = app.add_subcommand("classify", "spectrum and classification");
    add_input_options(classify, opt);

    CLI::App* count = app.add_subcommand("count", "exact F, O and Mertens sums");
    add_input_options(count, opt);
    count->add_option("--max-n", opt.max_n, "table length");

    CLI::App* resonance =
        app.add_subcommand("resonance", "resonance set Omega, K, and m");
    add_input_options(resonance, opt);

    CLI::App* sequence =
        app.add_subcommand("sequence", "m for the block powers 1..t, t = 1..max_t");
    sequence->add_option("--max-t", opt.max_t, "sequence length");
    sequence->add_option("--format", opt.format, "table | json")->default_val("table");

    CLI::App* fit = app.add_subcommand("fit", "fit m log N + C to the Mertens sums");
    add_input_options(fit, opt);
    fit->add_option("--max-n", opt.max_n, "table length (default 2000)");
    fit->add_option("--window", opt.window, "fit window LO:HI (default N/4:N)");
    fit->add_option("--method", opt.method, "two_point | least_squares")
        ->default_val("two_point");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;  // help/version exit 0, usage errors 1
    }

    try {
        if (classify->parsed()) return cmd_classify(opt);
        if (count->parsed()) return cmd_count(opt);
        if (resonance->parsed()) return cmd_resonance(opt);
        if (sequence->parsed()) return cmd_sequence(opt);
        if (fit->parsed()) return cmd_fit(opt);
    } catch (const toral::NonUnimodularError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonUnimodular;
    } catch (const toral::NonErgodicError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonErgodic;
    } catch (const toral::PrecisionAmbiguityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAmbiguous;
    } catch (const toral::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const toral::WindowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
