#ifndef TORAL_JSON_IO_HPP
#define TORAL_JSON_IO_HPP

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <variant>

#include "toral/asymptotics.hpp"
#include "toral/int_matrix.hpp"
#include "toral/orbit.hpp"
#include "toral/resonance.hpp"
#include "toral/spectrum.hpp"

namespace toral {

// Matrix JSON form: {"matrix": [[...], ...]} with integer entries given as
// JSON integers or as decimal strings (for values beyond 53 bits).
// Block JSON form: {"base": [[...], ...], "powers": [1, 2, 3]}.
// A bare [[...], ...] array is accepted as a matrix as well.
using AutomorphismInput = std::variant<IntMatrix, BlockSpec>;

IntMatrix parse_matrix_json(const std::string& text);
AutomorphismInput parse_input_json(const std::string& text);

nlohmann::json matrix_to_json(const IntMatrix& m);
nlohmann::json spectrum_to_json(const Spectrum& sp);
nlohmann::json profile_to_json(const ResonanceProfile& profile);
nlohmann::json orbit_table_to_json(const OrbitTable& table);
nlohmann::json fit_to_json(const OrbitTable& table, const MertensFit& fit);
nlohmann::json oscillation_to_json(const OscillationReport& report);
nlohmann::json expansion_to_json(const ExpansionReport& report);

// CSV export: columns n,F,O,M with F and O exact decimal and M carrying the
// table's working precision.
std::string orbit_table_to_csv(const OrbitTable& table);

}  // namespace toral

#endif
