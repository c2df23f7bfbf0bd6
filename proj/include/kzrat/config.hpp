#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kzrat/frobenius.hpp"
#include "kzrat/kz_model.hpp"
#include "kzrat/poly.hpp"

namespace kzrat {

enum class Mode { numeric, symbolic };

/// Parsed run configuration. Document layout (JSON):
///
///   {
///     "mode": "symbolic" | "numeric",        optional, inferred from points
///     "points": ["0", "1"] | ["symbolic", "symbolic"],
///     "residues": "kz-s3" | [ [["0","1"],["1","0"]], ... ],
///     "coupling": "2",                       rational string, default "2"
///     "convention": "derived-taylor" | "literal-paper",
///     "order": 8,                            series order N
///     "center": 1,                           1-based singular point index
///     "exponent": -2,                        optional leading exponent
///     "leading_policy": "paper-projector" | "kernel-columns",   optional
///     "denominator": ["0","0","1"],          optional, coefficients low to high in z
///     "numerator_degree": 6                  optional
///   }
///
/// Rationals are strings "p" or "p/q"; integer JSON numbers are accepted,
/// floating-point numbers and decimal strings are not.
struct SystemConfig {
  Mode mode = Mode::numeric;
  std::vector<Point> points;
  std::optional<std::string> preset;
  std::vector<Matrix<Scalar>> residues;  // explicit residues, empty when a preset is used
  Scalar coupling{2};
  Convention convention = Convention::derived_taylor;
  std::size_t order = 8;
  std::size_t center = 1;
  std::optional<long> exponent;
  std::optional<LeadingPolicy> leading_policy;
  std::optional<Poly> denominator;
  std::optional<std::size_t> numerator_degree;

  friend bool operator==(const SystemConfig&, const SystemConfig&) = default;
};

/// Parses and validates a configuration document; throws ConfigError naming
/// the offending field.
SystemConfig parse_config(std::string_view text);
SystemConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const SystemConfig& c);

/// Residue list for the configuration (preset expanded).
std::vector<Matrix<Scalar>> config_residues(const SystemConfig& c);
KZSystem build_system(const SystemConfig& c);

}  // namespace kzrat
