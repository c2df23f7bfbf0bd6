#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kzrat/config.hpp"
#include "kzrat/linalg.hpp"
#include "kzrat/ratfunc.hpp"

namespace kzrat {

// Report matrices are stored over RatFunc; numeric values are constants and
// serialize as plain "p/q" strings, symbolic ones as {"num": [...], "den": [...]}
// coefficient lists in d (low degree first).

struct CoefficientEntry {
  long power = 0;
  Matrix<RatFunc> value;
  friend bool operator==(const CoefficientEntry&, const CoefficientEntry&) = default;
};

struct ResonanceEntry {
  long level = 0;
  SolveKind kind = SolveKind::affine;
  std::vector<Matrix<RatFunc>> kernel;
  std::optional<Matrix<RatFunc>> certificate;
  std::optional<Matrix<RatFunc>> rhs;
  friend bool operator==(const ResonanceEntry&, const ResonanceEntry&) = default;
};

struct IndicialSection {
  std::vector<Eigenvalue> eigenvalues;
  Poly residual_factor{Scalar(1)};
  std::vector<long> resonant_levels;
};

struct SeriesSection {
  long leading_exponent = 0;
  std::string leading_policy;
  std::vector<CoefficientEntry> coefficients;
  std::vector<ResonanceEntry> resonances;
  bool recursion_verified = false;
  friend bool operator==(const SeriesSection&, const SeriesSection&) = default;
};

struct ExpansionSection {
  Matrix<RatFunc> a_minus1;
  std::vector<Matrix<RatFunc>> regular;
  friend bool operator==(const ExpansionSection&, const ExpansionSection&) = default;
};

struct ObstructionSection {
  long level = 0;
  std::vector<std::string> certificate;
  friend bool operator==(const ObstructionSection&, const ObstructionSection&) = default;
};

struct ReconstructionSection {
  std::string status;  // "ok" | "not-representable"
  Poly proposed_denominator;
  std::size_t numerator_degree = 0;
  std::optional<Matrix<Poly>> numerator;
  std::optional<Poly> denominator;
  std::optional<long> first_unmatched_level;
  friend bool operator==(const ReconstructionSection&, const ReconstructionSection&) = default;
};

struct OdeSection {
  bool satisfied = false;
  bool det_identically_zero = false;
  Matrix<Poly> residual_numerator;
  Poly residual_denominator;
  friend bool operator==(const OdeSection&, const OdeSection&) = default;
};

struct GoldenCheck {
  std::string name;
  bool match = false;       // exact equality with the fixture
  bool dual_match = false;  // equality after d -> -d
  friend bool operator==(const GoldenCheck&, const GoldenCheck&) = default;
};

struct GoldenSection {
  std::string status;  // "match" | "dual-match" | "mismatch"
  std::vector<GoldenCheck> checks;
  friend bool operator==(const GoldenSection&, const GoldenSection&) = default;
};

inline bool operator==(const Eigenvalue& a, const Eigenvalue& b) {
  return a.value == b.value && a.multiplicity == b.multiplicity;
}
inline bool operator==(const IndicialSection& a, const IndicialSection& b) {
  return a.eigenvalues == b.eigenvalues && a.residual_factor == b.residual_factor &&
         a.resonant_levels == b.resonant_levels;
}

struct RunReport {
  std::string command;
  SystemConfig config;
  std::optional<IndicialSection> indicial;
  std::optional<ExpansionSection> expansion;
  std::optional<SeriesSection> series;
  std::optional<ObstructionSection> obstruction;
  std::optional<ReconstructionSection> reconstruction;
  std::optional<OdeSection> ode;
  std::optional<GoldenSection> golden;
  std::vector<std::string> diagnostics;
  int exit_code = 0;
  friend bool operator==(const RunReport&, const RunReport&) = default;
};

nlohmann::json report_to_json(const RunReport& r);
RunReport report_from_json(const nlohmann::json& j);

/// Canonical text form (2-space indented JSON, trailing newline).
std::string serialize_report(const RunReport& r);
RunReport parse_report(std::string_view text);

nlohmann::json ratfunc_to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const nlohmann::json& j);

}  // namespace kzrat
