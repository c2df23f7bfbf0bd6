#include "kzrat/config.hpp"

#include <algorithm>

#include "kzrat/errors.hpp"

namespace kzrat {

using nlohmann::json;

namespace {

Scalar rational_field(const json& v, const std::string& field) {
  try {
    if (v.is_string()) return Scalar::parse(v.get<std::string>());
    if (v.is_number_integer()) return Scalar(v.get<long>());
    if (v.is_number_float()) {
      throw ConfigError(field, "decimal " + v.dump() + " rejected; write rationals as \"p/q\"");
    }
  } catch (const ParseError& e) {
    throw ConfigError(field, e.what());
  }
  throw ConfigError(field, "expected a rational string, got " + v.dump());
}

Matrix<Scalar> matrix_field(const json& v, const std::string& field) {
  if (!v.is_array() || v.empty()) throw ConfigError(field, "expected a non-empty array of rows");
  const std::size_t rows = v.size();
  const std::size_t cols = v.front().is_array() ? v.front().size() : 0;
  std::vector<Scalar> data;
  for (std::size_t i = 0; i < rows; ++i) {
    if (!v[i].is_array() || v[i].size() != cols) throw ConfigError(field, "ragged or malformed row " + std::to_string(i));
    for (std::size_t j = 0; j < cols; ++j) data.push_back(rational_field(v[i][j], field));
  }
  return Matrix<Scalar>(rows, cols, std::move(data));
}

std::size_t count_field(const json& v, const std::string& field) {
  if (!v.is_number_integer() || v.get<long>() < 0) throw ConfigError(field, "expected a non-negative integer");
  return v.get<std::size_t>();
}

const json* find(const json& j, const char* key) {
  const auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

}  // namespace

std::vector<Matrix<Scalar>> config_residues(const SystemConfig& c) {
  if (c.preset) {
    if (*c.preset == "kz-s3") return {transposition_matrix(3, 1, 2), transposition_matrix(3, 1, 3)};
    throw ConfigError("residues", "unknown preset \"" + *c.preset + "\"");
  }
  return c.residues;
}

KZSystem build_system(const SystemConfig& c) {
  try {
    return make_system(c.points, config_residues(c), c.coupling);
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    const std::string what = e.what();
    throw ConfigError(what.find("residue") != std::string::npos ? "residues" : "points", what);
  }
}

SystemConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("<root>", "configuration must be a JSON object");
  static const std::vector<std::string> known = {"mode",   "points",   "residues",       "coupling",
                                                 "convention", "order", "center", "exponent",
                                                 "leading_policy", "denominator", "numerator_degree"};
  for (const auto& [key, _] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) throw ConfigError(key, "unknown field");
  }
  SystemConfig c;

  const json* points = find(j, "points");
  if (!points || !points->is_array() || points->empty()) throw ConfigError("points", "expected a non-empty array");
  std::size_t symbolic = 0;
  for (const auto& p : *points) {
    if (p.is_string() && p.get<std::string>() == "symbolic") {
      c.points.push_back(symbolic_point);
      ++symbolic;
    } else {
      c.points.push_back(rational_field(p, "points"));
    }
  }
  if (symbolic != 0 && (symbolic != c.points.size() || c.points.size() != 2)) {
    throw ConfigError("points", "symbolic mode needs exactly two points, both \"symbolic\"");
  }
  c.mode = symbolic ? Mode::symbolic : Mode::numeric;
  if (const json* mode = find(j, "mode")) {
    const std::string m = mode->is_string() ? mode->get<std::string>() : "";
    if (m != "symbolic" && m != "numeric") throw ConfigError("mode", "expected \"symbolic\" or \"numeric\"");
    if ((m == "symbolic") != (c.mode == Mode::symbolic)) throw ConfigError("mode", "mode contradicts the points");
  }
  for (std::size_t i = 0; i < c.points.size(); ++i)
    for (std::size_t k = i + 1; k < c.points.size(); ++k)
      if (c.points[i] && c.points[k] && *c.points[i] == *c.points[k]) {
        throw ConfigError("points", "coincident points z" + std::to_string(i + 1) + " = z" + std::to_string(k + 1));
      }

  const json* residues = find(j, "residues");
  if (!residues) throw ConfigError("residues", "missing");
  if (residues->is_string()) {
    c.preset = residues->get<std::string>();
    if (*c.preset != "kz-s3") throw ConfigError("residues", "unknown preset \"" + *c.preset + "\"");
    if (c.points.size() != 2) throw ConfigError("points", "preset kz-s3 needs two points");
  } else if (residues->is_array()) {
    for (const auto& r : *residues) c.residues.push_back(matrix_field(r, "residues"));
  } else {
    throw ConfigError("residues", "expected a preset name or a list of matrices");
  }

  if (const json* v = find(j, "coupling")) c.coupling = rational_field(*v, "coupling");
  if (const json* v = find(j, "convention")) {
    try {
      c.convention = parse_convention(v->is_string() ? v->get<std::string>() : v->dump());
    } catch (const InvalidArgument& e) {
      throw ConfigError("convention", e.what());
    }
  }
  if (const json* v = find(j, "order")) c.order = count_field(*v, "order");
  if (const json* v = find(j, "center")) c.center = count_field(*v, "center");
  if (c.center < 1 || c.center > c.points.size()) throw ConfigError("center", "1-based index out of range");
  if (const json* v = find(j, "exponent")) {
    if (!v->is_number_integer()) throw ConfigError("exponent", "expected an integer");
    c.exponent = v->get<long>();
  }
  if (const json* v = find(j, "leading_policy")) {
    try {
      c.leading_policy = parse_leading_policy(v->is_string() ? v->get<std::string>() : v->dump());
    } catch (const InvalidArgument& e) {
      throw ConfigError("leading_policy", e.what());
    }
  }
  if (const json* v = find(j, "denominator")) {
    if (!v->is_array() || v->empty()) throw ConfigError("denominator", "expected coefficient list, low degree first");
    std::vector<Scalar> coeffs;
    for (const auto& x : *v) coeffs.push_back(rational_field(x, "denominator"));
    Poly den(std::move(coeffs));
    if (den.is_zero()) throw ConfigError("denominator", "zero polynomial");
    c.denominator = den.monic();
  }
  if (const json* v = find(j, "numerator_degree")) c.numerator_degree = count_field(*v, "numerator_degree");

  build_system(c);
  return c;
}

SystemConfig parse_config(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("<document>", std::string("invalid JSON: ") + e.what());
  }
  return config_from_json(j);
}

json config_to_json(const SystemConfig& c) {
  json j;
  j["mode"] = c.mode == Mode::symbolic ? "symbolic" : "numeric";
  j["points"] = json::array();
  for (const auto& p : c.points) j["points"].push_back(p ? p->to_string() : "symbolic");
  if (c.preset) {
    j["residues"] = *c.preset;
  } else {
    j["residues"] = json::array();
    for (const auto& r : c.residues) {
      json m = json::array();
      for (std::size_t i = 0; i < r.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < r.cols(); ++k) row.push_back(r(i, k).to_string());
        m.push_back(row);
      }
      j["residues"].push_back(m);
    }
  }
  j["coupling"] = c.coupling.to_string();
  j["convention"] = std::string(to_string(c.convention));
  j["order"] = c.order;
  j["center"] = c.center;
  if (c.exponent) j["exponent"] = *c.exponent;
  if (c.leading_policy) j["leading_policy"] = std::string(to_string(*c.leading_policy));
  if (c.denominator) {
    j["denominator"] = json::array();
    for (const auto& x : c.denominator->coefficients()) j["denominator"].push_back(x.to_string());
  }
  if (c.numerator_degree) j["numerator_degree"] = *c.numerator_degree;
  return j;
}

}  // namespace kzrat
