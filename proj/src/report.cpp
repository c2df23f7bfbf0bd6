#include "kzrat/report.hpp"

#include "kzrat/errors.hpp"

namespace kzrat {

using nlohmann::json;

namespace {

json poly_to_json(const Poly& p) {
  json a = json::array();
  for (const auto& c : p.coefficients()) a.push_back(c.to_string());
  return a;
}

Poly poly_from_json(const json& j) {
  std::vector<Scalar> c;
  for (const auto& x : j) c.push_back(Scalar::parse(x.get<std::string>()));
  return Poly(std::move(c));
}

template <class T, class Fn>
json matrix_to_json(const Matrix<T>& m, Fn&& entry) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(entry(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T, class Fn>
Matrix<T> matrix_from_json(const json& j, Fn&& entry) {
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j.front().size() : 0;
  std::vector<T> data;
  for (const auto& row : j) {
    if (row.size() != cols) throw ParseError("ragged matrix in report");
    for (const auto& x : row) data.push_back(entry(x));
  }
  return Matrix<T>(rows, cols, std::move(data));
}

json rmat(const Matrix<RatFunc>& m) { return matrix_to_json(m, ratfunc_to_json); }
Matrix<RatFunc> rmat_from(const json& j) { return matrix_from_json<RatFunc>(j, ratfunc_from_json); }
json pmat(const Matrix<Poly>& m) { return matrix_to_json(m, poly_to_json); }
Matrix<Poly> pmat_from(const json& j) { return matrix_from_json<Poly>(j, poly_from_json); }

SolveKind kind_from(const std::string& s) {
  if (s == "unique") return SolveKind::unique;
  if (s == "affine") return SolveKind::affine;
  if (s == "inconsistent") return SolveKind::inconsistent;
  throw ParseError("unknown solve kind \"" + s + "\"");
}

}  // namespace

json ratfunc_to_json(const RatFunc& f) {
  if (f.is_constant()) return f.constant_value().to_string();
  return json{{"num", poly_to_json(f.numerator())}, {"den", poly_to_json(f.denominator())}};
}

RatFunc ratfunc_from_json(const json& j) {
  if (j.is_string()) return RatFunc(Scalar::parse(j.get<std::string>()));
  return RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

json report_to_json(const RunReport& r) {
  json j;
  j["command"] = r.command;
  j["config"] = config_to_json(r.config);
  j["exit_code"] = r.exit_code;
  j["diagnostics"] = r.diagnostics;
  if (r.indicial) {
    json ev = json::array();
    for (const auto& e : r.indicial->eigenvalues) ev.push_back({{"value", e.value.to_string()}, {"multiplicity", e.multiplicity}});
    j["indicial"] = {{"eigenvalues", ev},
                     {"residual_factor", poly_to_json(r.indicial->residual_factor)},
                     {"resonant_levels", r.indicial->resonant_levels}};
  }
  if (r.expansion) {
    json reg = json::array();
    for (const auto& m : r.expansion->regular) reg.push_back(rmat(m));
    j["expansion"] = {{"a_minus1", rmat(r.expansion->a_minus1)}, {"regular", reg}};
  }
  if (r.series) {
    json coeffs = json::array();
    for (const auto& c : r.series->coefficients) coeffs.push_back({{"power", c.power}, {"matrix", rmat(c.value)}});
    json res = json::array();
    for (const auto& e : r.series->resonances) {
      json kernel = json::array();
      for (const auto& v : e.kernel) kernel.push_back(rmat(v));
      json item{{"level", e.level}, {"kind", std::string(to_string(e.kind))}, {"kernel", kernel}};
      item["certificate"] = e.certificate ? rmat(*e.certificate) : json(nullptr);
      item["rhs"] = e.rhs ? rmat(*e.rhs) : json(nullptr);
      res.push_back(std::move(item));
    }
    j["series"] = {{"leading_exponent", r.series->leading_exponent},
                   {"leading_policy", r.series->leading_policy},
                   {"coefficients", coeffs},
                   {"resonances", res},
                   {"recursion_verified", r.series->recursion_verified}};
  }
  if (r.obstruction) {
    j["obstruction"] = {{"level", r.obstruction->level}, {"certificate", r.obstruction->certificate}};
  }
  if (r.reconstruction) {
    const auto& rc = *r.reconstruction;
    json o{{"status", rc.status},
           {"proposed_denominator", poly_to_json(rc.proposed_denominator)},
           {"numerator_degree", rc.numerator_degree}};
    o["numerator"] = rc.numerator ? pmat(*rc.numerator) : json(nullptr);
    o["denominator"] = rc.denominator ? poly_to_json(*rc.denominator) : json(nullptr);
    o["first_unmatched_level"] = rc.first_unmatched_level ? json(*rc.first_unmatched_level) : json(nullptr);
    j["reconstruction"] = std::move(o);
  }
  if (r.ode) {
    j["ode"] = {{"satisfied", r.ode->satisfied},
                {"det_identically_zero", r.ode->det_identically_zero},
                {"residual_numerator", pmat(r.ode->residual_numerator)},
                {"residual_denominator", poly_to_json(r.ode->residual_denominator)}};
  }
  if (r.golden) {
    json checks = json::array();
    for (const auto& c : r.golden->checks) checks.push_back({{"name", c.name}, {"match", c.match}, {"dual_match", c.dual_match}});
    j["golden"] = {{"status", r.golden->status}, {"checks", checks}};
  }
  return j;
}

RunReport report_from_json(const json& j) {
  RunReport r;
  r.command = j.at("command").get<std::string>();
  r.config = config_from_json(j.at("config"));
  r.exit_code = j.at("exit_code").get<int>();
  r.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
  if (j.contains("indicial")) {
    IndicialSection s;
    for (const auto& e : j["indicial"]["eigenvalues"])
      s.eigenvalues.push_back({Scalar::parse(e.at("value").get<std::string>()), e.at("multiplicity").get<std::size_t>()});
    s.residual_factor = poly_from_json(j["indicial"]["residual_factor"]);
    s.resonant_levels = j["indicial"]["resonant_levels"].get<std::vector<long>>();
    r.indicial = std::move(s);
  }
  if (j.contains("expansion")) {
    ExpansionSection s;
    s.a_minus1 = rmat_from(j["expansion"]["a_minus1"]);
    for (const auto& m : j["expansion"]["regular"]) s.regular.push_back(rmat_from(m));
    r.expansion = std::move(s);
  }
  if (j.contains("series")) {
    const json& js = j["series"];
    SeriesSection s;
    s.leading_exponent = js.at("leading_exponent").get<long>();
    s.leading_policy = js.at("leading_policy").get<std::string>();
    s.recursion_verified = js.at("recursion_verified").get<bool>();
    for (const auto& c : js.at("coefficients")) s.coefficients.push_back({c.at("power").get<long>(), rmat_from(c.at("matrix"))});
    for (const auto& e : js.at("resonances")) {
      ResonanceEntry re;
      re.level = e.at("level").get<long>();
      re.kind = kind_from(e.at("kind").get<std::string>());
      for (const auto& v : e.at("kernel")) re.kernel.push_back(rmat_from(v));
      if (!e.at("certificate").is_null()) re.certificate = rmat_from(e["certificate"]);
      if (!e.at("rhs").is_null()) re.rhs = rmat_from(e["rhs"]);
      s.resonances.push_back(std::move(re));
    }
    r.series = std::move(s);
  }
  if (j.contains("obstruction")) {
    r.obstruction = ObstructionSection{j["obstruction"].at("level").get<long>(),
                                       j["obstruction"].at("certificate").get<std::vector<std::string>>()};
  }
  if (j.contains("reconstruction")) {
    const json& jr = j["reconstruction"];
    ReconstructionSection s;
    s.status = jr.at("status").get<std::string>();
    s.proposed_denominator = poly_from_json(jr.at("proposed_denominator"));
    s.numerator_degree = jr.at("numerator_degree").get<std::size_t>();
    if (!jr.at("numerator").is_null()) s.numerator = pmat_from(jr["numerator"]);
    if (!jr.at("denominator").is_null()) s.denominator = poly_from_json(jr["denominator"]);
    if (!jr.at("first_unmatched_level").is_null()) s.first_unmatched_level = jr["first_unmatched_level"].get<long>();
    r.reconstruction = std::move(s);
  }
  if (j.contains("ode")) {
    const json& jo = j["ode"];
    r.ode = OdeSection{jo.at("satisfied").get<bool>(), jo.at("det_identically_zero").get<bool>(),
                       pmat_from(jo.at("residual_numerator")), poly_from_json(jo.at("residual_denominator"))};
  }
  if (j.contains("golden")) {
    GoldenSection g;
    g.status = j["golden"].at("status").get<std::string>();
    for (const auto& c : j["golden"].at("checks"))
      g.checks.push_back({c.at("name").get<std::string>(), c.at("match").get<bool>(), c.at("dual_match").get<bool>()});
    r.golden = std::move(g);
  }
  return r;
}

std::string serialize_report(const RunReport& r) { return report_to_json(r).dump(2) + "\n"; }

RunReport parse_report(std::string_view text) {
  try {
    return report_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace kzrat
