#include "kzrat/commands.hpp"

#include <sstream>

#include "kzrat/errors.hpp"
#include "kzrat/format.hpp"
#include "kzrat/frobenius.hpp"
#include "kzrat/golden.hpp"
#include "kzrat/reconstruct.hpp"

namespace kzrat {

namespace {

template <ExactField F>
Matrix<RatFunc> to_report(const Matrix<F>& m) {
  return m.map([](const F& x) { return RatFunc(x); });
}

std::string power_label(long p) { return "b_" + std::to_string(p); }

std::string describe(const SystemConfig& c) {
  std::ostringstream os;
  os << "system: " << (c.preset ? *c.preset : std::to_string(c.residues.size()) + " explicit residue(s)") << ", points [";
  for (std::size_t i = 0; i < c.points.size(); ++i) os << (i ? ", " : "") << (c.points[i] ? c.points[i]->to_string() : "symbolic");
  os << "], coupling " << c.coupling << ", center z" << c.center << ", convention " << to_string(c.convention) << "\n";
  return os.str();
}

IndicialSection indicial_section(const IndicialData& d) {
  return IndicialSection{d.eigenvalues, d.residual_factor, d.resonant_levels};
}

std::string describe(const IndicialData& d, const Scalar& coupling) {
  std::ostringstream os;
  os << "indicial: eigenvalues of " << coupling << "*a_{-1}:";
  for (const auto& e : d.eigenvalues) os << " " << e.value << " (x" << e.multiplicity << ")";
  if (d.residual_factor.degree() > 0) os << "; irrational factor " << d.residual_factor.to_string("x");
  os << "; resonant levels:";
  for (long l : d.resonant_levels) os << " " << l;
  os << "\n";
  return os.str();
}

template <ExactField F>
std::string show(const Matrix<F>& m, std::string_view var) {
  if constexpr (std::is_same_v<F, RatFunc>) {
    return format_matrix(m, var);
  } else {
    return format_matrix(m);
  }
}

struct SeriesRun {
  SeriesSection section;
  std::string text;
};

template <ExactField F>
SeriesRun series_section(const SeriesSolution<F>& s, const LocalExpansion<F>& exp, const Scalar& coupling,
                         LeadingPolicy policy, std::string_view var) {
  SeriesRun run;
  run.section.leading_exponent = s.leading_exponent;
  run.section.leading_policy = std::string(to_string(policy));
  std::ostringstream os;
  os << "leading exponent: " << s.leading_exponent << " (policy " << to_string(policy) << ")\n";
  for (long p = s.leading_exponent; p <= s.last_power(); ++p) {
    run.section.coefficients.push_back({p, to_report(s.at(p))});
    os << power_label(p) << " =\n" << show(s.at(p), var);
  }
  for (const auto& r : s.resonances) {
    ResonanceEntry e{r.level, r.kind, {}, std::nullopt, to_report(r.rhs)};
    for (const auto& v : r.kernel) e.kernel.push_back(to_report(v));
    run.section.resonances.push_back(std::move(e));
    os << "resonance at level " << r.level << ": " << to_string(r.kind) << ", kernel dimension " << r.kernel.size()
       << "; right side sum a_j b_l =\n"
       << show(r.rhs, var);
  }
  const RecursionReport<F> check = verify_recursion(s, exp, coupling);
  run.section.recursion_verified = check.all_zero();
  if (check.all_zero()) {
    os << "recursion check: all " << check.levels.size() << " levels satisfied exactly\n";
  } else {
    os << "recursion check: FAILED first at level " << *check.first_failure() << "\n";
  }
  run.text = os.str();
  return run;
}

void finish(CommandResult& out, int code) {
  out.exit_code = code;
  out.report.exit_code = code;
}

void fail(CommandResult& out, int code, const std::string& message) {
  out.report.diagnostics.push_back(message);
  out.text += "error: " + message + "\n";
  finish(out, code);
}

bool golden_applicable(const SystemConfig& c, long exponent) {
  return c.mode == Mode::symbolic && c.preset && *c.preset == "kz-s3" && c.center == 1 && c.coupling == Scalar(2) &&
         exponent == -2 && c.order >= 3;
}

std::string describe(const GoldenSection& g) {
  std::ostringstream os;
  if (g.status == "match") {
    os << "golden: match (4 coefficients + resonant RHS)\n";
  } else if (g.status == "dual-match") {
    os << "golden: match up to d->-d duality\n";
  } else {
    os << "golden: MISMATCH\n";
  }
  for (const auto& c : g.checks) {
    os << "  " << c.name << ": " << (c.match ? "exact match" : (c.dual_match ? "match under d->-d" : "differs")) << "\n";
  }
  return os.str();
}

}  // namespace

CommandResult cmd_series(const SystemConfig& config, const CommandOptions& options) {
  CommandResult out;
  out.report.command = "series";
  out.report.config = config;
  out.text = describe(config);
  try {
    const KZSystem sys = build_system(config);
    const std::size_t center = config.center - 1;
    const IndicialData ind = indicial_data(sys.residues[center], sys.coupling);
    out.report.indicial = indicial_section(ind);
    out.text += describe(ind, sys.coupling);
    const long exponent = config.exponent ? *config.exponent : default_exponent(ind);
    const LeadingPolicy policy =
        config.leading_policy ? *config.leading_policy : default_leading_policy(sys.residues[center], sys.coupling, exponent);
    if ((options.golden || options.golden_dual) && !golden_applicable(config, exponent)) {
      fail(out, kExitUsage,
           "--golden needs preset kz-s3, symbolic points, center 1, coupling 2, exponent -2 and order >= 3");
      return out;
    }
    const std::size_t exp_order = std::max<std::size_t>(config.order, 3);
    if (sys.is_symbolic()) {
      const auto exp = local_expansion<RatFunc>(sys, center, config.convention, exp_order);
      const auto s = compute_series(exp, sys.coupling, exponent, config.order, policy);
      SeriesRun run = series_section(s, exp, sys.coupling, policy, "d");
      out.report.series = std::move(run.section);
      out.text += run.text;
      if (options.golden || options.golden_dual) {
        std::vector<Matrix<RatFunc>> head(s.coeffs.begin(), s.coeffs.begin() + 4);
        const Matrix<RatFunc> rhs2 = level_rhs(exp, head, -2, 2);
        GoldenSection g = compare_golden(s, rhs2);
        out.text += describe(g);
        if (g.checks.back().match == false) {
          out.text += "  computed right side at level 2:\n" + format_matrix(rhs2, "d", "    ");
          out.text += "  fixture:\n" + golden_fixtures().back().display("    ");
        }
        const bool ok = g.status == "match" || (g.status == "dual-match" && options.golden_dual);
        out.report.golden = std::move(g);
        finish(out, ok ? kExitOk : kExitMismatch);
        return out;
      }
    } else {
      const auto exp = local_expansion<Scalar>(sys, center, config.convention, exp_order);
      const auto s = compute_series(exp, sys.coupling, exponent, config.order, policy);
      SeriesRun run = series_section(s, exp, sys.coupling, policy, "z");
      out.report.series = std::move(run.section);
      out.text += run.text;
    }
    finish(out, out.report.series->recursion_verified ? kExitOk : kExitMismatch);
  } catch (const ResonanceObstruction& e) {
    out.report.obstruction = ObstructionSection{e.level(), e.certificate()};
    std::string cert;
    for (const auto& c : e.certificate()) cert += " " + c;
    fail(out, kExitObstruction, std::string(e.what()) + "; certificate y =" + cert);
  } catch (const NoIntegerExponent& e) {
    fail(out, kExitMismatch, e.what());
  } catch (const Error& e) {
    fail(out, kExitUsage, e.what());
  }
  return out;
}

CommandResult cmd_verify(const SystemConfig& config) {
  CommandResult out;
  out.report.command = "verify";
  out.report.config = config;
  out.text = describe(config);
  try {
    if (config.mode != Mode::numeric) {
      fail(out, kExitUsage, "verify needs numeric points");
      return out;
    }
    const KZSystem sys = build_system(config);
    const std::size_t center = config.center - 1;
    const Scalar z_center = *sys.points[center];
    const IndicialData ind = indicial_data(sys.residues[center], sys.coupling);
    out.report.indicial = indicial_section(ind);
    out.text += describe(ind, sys.coupling);
    const long exponent = config.exponent ? *config.exponent : default_exponent(ind);
    const LeadingPolicy policy =
        config.leading_policy ? *config.leading_policy : default_leading_policy(sys.residues[center], sys.coupling, exponent);

    const Poly den = config.denominator ? *config.denominator : propose_denominator(sys, sys.coupling);
    const std::size_t degree = config.numerator_degree ? *config.numerator_degree : static_cast<std::size_t>(den.degree()) + 2;
    const std::size_t required = required_coefficients(den, degree);
    if (config.order + 1 < required) {
      fail(out, kExitUsage,
           "insufficient series length: denominator degree " + std::to_string(den.degree()) + " and numerator degree " +
               std::to_string(degree) + " need order >= " + std::to_string(required - 1));
      return out;
    }

    const auto exp = local_expansion<Scalar>(sys, center, config.convention, config.order);
    const auto s = compute_series(exp, sys.coupling, exponent, config.order, policy);
    SeriesRun run = series_section(s, exp, sys.coupling, policy, "z");
    out.report.series = std::move(run.section);

    ReconstructionSection rec;
    rec.proposed_denominator = den;
    rec.numerator_degree = degree;
    out.text += "leading exponent: " + std::to_string(exponent) + ", " + std::to_string(s.coeffs.size()) +
                " series coefficients\n";
    out.text += "denominator: " + den.to_string("z") + ", numerator degree <= " + std::to_string(degree) + "\n";
    const ReconstructResult result = reconstruct(s, z_center, den, degree);
    if (const auto* miss = std::get_if<NotRepresentable>(&result)) {
      rec.status = "not-representable";
      rec.first_unmatched_level = miss->first_unmatched_level;
      out.report.reconstruction = std::move(rec);
      fail(out, kExitMismatch,
           "no rational fit with this denominator and degree; first unmatched level " +
               std::to_string(miss->first_unmatched_level));
      return out;
    }
    const auto& w = std::get<RationalMatrixFunction>(result);
    rec.status = "ok";
    rec.numerator = w.numerator;
    rec.denominator = w.denominator;
    out.report.reconstruction = std::move(rec);
    out.text += "W(z) = N(z) / (" + w.denominator.to_string("z") + "), N =\n" + format_matrix(w.numerator, "z");

    const OdeVerdict v = verify_ode(w, sys);
    out.report.ode = OdeSection{v.satisfied, v.det_identically_zero, v.residual.numerator, v.residual.denominator};
    out.text += std::string("ode: dW/dz - ") + sys.coupling.to_string() + "*A(z)*W " +
                (v.satisfied ? "vanishes identically (satisfied)" : "does NOT vanish (unsatisfied)") + "\n";
    out.text += std::string("det W: ") + (v.det_identically_zero ? "identically zero" : "not identically zero") + "\n";
    finish(out, v.satisfied ? kExitOk : kExitMismatch);
  } catch (const ResonanceObstruction& e) {
    out.report.obstruction = ObstructionSection{e.level(), e.certificate()};
    fail(out, kExitObstruction, e.what());
  } catch (const InsufficientSeries& e) {
    fail(out, kExitUsage, std::string(e.what()) + "; use order >= " + std::to_string(e.required() - 1));
  } catch (const NoIntegerExponent& e) {
    fail(out, kExitMismatch, e.what());
  } catch (const NoPolynomialDenominator& e) {
    fail(out, kExitMismatch, std::string("no polynomial denominator: ") + e.what());
  } catch (const Error& e) {
    fail(out, kExitUsage, e.what());
  }
  return out;
}

CommandResult cmd_expand(const SystemConfig& config) {
  CommandResult out;
  out.report.command = "expand";
  out.report.config = config;
  out.text = describe(config);
  try {
    const KZSystem sys = build_system(config);
    const std::size_t center = config.center - 1;
    ExpansionSection section;
    std::ostringstream os;
    const auto emit = [&](const auto& exp, std::string_view var) {
      section.a_minus1 = to_report(exp.a_minus1);
      os << "a_-1 =\n" << format_matrix(exp.a_minus1);
      for (std::size_t r = 0; r < exp.regular_coeffs.size(); ++r) {
        section.regular.push_back(to_report(exp.regular_coeffs[r]));
        os << "a_" << r << " =\n" << show(exp.regular_coeffs[r], var);
      }
    };
    if (sys.is_symbolic()) {
      emit(local_expansion<RatFunc>(sys, center, config.convention, config.order), "d");
    } else {
      emit(local_expansion<Scalar>(sys, center, config.convention, config.order), "z");
    }
    out.report.expansion = std::move(section);
    out.text += os.str();
    finish(out, kExitOk);
  } catch (const Error& e) {
    fail(out, kExitUsage, e.what());
  }
  return out;
}

CommandResult run_command(std::string_view name, const SystemConfig& config, const CommandOptions& options) {
  if (name == "series") return cmd_series(config, options);
  if (name == "verify") return cmd_verify(config);
  if (name == "expand") return cmd_expand(config);
  CommandResult out;
  out.report.command = std::string(name);
  out.report.config = config;
  fail(out, kExitUsage, "unknown command \"" + std::string(name) + "\"");
  return out;
}

}  // namespace kzrat
