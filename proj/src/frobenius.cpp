#include "kzrat/frobenius.hpp"

#include <string>

#include "kzrat/errors.hpp"

namespace kzrat {

std::string_view to_string(LeadingPolicy p) {
  return p == LeadingPolicy::paper_projector ? "paper-projector" : "kernel-columns";
}

LeadingPolicy parse_leading_policy(std::string_view text) {
  if (text == "paper-projector") return LeadingPolicy::paper_projector;
  if (text == "kernel-columns") return LeadingPolicy::kernel_columns;
  throw InvalidArgument("unknown leading policy \"" + std::string(text) + "\" (paper-projector | kernel-columns)");
}

namespace {

bool projector_applies(const Matrix<Scalar>& a_minus1, const Scalar& coupling, long exponent) {
  return a_minus1 * a_minus1 == Matrix<Scalar>::identity(a_minus1.rows()) && Scalar(exponent) == -coupling;
}

template <ExactField F>
Matrix<F> step_matrix(const Matrix<Scalar>& a_minus1, const Scalar& coupling, long level) {
  const std::size_t n = a_minus1.rows();
  return embed<F>(Scalar(level) * Matrix<Scalar>::identity(n) - coupling * a_minus1);
}

template <ExactField F>
std::string entry_text(const F& x) {
  if constexpr (std::is_same_v<F, RatFunc>) {
    return x.to_string("d");
  } else {
    return x.to_string();
  }
}

}  // namespace

LeadingPolicy default_leading_policy(const Matrix<Scalar>& a_minus1, const Scalar& coupling, long exponent) {
  return projector_applies(a_minus1, coupling, exponent) ? LeadingPolicy::paper_projector
                                                         : LeadingPolicy::kernel_columns;
}

Matrix<Scalar> leading_coefficient(const Matrix<Scalar>& a_minus1, const Scalar& coupling, long exponent,
                                   LeadingPolicy policy) {
  const std::size_t n = a_minus1.rows();
  const Matrix<Scalar> step = step_matrix<Scalar>(a_minus1, coupling, exponent);
  const auto kernel = kernel_basis(step);
  if (kernel.empty()) {
    throw NotAnEigenvalue(std::to_string(exponent) + " is not an eigenvalue of coupling*a_{-1}");
  }
  if (policy == LeadingPolicy::paper_projector) {
    if (!projector_applies(a_minus1, coupling, exponent)) {
      throw InvalidArgument("paper-projector needs an involutive a_{-1} and exponent = -coupling");
    }
    return Matrix<Scalar>::identity(n) - a_minus1;
  }
  Matrix<Scalar> b(n, n);
  for (std::size_t c = 0; c < kernel.size() && c < n; ++c)
    for (std::size_t i = 0; i < n; ++i) b(i, c) = kernel[c](i, 0);
  return b;
}

template <ExactField F>
Matrix<F> level_rhs(const LocalExpansion<F>& exp, const std::vector<Matrix<F>>& coeffs, long leading, long level) {
  const std::size_t n = exp.a_minus1.rows();
  Matrix<F> sum(n, n);
  for (long l = leading; l < level; ++l) {
    const auto j = static_cast<std::size_t>(level - 1 - l);
    const auto idx = static_cast<std::size_t>(l - leading);
    if (j >= exp.regular_coeffs.size()) throw InvalidArgument("local expansion too short for level " + std::to_string(level));
    if (idx >= coeffs.size()) throw InvalidArgument("missing coefficient b_" + std::to_string(l));
    sum = sum + exp.regular_coeffs[j] * coeffs[idx];
  }
  return sum;
}

template <ExactField F>
SeriesSolution<F> compute_series(const LocalExpansion<F>& exp, const Scalar& coupling, long exponent,
                                 std::size_t order, LeadingPolicy policy) {
  if (order > 0 && exp.regular_coeffs.size() < order) {
    throw InvalidArgument("local expansion of order " + std::to_string(exp.regular_coeffs.size()) +
                          " too short for series order " + std::to_string(order));
  }
  SeriesSolution<F> s;
  s.leading_exponent = exponent;
  s.convention = exp.convention;
  s.coeffs.push_back(embed<F>(leading_coefficient(exp.a_minus1, coupling, exponent, policy)));
  const F kappa(coupling);
  for (std::size_t k = 1; k <= order; ++k) {
    const long level = exponent + static_cast<long>(k);
    const Matrix<F> step = step_matrix<F>(exp.a_minus1, coupling, level);
    const Matrix<F> sum = level_rhs(exp, s.coeffs, exponent, level);
    SolveResult<F> r = solve_linear(step, kappa * sum);
    switch (r.kind) {
      case SolveKind::unique:
        s.coeffs.push_back(std::move(*r.particular));
        break;
      case SolveKind::affine:
        s.coeffs.push_back(project_off(*r.particular, r.kernel_basis));
        s.resonances.push_back({level, r.kind, std::move(r.kernel_basis), std::nullopt, sum});
        break;
      case SolveKind::inconsistent: {
        std::vector<std::string> cert;
        for (std::size_t j = 0; j < r.certificate->cols(); ++j) cert.push_back(entry_text((*r.certificate)(0, j)));
        throw ResonanceObstruction(level, std::move(cert));
      }
    }
  }
  return s;
}

template <ExactField F>
RecursionReport<F> verify_recursion(const SeriesSolution<F>& s, const LocalExpansion<F>& exp,
                                    const Scalar& coupling) {
  const std::size_t n = exp.a_minus1.rows();
  const Matrix<F> residue = embed<F>(exp.a_minus1);
  const F kappa(coupling);
  RecursionReport<F> report;
  for (long level = s.leading_exponent; level <= s.last_power(); ++level) {
    Matrix<F> lhs = F(Scalar(level)) * s.at(level) - kappa * (residue * s.at(level));
    Matrix<F> sum(n, n);
    for (std::size_t j = 0; j < exp.regular_coeffs.size(); ++j) {
      const long l = level - 1 - static_cast<long>(j);
      if (l < s.leading_exponent) break;
      sum = sum + exp.regular_coeffs[j] * s.at(l);
    }
    if (level > s.leading_exponent && static_cast<std::size_t>(level - s.leading_exponent) > exp.regular_coeffs.size()) {
      throw InvalidArgument("local expansion too short to verify level " + std::to_string(level));
    }
    Matrix<F> residual = lhs - kappa * sum;
    const bool resonant = determinant(step_matrix<F>(exp.a_minus1, coupling, level)).is_zero();
    report.levels.push_back({level, residual.is_zero(), resonant});
    report.residuals.push_back(std::move(residual));
    report.resonant_rhs.push_back(resonant && level > s.leading_exponent ? std::optional<Matrix<F>>(sum)
                                                                         : std::nullopt);
  }
  return report;
}

template Matrix<Scalar> level_rhs(const LocalExpansion<Scalar>&, const std::vector<Matrix<Scalar>>&, long, long);
template Matrix<RatFunc> level_rhs(const LocalExpansion<RatFunc>&, const std::vector<Matrix<RatFunc>>&, long, long);
template SeriesSolution<Scalar> compute_series(const LocalExpansion<Scalar>&, const Scalar&, long, std::size_t,
                                               LeadingPolicy);
template SeriesSolution<RatFunc> compute_series(const LocalExpansion<RatFunc>&, const Scalar&, long, std::size_t,
                                                LeadingPolicy);
template RecursionReport<Scalar> verify_recursion(const SeriesSolution<Scalar>&, const LocalExpansion<Scalar>&,
                                                  const Scalar&);
template RecursionReport<RatFunc> verify_recursion(const SeriesSolution<RatFunc>&, const LocalExpansion<RatFunc>&,
                                                   const Scalar&);

}  // namespace kzrat
