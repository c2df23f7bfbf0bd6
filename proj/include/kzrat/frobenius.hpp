#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "kzrat/kz_model.hpp"
#include "kzrat/linalg.hpp"
#include "kzrat/poly.hpp"

namespace kzrat {

struct Eigenvalue {
  Scalar value;
  std::size_t multiplicity = 0;
};

/// Spectrum of coupling * a_{-1}. Rational eigenvalues are listed exactly;
/// whatever has no rational root is kept as residual_factor.
struct IndicialData {
  std::vector<Eigenvalue> eigenvalues;  // ascending
  Poly residual_factor;                 // monic; 1 when the spectrum is rational
  std::vector<long> resonant_levels;    // integer eigenvalues, ascending
};

/// det(x*I - m), monic.
Poly characteristic_polynomial(const Matrix<Scalar>& m);

/// Rational roots with multiplicity (ascending) by the rational root test;
/// `rest` receives the monic cofactor without rational roots.
std::vector<Eigenvalue> rational_roots(const Poly& p, Poly* rest = nullptr);

IndicialData indicial_data(const Matrix<Scalar>& a_minus1, const Scalar& coupling);

template <ExactField F>
IndicialData indicial_data(const LocalExpansion<F>& exp, const Scalar& coupling) {
  return indicial_data(exp.a_minus1, coupling);
}

/// Smallest integer eigenvalue; throws NoIntegerExponent when there is none.
long default_exponent(const IndicialData& data);

enum class LeadingPolicy {
  paper_projector,  // b = I - a_{-1}; needs a_{-1}^2 = I and exponent = -coupling
  kernel_columns,   // kernel basis of (exponent*I - coupling*a_{-1}) as columns, zero padded
};

std::string_view to_string(LeadingPolicy p);
LeadingPolicy parse_leading_policy(std::string_view text);

/// Policy used when none is requested: the projector where it applies,
/// kernel columns otherwise.
LeadingPolicy default_leading_policy(const Matrix<Scalar>& a_minus1, const Scalar& coupling, long exponent);

/// Nonzero b with (exponent*I - coupling*a_{-1}) b = 0.
Matrix<Scalar> leading_coefficient(const Matrix<Scalar>& a_minus1, const Scalar& coupling, long exponent,
                                   LeadingPolicy policy);

template <ExactField F>
Matrix<Scalar> leading_coefficient(const LocalExpansion<F>& exp, const Scalar& coupling, long exponent,
                                   LeadingPolicy policy) {
  return leading_coefficient(exp.a_minus1, coupling, exponent, policy);
}

/// Record of a step whose matrix (level*I - coupling*a_{-1}) is singular.
template <ExactField F>
struct ResonanceRecord {
  long level = 0;
  SolveKind kind = SolveKind::affine;
  std::vector<Matrix<F>> kernel;         // n x 1 columns
  std::optional<Matrix<F>> certificate;  // set only for inconsistent steps
  Matrix<F> rhs;                         // sum_{j+l=level-1} a_j b_l, without the coupling
};

/// W(z) = sum_{p >= leading_exponent} coeffs[p - leading_exponent] (z - z_c)^p.
template <ExactField F>
struct SeriesSolution {
  long leading_exponent = 0;
  std::vector<Matrix<F>> coeffs;
  std::vector<ResonanceRecord<F>> resonances;
  Convention convention = Convention::derived_taylor;

  long last_power() const { return leading_exponent + static_cast<long>(coeffs.size()) - 1; }
  const Matrix<F>& at(long power) const { return coeffs.at(static_cast<std::size_t>(power - leading_exponent)); }
};

/// sum_{j + l = level - 1, j >= 0, l >= leading} a_j b_l from coefficients
/// b_leading .. b_{level-1}.
template <ExactField F>
Matrix<F> level_rhs(const LocalExpansion<F>& exp, const std::vector<Matrix<F>>& coeffs, long leading, long level);

/// Solves (level*I - coupling*a_{-1}) b_level = coupling * level_rhs for
/// level = exponent+1 .. exponent+order. At a resonant level the particular
/// solution is taken orthogonal to the step kernel and the kernel is recorded;
/// an inconsistent resonant step throws ResonanceObstruction.
template <ExactField F>
SeriesSolution<F> compute_series(const LocalExpansion<F>& exp, const Scalar& coupling, long exponent,
                                 std::size_t order, LeadingPolicy policy);

struct LevelCheck {
  long level = 0;
  bool residual_zero = false;
  bool resonant = false;
};

/// Independent re-evaluation of the recursion identities.
template <ExactField F>
struct RecursionReport {
  std::vector<LevelCheck> levels;
  std::vector<Matrix<F>> residuals;      // parallel to levels
  std::vector<std::optional<Matrix<F>>> resonant_rhs;  // parallel to levels

  bool all_zero() const {
    for (const auto& l : levels)
      if (!l.residual_zero) return false;
    return true;
  }
  std::optional<long> first_failure() const {
    for (const auto& l : levels)
      if (!l.residual_zero) return l.level;
    return std::nullopt;
  }
};

template <ExactField F>
RecursionReport<F> verify_recursion(const SeriesSolution<F>& s, const LocalExpansion<F>& exp,
                                    const Scalar& coupling);

}  // namespace kzrat
