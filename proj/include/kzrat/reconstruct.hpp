#pragma once

#include <variant>
#include <vector>

#include "kzrat/frobenius.hpp"
#include "kzrat/kz_model.hpp"
#include "kzrat/poly.hpp"

namespace kzrat {

/// W(z) = numerator(z) / denominator(z), entries polynomials in z.
/// Normalized: denominator monic and sharing no factor with every numerator entry.
struct RationalMatrixFunction {
  Matrix<Poly> numerator;
  Poly denominator{Scalar(1)};

  static RationalMatrixFunction normalized(Matrix<Poly> numerator, Poly denominator);

  bool is_zero() const { return numerator.is_zero(); }
  friend bool operator==(const RationalMatrixFunction&, const RationalMatrixFunction&) = default;
};

struct OdeVerdict {
  bool satisfied = false;
  RationalMatrixFunction residual;  // dW/dz - coupling*A(z)*W(z)
  bool det_identically_zero = false;
};

/// prod_i (z - z_i)^{m_i}, m_i = max(0, -smallest eigenvalue of coupling*residue_i).
/// Throws NoPolynomialDenominator when that eigenvalue is not an integer
/// (or part of the spectrum is irrational).
Poly propose_denominator(const KZSystem& sys, const Scalar& coupling);

struct NotRepresentable {
  long first_unmatched_level = 0;
};

using ReconstructResult = std::variant<RationalMatrixFunction, NotRepresentable>;

/// Number of series coefficients reconstruct() needs.
std::size_t required_coefficients(const Poly& denominator, std::size_t max_num_degree);

/// Fits numerator/denominator, numerator degree <= max_num_degree, to the
/// Laurent series centered at `center` and checks the fit reproduces every
/// available coefficient. Throws InsufficientSeries when the series is too short.
ReconstructResult reconstruct(const SeriesSolution<Scalar>& s, const Scalar& center, const Poly& denominator,
                              std::size_t max_num_degree);

/// Laurent coefficients of W at `center` for powers from..to.
std::vector<Matrix<Scalar>> laurent_coefficients(const RationalMatrixFunction& w, const Scalar& center, long from,
                                                 long to);

OdeVerdict verify_ode(const RationalMatrixFunction& w, const KZSystem& sys);

Matrix<Scalar> evaluate(const RationalMatrixFunction& w, const Scalar& z);

}  // namespace kzrat
