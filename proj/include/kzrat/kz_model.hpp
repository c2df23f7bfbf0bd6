#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "kzrat/linalg.hpp"
#include "kzrat/matrix.hpp"
#include "kzrat/ratfunc.hpp"
#include "kzrat/scalar.hpp"

namespace kzrat {

/// A singular point: an exact rational, or the formal marker (nullopt) used
/// by two-point symbolic systems where d = point2 - point1 stays a variable.
using Point = std::optional<Scalar>;

inline constexpr std::nullopt_t symbolic_point = std::nullopt;

/// Fuchsian system dW/dz = coupling * sum_i residues[i] / (z - points[i]) * W.
struct KZSystem {
  std::size_t n = 0;
  std::vector<Point> points;
  std::vector<Matrix<Scalar>> residues;
  Scalar coupling{2};

  bool is_symbolic() const { return !points.empty() && !points.front().has_value(); }
};

/// Validates and assembles a system: points pairwise distinct, one square
/// n x n residue per point, symbolic mode only with exactly two points.
KZSystem make_system(std::vector<Point> points, std::vector<Matrix<Scalar>> residues, Scalar coupling);

/// Permutation matrix swapping coordinates i and j (1-based, i < j <= n).
Matrix<Scalar> transposition_matrix(std::size_t n, std::size_t i, std::size_t j);

/// Three-dimensional two-point preset with residues (1 2) and (1 3).
KZSystem build_kz_s3(Point z1, Point z2, Scalar coupling = Scalar(2));

/// A(z) = sum_i residues[i] / (z - points[i]), numeric systems only.
/// The coupling is not included.
Matrix<Scalar> system_matrix_at(const KZSystem& sys, const Scalar& z);

enum class Convention {
  derived_taylor,  // geometric-series expansion of A(z)
  literal_paper,   // alternating sign on the regular part, two-point symbolic only
};

std::string_view to_string(Convention c);
Convention parse_convention(std::string_view text);

/// A(z) = a_{-1}/(z - z_c) + sum_r a_r (z - z_c)^r around the center z_c.
/// F = Scalar for numeric systems, F = RatFunc (in d) for symbolic ones.
template <ExactField F>
struct LocalExpansion {
  std::size_t center = 0;
  Matrix<Scalar> a_minus1;
  std::vector<Matrix<F>> regular_coeffs;  // a_0 .. a_order
  Convention convention = Convention::derived_taylor;
};

/// Expansion coefficients a_0..a_order at points[center] (0-based index).
/// Numeric systems can be expanded with F = RatFunc as constants; symbolic
/// systems need F = RatFunc.
template <ExactField F>
LocalExpansion<F> local_expansion(const KZSystem& sys, std::size_t center, Convention convention,
                                  std::size_t order);

/// Embeds a rational matrix into another exact field.
template <ExactField F>
Matrix<F> embed(const Matrix<Scalar>& m) {
  return m.map([](const Scalar& x) { return F(x); });
}

}  // namespace kzrat
