#include "kzrat/kz_model.hpp"

#include <string>

#include "kzrat/errors.hpp"

namespace kzrat {

KZSystem make_system(std::vector<Point> points, std::vector<Matrix<Scalar>> residues, Scalar coupling) {
  if (points.empty()) throw InvalidArgument("system needs at least one singular point");
  if (points.size() != residues.size()) {
    throw DimensionMismatch("one residue per singular point required (" + std::to_string(points.size()) +
                            " points, " + std::to_string(residues.size()) + " residues)");
  }
  const bool symbolic = !points.front().has_value();
  for (const auto& p : points) {
    if (p.has_value() == symbolic) throw InvalidArgument("cannot mix symbolic and numeric points");
  }
  if (symbolic && points.size() != 2) throw InvalidArgument("symbolic mode requires exactly two points");
  if (!symbolic) {
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = i + 1; j < points.size(); ++j)
        if (*points[i] == *points[j]) {
          throw InvalidArgument("coincident points: z" + std::to_string(i + 1) + " = z" + std::to_string(j + 1) +
                                " = " + points[i]->to_string());
        }
  }
  const std::size_t n = residues.front().rows();
  for (const auto& r : residues) {
    if (!r.is_square() || r.rows() != n) throw DimensionMismatch("residues must all be square of the same size");
  }
  return KZSystem{n, std::move(points), std::move(residues), std::move(coupling)};
}

Matrix<Scalar> transposition_matrix(std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || i >= j || j > n) {
    throw InvalidArgument("transposition (" + std::to_string(i) + " " + std::to_string(j) +
                          ") out of range for n = " + std::to_string(n));
  }
  Matrix<Scalar> p = Matrix<Scalar>::identity(n);
  p(i - 1, i - 1) = Scalar(0);
  p(j - 1, j - 1) = Scalar(0);
  p(i - 1, j - 1) = Scalar(1);
  p(j - 1, i - 1) = Scalar(1);
  return p;
}

KZSystem build_kz_s3(Point z1, Point z2, Scalar coupling) {
  return make_system({std::move(z1), std::move(z2)}, {transposition_matrix(3, 1, 2), transposition_matrix(3, 1, 3)},
                     std::move(coupling));
}

Matrix<Scalar> system_matrix_at(const KZSystem& sys, const Scalar& z) {
  if (sys.is_symbolic()) throw InvalidArgument("system_matrix_at needs numeric points");
  Matrix<Scalar> a(sys.n, sys.n);
  for (std::size_t i = 0; i < sys.points.size(); ++i) {
    const Scalar gap = z - *sys.points[i];
    if (gap.is_zero()) throw InvalidArgument("A(z) evaluated at singular point " + z.to_string());
    a = a + (Scalar(1) / gap) * sys.residues[i];
  }
  return a;
}

std::string_view to_string(Convention c) {
  return c == Convention::derived_taylor ? "derived-taylor" : "literal-paper";
}

Convention parse_convention(std::string_view text) {
  if (text == "derived-taylor") return Convention::derived_taylor;
  if (text == "literal-paper") return Convention::literal_paper;
  throw InvalidArgument("unknown convention \"" + std::string(text) + "\" (derived-taylor | literal-paper)");
}

namespace {

// point_i - point_center as a field element; in symbolic mode this is +-d.
template <ExactField F>
F offset(const KZSystem& sys, std::size_t i, std::size_t center);

template <>
Scalar offset<Scalar>(const KZSystem& sys, std::size_t i, std::size_t center) {
  if (sys.is_symbolic()) throw InvalidArgument("symbolic system cannot be expanded over plain rationals");
  return *sys.points[i] - *sys.points[center];
}

template <>
RatFunc offset<RatFunc>(const KZSystem& sys, std::size_t i, std::size_t center) {
  if (!sys.is_symbolic()) return RatFunc(*sys.points[i] - *sys.points[center]);
  const RatFunc d = RatFunc::variable();
  return i > center ? d : -d;
}

}  // namespace

template <ExactField F>
LocalExpansion<F> local_expansion(const KZSystem& sys, std::size_t center, Convention convention,
                                  std::size_t order) {
  if (center >= sys.points.size()) {
    throw InvalidArgument("center index " + std::to_string(center) + " out of range");
  }
  if (convention == Convention::literal_paper && !(sys.is_symbolic() && sys.points.size() == 2)) {
    throw InvalidArgument("literal-paper convention is defined only for two-point symbolic systems");
  }
  LocalExpansion<F> exp;
  exp.center = center;
  exp.a_minus1 = sys.residues[center];
  exp.convention = convention;
  exp.regular_coeffs.assign(order + 1, Matrix<F>(sys.n, sys.n));
  for (std::size_t i = 0; i < sys.points.size(); ++i) {
    if (i == center) continue;
    const F inv = F(1) / offset<F>(sys, i, center);
    const Matrix<F> residue = embed<F>(sys.residues[i]);
    // 1/(z - z_i) = -sum_r (z - z_c)^r / (z_i - z_c)^{r+1}
    F power = inv;
    for (std::size_t r = 0; r <= order; ++r) {
      F factor = -power;
      if (convention == Convention::literal_paper && r % 2 == 0) factor = power;
      exp.regular_coeffs[r] = exp.regular_coeffs[r] + factor * residue;
      power = power * inv;
    }
  }
  return exp;
}

template LocalExpansion<Scalar> local_expansion<Scalar>(const KZSystem&, std::size_t, Convention, std::size_t);
template LocalExpansion<RatFunc> local_expansion<RatFunc>(const KZSystem&, std::size_t, Convention, std::size_t);

}  // namespace kzrat
