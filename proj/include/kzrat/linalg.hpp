#pragma once

#include <concepts>
#include <optional>
#include <string_view>
#include <vector>

#include "kzrat/matrix.hpp"

namespace kzrat {

template <class F>
concept ExactField = requires(const F a, const F b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  F(0);
  F(1);
};

/// Gauss-Jordan reduction of a matrix together with the row operations used.
template <ExactField F>
struct RowReduction {
  Matrix<F> reduced;    // reduced row echelon form
  Matrix<F> transform;  // transform * input == reduced, invertible
  std::vector<std::size_t> pivot_columns;

  std::size_t rank() const { return pivot_columns.size(); }
};

/// Pivot = first nonzero entry at or below the current row, scanning columns
/// left to right. No magnitude pivoting: the arithmetic is exact.
template <ExactField F>
RowReduction<F> row_reduce(const Matrix<F>& a) {
  Matrix<F> r = a;
  Matrix<F> t = Matrix<F>::identity(a.rows());
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t p = row;
    while (p < r.rows() && r(p, col).is_zero()) ++p;
    if (p == r.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(p, j), r(row, j));
      for (std::size_t j = 0; j < t.cols(); ++j) std::swap(t(p, j), t(row, j));
    }
    const F inv = F(1) / r(row, col);
    for (std::size_t j = 0; j < r.cols(); ++j) r(row, j) = r(row, j) * inv;
    for (std::size_t j = 0; j < t.cols(); ++j) t(row, j) = t(row, j) * inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col).is_zero()) continue;
      const F factor = r(i, col);
      for (std::size_t j = 0; j < r.cols(); ++j) {
        if (!r(row, j).is_zero()) r(i, j) = r(i, j) - factor * r(row, j);
      }
      for (std::size_t j = 0; j < t.cols(); ++j) {
        if (!t(row, j).is_zero()) t(i, j) = t(i, j) - factor * t(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), std::move(t), std::move(pivots)};
}

enum class SolveKind { unique, affine, inconsistent };

inline std::string_view to_string(SolveKind kind) {
  switch (kind) {
    case SolveKind::unique:
      return "unique";
    case SolveKind::affine:
      return "affine";
    case SolveKind::inconsistent:
      return "inconsistent";
  }
  return "unknown";
}

/// Outcome of A*X = B.
///  unique/affine: A*particular == B, A*v == 0 for each kernel column v.
///  inconsistent:  certificate*A == 0 and certificate*B != 0.
template <ExactField F>
struct SolveResult {
  SolveKind kind = SolveKind::unique;
  std::optional<Matrix<F>> particular;
  std::vector<Matrix<F>> kernel_basis;  // n x 1 columns, ordered by free column
  std::optional<Matrix<F>> certificate;  // 1 x n row
};

/// Kernel basis in reduced column echelon form: each column's first nonzero
/// entry is 1 and is zero in every other column; columns ordered by that
/// pivot row.
template <ExactField F>
std::vector<Matrix<F>> kernel_from_reduction(const RowReduction<F>& rr) {
  const std::size_t n = rr.reduced.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : rr.pivot_columns) is_pivot[c] = true;
  const std::size_t nullity = n - rr.rank();
  if (nullity == 0) return {};
  // Rows of `raw` are the free-variable solutions; reducing them gives the
  // column echelon form of the basis.
  Matrix<F> raw(nullity, n);
  std::size_t k = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    raw(k, free) = F(1);
    for (std::size_t p = 0; p < rr.pivot_columns.size(); ++p) raw(k, rr.pivot_columns[p]) = -rr.reduced(p, free);
    ++k;
  }
  const Matrix<F> echelon = row_reduce(raw).reduced;
  std::vector<Matrix<F>> basis;
  for (std::size_t r = 0; r < nullity; ++r) basis.push_back(echelon.row(r).transpose());
  return basis;
}

template <ExactField F>
std::vector<Matrix<F>> kernel_basis(const Matrix<F>& a) {
  return kernel_from_reduction(row_reduce(a));
}

/// Classifies and solves A*X = B exactly. Singular systems are ordinary
/// results; the particular solution has every free variable set to zero.
template <ExactField F>
SolveResult<F> solve_linear(const Matrix<F>& a, const Matrix<F>& b) {
  if (!a.is_square()) throw DimensionMismatch("solve_linear: coefficient matrix must be square");
  if (b.rows() != a.rows()) throw DimensionMismatch("solve_linear: right side row count mismatch");
  const RowReduction<F> rr = row_reduce(a);
  const Matrix<F> eb = rr.transform * b;
  SolveResult<F> out;
  for (std::size_t i = rr.rank(); i < a.rows(); ++i) {
    for (std::size_t j = 0; j < eb.cols(); ++j) {
      if (!eb(i, j).is_zero()) {
        out.kind = SolveKind::inconsistent;
        out.certificate = rr.transform.row(i);
        return out;
      }
    }
  }
  Matrix<F> x(a.cols(), b.cols());
  for (std::size_t k = 0; k < rr.rank(); ++k)
    for (std::size_t j = 0; j < b.cols(); ++j) x(rr.pivot_columns[k], j) = eb(k, j);
  out.particular = std::move(x);
  out.kernel_basis = kernel_from_reduction(rr);
  out.kind = out.kernel_basis.empty() ? SolveKind::unique : SolveKind::affine;
  return out;
}

/// Re-checks the defining identities of a SolveResult by direct multiplication.
template <ExactField F>
bool certifies(const SolveResult<F>& r, const Matrix<F>& a, const Matrix<F>& b) {
  if (r.kind == SolveKind::inconsistent) {
    if (!r.certificate) return false;
    return (*r.certificate * a).is_zero() && !(*r.certificate * b).is_zero();
  }
  if (!r.particular || !(a * *r.particular == b)) return false;
  for (const auto& v : r.kernel_basis) {
    if (v.is_zero() || !(a * v).is_zero()) return false;
  }
  return (r.kind == SolveKind::unique) == r.kernel_basis.empty();
}

template <ExactField F>
Matrix<F> mat_inverse(const Matrix<F>& a) {
  if (!a.is_square()) throw DimensionMismatch("mat_inverse: matrix must be square");
  SolveResult<F> r = solve_linear(a, Matrix<F>::identity(a.rows()));
  if (r.kind != SolveKind::unique) throw SingularMatrix("mat_inverse: matrix is singular");
  return std::move(*r.particular);
}

template <ExactField F>
F determinant(const Matrix<F>& a) {
  if (!a.is_square()) throw DimensionMismatch("determinant: matrix must be square");
  Matrix<F> m = a;
  F det(1);
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m(p, col).is_zero()) ++p;
    if (p == n) return F(0);
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
      det = -det;
    }
    det = det * m(col, col);
    const F inv = F(1) / m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      const F factor = m(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(i, j) = m(i, j) - factor * m(col, j);
    }
  }
  return det;
}

/// Component of x orthogonal to span(basis), columnwise: x - K (K^T K)^{-1} K^T x.
template <ExactField F>
Matrix<F> project_off(const Matrix<F>& x, const std::vector<Matrix<F>>& basis) {
  if (basis.empty()) return x;
  Matrix<F> k(x.rows(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t i = 0; i < x.rows(); ++i) k(i, c) = basis[c](i, 0);
  const Matrix<F> kt = k.transpose();
  const SolveResult<F> coeffs = solve_linear(kt * k, kt * x);
  if (coeffs.kind != SolveKind::unique) throw SingularMatrix("project_off: basis is linearly dependent");
  return x - k * *coeffs.particular;
}

}  // namespace kzrat
