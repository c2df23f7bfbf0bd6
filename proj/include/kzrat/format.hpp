#pragma once

#include <string>
#include <string_view>

#include "kzrat/matrix.hpp"
#include "kzrat/poly.hpp"
#include "kzrat/ratfunc.hpp"

namespace kzrat {

/// Column-aligned bracketed rows, one per line, each prefixed by `indent`.
std::string format_matrix(const Matrix<Scalar>& m, std::string_view indent = "  ");

/// Symbolic matrices whose nonzero entries are all c*var^k with one common k
/// print as a factored prefactor "1/(s*var^-k) *" over an integer matrix;
/// anything else prints entry by entry.
std::string format_matrix(const Matrix<RatFunc>& m, std::string_view var, std::string_view indent = "  ");

std::string format_matrix(const Matrix<Poly>& m, std::string_view var, std::string_view indent = "  ");

}  // namespace kzrat
