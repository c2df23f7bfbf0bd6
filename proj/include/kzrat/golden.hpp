#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>

#include "kzrat/frobenius.hpp"
#include "kzrat/ratfunc.hpp"
#include "kzrat/report.hpp"

namespace kzrat {

/// Reference closed form for the S3 two-point system with coupling 2,
/// expanded at z1 with the alternating-sign regular part:
/// value = entries / (scale * d^d_power), d = z2 - z1.
struct GoldenFixture {
  std::string_view name;
  long power;   // series power p of b_p, or the level of the resonant right side
  bool resonant_rhs;
  long scale;
  long d_power;
  std::array<std::array<long, 3>, 3> entries;

  Matrix<RatFunc> value() const;
  /// Printed layout: "1/(scale*d^k) *" over the integer matrix.
  std::string display(std::string_view indent = "  ") const;
};

std::span<const GoldenFixture> golden_fixtures();

/// Compares b_{-2}..b_1 and the level-2 right side (sum a_j b_l, no coupling)
/// against the fixtures, exactly and under d -> -d.
GoldenSection compare_golden(const SeriesSolution<RatFunc>& series, const Matrix<RatFunc>& level2_rhs);

}  // namespace kzrat
