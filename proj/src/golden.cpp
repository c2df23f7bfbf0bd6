#include "kzrat/golden.hpp"

#include "kzrat/errors.hpp"
#include "kzrat/format.hpp"

namespace kzrat {

namespace {

// Transcribed as printed, including the shared 1/(-9 d^k) prefactors.
constexpr std::array<GoldenFixture, 5> kFixtures{{
    // leading coefficient, I - P1
    {"b_-2", -2, false, 1, 0, {{{1, -1, 0}, {-1, 1, 0}, {0, 0, 0}}}},
    {"b_-1", -1, false, -9, 1, {{{-12, 12, 0}, {6, -6, 0}, {6, -6, 0}}}},
    {"b_0", 0, false, -9, 2, {{{3, -3, 0}, {-6, 6, 0}, {3, -3, 0}}}},
    {"b_1", 1, false, -9, 3, {{{6, -6, 0}, {6, -6, 0}, {-12, 12, 0}}}},
    // right side of (I - P1) b_2 = a_0 b_1 + a_1 b_0 + a_2 b_-1 + a_3 b_-2
    {"rhs_level_2", 2, true, -9, 4, {{{1, -1, 0}, {-1, 1, 0}, {0, 0, 0}}}},
}};

}  // namespace

Matrix<RatFunc> GoldenFixture::value() const {
  const RatFunc prefactor(Poly(Scalar(1)), Poly::monomial(Scalar(scale), static_cast<std::size_t>(d_power)));
  Matrix<RatFunc> m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = prefactor * RatFunc(entries[i][j]);
  return m;
}

std::string GoldenFixture::display(std::string_view indent) const {
  Matrix<Scalar> m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = Scalar(entries[i][j]);
  std::string head = std::string(indent) + "1/(" + std::to_string(scale);
  if (d_power > 0) head += "*d" + (d_power == 1 ? std::string() : "^" + std::to_string(d_power));
  return head + ") *\n" + format_matrix(m, indent);
}

std::span<const GoldenFixture> golden_fixtures() { return kFixtures; }

GoldenSection compare_golden(const SeriesSolution<RatFunc>& series, const Matrix<RatFunc>& level2_rhs) {
  if (series.leading_exponent != -2 || series.last_power() < 1) {
    throw InvalidArgument("golden comparison needs b_-2 .. b_1");
  }
  GoldenSection g;
  bool all_exact = true;
  bool all_dual = true;
  for (const auto& f : kFixtures) {
    const Matrix<RatFunc>& got = f.resonant_rhs ? level2_rhs : series.at(f.power);
    const Matrix<RatFunc> want = f.value();
    const bool exact = got == want;
    const bool dual = got.map([](const RatFunc& x) { return x.reflected(); }) == want;
    g.checks.push_back({std::string(f.name), exact, dual});
    all_exact = all_exact && exact;
    all_dual = all_dual && dual;
  }
  g.status = all_exact ? "match" : (all_dual ? "dual-match" : "mismatch");
  return g;
}

}  // namespace kzrat
