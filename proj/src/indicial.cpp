#include <algorithm>

#include "kzrat/errors.hpp"
#include "kzrat/frobenius.hpp"

namespace kzrat {

Poly characteristic_polynomial(const Matrix<Scalar>& m) {
  if (!m.is_square()) throw DimensionMismatch("characteristic polynomial of a non-square matrix");
  const RatFunc x = RatFunc::variable();
  Matrix<RatFunc> shifted = m.map([](const Scalar& v) { return RatFunc(-v); });
  for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) = shifted(i, i) + x;
  const RatFunc det = determinant(shifted);
  // The determinant of a polynomial matrix is a polynomial.
  return det.numerator();
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class k = 1; k * k <= n; ++k) {
    if (n % k != 0) continue;
    small.push_back(k);
    if (k * k != n) large.push_back(n / k);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Eigenvalue> rational_roots(const Poly& p, Poly* rest) {
  if (p.is_zero()) throw InvalidArgument("roots of the zero polynomial");
  std::vector<Eigenvalue> roots;
  Poly work = p.monic();
  const std::size_t zeros = work.valuation();
  if (zeros > 0) {
    roots.push_back({Scalar(0), zeros});
    work = exact_quotient(work, Poly::monomial(Scalar(1), zeros));
  }
  if (work.degree() > 0) {
    // Clear denominators to get integer coefficients for the rational root test.
    mpz_class lcm = 1;
    for (const auto& c : work.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
    const mpz_class a0 = (work.coefficient(0) * Scalar(lcm, 1)).numerator();
    const mpz_class an = (work.leading() * Scalar(lcm, 1)).numerator();
    const auto ps = positive_divisors(a0);
    const auto qs = positive_divisors(an);
    std::vector<Scalar> candidates;
    for (const auto& num : ps)
      for (const auto& den : qs) {
        candidates.emplace_back(num, den);
        candidates.emplace_back(-num, den);
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& c : candidates) {
      if (work.degree() <= 0) break;
      const Poly factor(std::vector<Scalar>{-c, Scalar(1)});
      std::size_t mult = 0;
      while (work.degree() > 0 && work(c).is_zero()) {
        work = exact_quotient(work, factor);
        ++mult;
      }
      if (mult > 0) roots.push_back({c, mult});
    }
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  if (rest) *rest = work.monic();
  return roots;
}

IndicialData indicial_data(const Matrix<Scalar>& a_minus1, const Scalar& coupling) {
  IndicialData data;
  data.eigenvalues = rational_roots(characteristic_polynomial(coupling * a_minus1), &data.residual_factor);
  for (const auto& e : data.eigenvalues) {
    if (e.value.is_integer()) data.resonant_levels.push_back(e.value.numerator().get_si());
  }
  return data;
}

long default_exponent(const IndicialData& data) {
  if (data.resonant_levels.empty()) {
    throw NoIntegerExponent("no integer eigenvalue of coupling*a_{-1}: no Laurent solution with an integer exponent");
  }
  return data.resonant_levels.front();
}

}  // namespace kzrat
