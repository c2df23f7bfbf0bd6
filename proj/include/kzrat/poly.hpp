#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kzrat/scalar.hpp"

namespace kzrat {

/// Univariate polynomial with rational coefficients, index = degree.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class Poly {
 public:
  Poly() = default;
  Poly(const Scalar& constant);  // NOLINT: constants embed implicitly
  Poly(long constant) : Poly(Scalar(constant)) {}  // NOLINT
  explicit Poly(std::vector<Scalar> coefficients);

  static Poly monomial(const Scalar& coefficient, std::size_t degree);
  static Poly variable() { return monomial(Scalar(1), 1); }

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  Scalar coefficient(std::size_t k) const;
  const Scalar& leading() const;

  /// Index of the lowest nonzero coefficient (order of vanishing at 0).
  std::size_t valuation() const;

  Scalar operator()(const Scalar& at) const;
  Poly derivative() const;
  Poly monic() const;
  /// p(x + shift).
  Poly shifted(const Scalar& shift) const;
  /// p(-x).
  Poly reflected() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) = default;

  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();

  std::vector<Scalar> coeffs_;
};

/// Euclidean division a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Quotient of a division that must be exact; throws otherwise.
Poly exact_quotient(const Poly& a, const Poly& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

Poly pow(const Poly& base, std::size_t exponent);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace kzrat
