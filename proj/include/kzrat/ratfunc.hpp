#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "kzrat/poly.hpp"
#include "kzrat/scalar.hpp"

namespace kzrat {

/// Term c * x^k with k possibly negative.
struct Monomial {
  Scalar coefficient;
  long exponent = 0;
};

/// Rational function num/den in one formal variable. Canonical form: den is
/// monic, gcd(num, den) = 1, and zero is 0/1, so equal values compare equal.
class RatFunc {
 public:
  RatFunc() : den_(Scalar(1)) {}
  RatFunc(long constant) : num_(Scalar(constant)), den_(Scalar(1)) {}      // NOLINT
  RatFunc(const Scalar& constant) : num_(constant), den_(Scalar(1)) {}     // NOLINT
  explicit RatFunc(Poly numerator) : num_(std::move(numerator)), den_(Scalar(1)) {}
  RatFunc(Poly numerator, Poly denominator);

  /// The formal variable itself.
  static RatFunc variable() { return RatFunc(Poly::variable()); }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant function; throws if the function is not constant.
  Scalar constant_value() const;

  /// deg(num) - deg(den); meaningless for zero.
  long degree() const;
  /// c * x^k form when the function is a single (Laurent) monomial.
  std::optional<Monomial> as_monomial() const;

  Scalar evaluate(const Scalar& at) const;
  /// f(-x).
  RatFunc reflected() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

  std::string to_string(std::string_view var = "d") const;

 private:
  struct Normalized {};
  RatFunc(Poly numerator, Poly denominator, Normalized)
      : num_(std::move(numerator)), den_(std::move(denominator)) {}

  Poly num_;
  Poly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

}  // namespace kzrat
