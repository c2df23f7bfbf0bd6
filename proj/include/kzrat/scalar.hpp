#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace kzrat {

/// Exact rational number in lowest terms with a positive denominator.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : value_(value) {}  // NOLINT: integer literals promote
  Scalar(const mpz_class& numerator, const mpz_class& denominator);
  explicit Scalar(mpq_class value);

  /// Parses "p" or "p/q" with optional leading sign. Decimals and exponents
  /// are rejected so that every accepted string denotes an exact value.
  static Scalar parse(std::string_view text);

  /// Canonical text: "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  const mpq_class& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Scalar operator-() const { return Scalar(mpq_class(-value_)); }
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

/// base^exponent; negative exponents invert (zero base throws).
Scalar pow(const Scalar& base, long exponent);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace kzrat
