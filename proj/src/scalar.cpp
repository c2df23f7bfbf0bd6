#include "kzrat/scalar.hpp"

#include <ostream>

#include "kzrat/errors.hpp"

namespace kzrat {

ResonanceObstruction::ResonanceObstruction(long level, std::vector<std::string> certificate)
    : Error("resonance obstruction at level " + std::to_string(level) +
            ": the resonant step has no solution (logarithmic terms required)"),
      level_(level),
      certificate_(std::move(certificate)) {}

InsufficientSeries::InsufficientSeries(std::size_t required, std::size_t available)
    : Error("insufficient series length: reconstruction needs " + std::to_string(required) +
            " coefficients, only " + std::to_string(available) + " available"),
      required_(required),
      available_(available) {}

ConfigError::ConfigError(std::string field, const std::string& message)
    : Error("config field '" + field + "': " + message), field_(std::move(field)) {}

Scalar::Scalar(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.find_first_of(".eE") != std::string_view::npos) {
    throw ParseError("decimal \"" + std::string(text) + "\" rejected; write rationals as \"p/q\"");
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  }
  mpz_class num(std::string(num_text), 10);
  const mpz_class den(std::string(den_text), 10);
  if (den == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  if (negative) num = -num;
  return Scalar(num, den);
}

std::string Scalar::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  value_ += rhs.value_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw DivisionByZero("division of a rational by zero");
  value_ /= rhs.value_;
  return *this;
}

Scalar pow(const Scalar& base, long exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw DivisionByZero("zero raised to a negative power");
    return Scalar(1) / pow(base, -exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Scalar(num, den);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace kzrat
