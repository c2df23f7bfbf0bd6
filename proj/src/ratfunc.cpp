#include "kzrat/ratfunc.hpp"

#include <ostream>

#include "kzrat/errors.hpp"

namespace kzrat {

RatFunc::RatFunc(Poly numerator, Poly denominator) {
  if (denominator.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (numerator.is_zero()) {
    den_ = Poly(Scalar(1));
    return;
  }
  const Poly g = gcd(numerator, denominator);
  if (g.degree() > 0) {
    numerator = exact_quotient(numerator, g);
    denominator = exact_quotient(denominator, g);
  }
  const Scalar lead = denominator.leading();
  if (!lead.is_one()) {
    const Poly scale(Scalar(1) / lead);
    numerator = numerator * scale;
    denominator = denominator * scale;
  }
  num_ = std::move(numerator);
  den_ = std::move(denominator);
}

Scalar RatFunc::constant_value() const {
  if (!is_constant()) throw InvalidArgument("rational function is not constant: " + to_string());
  return num_.coefficient(0);
}

long RatFunc::degree() const { return num_.degree() - den_.degree(); }

std::optional<Monomial> RatFunc::as_monomial() const {
  if (is_zero()) return std::nullopt;
  // Canonical form forces a monomial into c*x^a / x^b with one of a, b zero.
  const auto is_pure_power = [](const Poly& p) {
    const auto& c = p.coefficients();
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
      if (!c[k].is_zero()) return false;
    }
    return true;
  };
  if (!is_pure_power(num_) || !is_pure_power(den_)) return std::nullopt;
  return Monomial{num_.leading(), degree()};
}

Scalar RatFunc::evaluate(const Scalar& at) const {
  const Scalar d = den_(at);
  if (d.is_zero()) throw InvalidArgument("rational function evaluated at a pole");
  return num_(at) / d;
}

RatFunc RatFunc::reflected() const { return RatFunc(num_.reflected(), den_.reflected()); }

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Normalized{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant() && b.is_constant()) return RatFunc(a.constant_value() * b.constant_value());
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DivisionByZero("rational function division by zero");
  if (a.is_zero()) return {};
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::to_string(std::string_view var) const {
  if (den_.is_constant()) return num_.to_string(var);
  std::string num = num_.to_string(var);
  std::string den = den_.to_string(var);
  if (!num_.is_constant() && num_.coefficients().size() > 1) {
    // Parenthesize anything that is not a single term.
    std::size_t terms = 0;
    for (const auto& c : num_.coefficients()) terms += c.is_zero() ? 0 : 1;
    if (terms > 1) num = "(" + num + ")";
  }
  return num + "/(" + den + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

}  // namespace kzrat
