#include "kzrat/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "kzrat/errors.hpp"

namespace kzrat {

Poly::Poly(const Scalar& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Poly::Poly(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly Poly::monomial(const Scalar& coefficient, std::size_t degree) {
  if (coefficient.is_zero()) return {};
  std::vector<Scalar> c(degree + 1);
  c[degree] = coefficient;
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Poly::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(); }

const Scalar& Poly::leading() const {
  if (coeffs_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

std::size_t Poly::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) return k;
  }
  throw InvalidArgument("valuation of the zero polynomial");
}

Scalar Poly::operator()(const Scalar& at) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Scalar> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Scalar(static_cast<long>(k));
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  const Scalar lead = leading();
  std::vector<Scalar> c = coeffs_;
  for (auto& x : c) x /= lead;
  return Poly(std::move(c));
}

Poly Poly::shifted(const Scalar& shift) const {
  // Horner with (x + shift) as the evaluation point.
  const Poly step(std::vector<Scalar>{shift, Scalar(1)});
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * step + Poly(*it);
  return acc;
}

Poly Poly::reflected() const {
  std::vector<Scalar> c = coeffs_;
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return Poly(std::move(c));
}

Poly Poly::operator-() const {
  std::vector<Scalar> c = coeffs_;
  for (auto& x : c) x = -x;
  return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Scalar> rem = a.coefficients();
  const auto& divisor = b.coefficients();
  const std::size_t db = divisor.size() - 1;
  std::vector<Scalar> quot(rem.size() - db);
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    const Scalar factor = rem[k] / divisor[db];
    quot[k - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= factor * divisor[j];
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_quotient(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InvalidArgument("polynomial division is not exact");
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Poly pow(const Poly& base, std::size_t exponent) {
  Poly result(Scalar(1));
  for (std::size_t k = 0; k < exponent; ++k) result = result * base;
  return result;
}

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Scalar& c = coeffs_[k];
    if (c.is_zero()) continue;
    const Scalar mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

}  // namespace kzrat
