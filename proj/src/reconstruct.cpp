#include "kzrat/reconstruct.hpp"

#include <string>

#include "kzrat/errors.hpp"
#include "kzrat/ratfunc.hpp"

namespace kzrat {

RationalMatrixFunction RationalMatrixFunction::normalized(Matrix<Poly> numerator, Poly denominator) {
  if (denominator.is_zero()) throw DivisionByZero("rational matrix function with zero denominator");
  if (numerator.is_zero()) return {std::move(numerator), Poly(Scalar(1))};
  Poly g = denominator;
  for (const auto& e : numerator.data()) g = gcd(g, e);
  const Scalar lead = denominator.leading();
  const Poly divisor = g * Poly(lead);
  RationalMatrixFunction w;
  w.numerator = numerator.map([&](const Poly& e) { return exact_quotient(e, divisor); });
  w.denominator = exact_quotient(denominator, divisor);
  return w;
}

Poly propose_denominator(const KZSystem& sys, const Scalar& coupling) {
  if (sys.is_symbolic()) throw InvalidArgument("propose_denominator needs numeric points");
  Poly den(Scalar(1));
  for (std::size_t i = 0; i < sys.points.size(); ++i) {
    const IndicialData data = indicial_data(sys.residues[i], coupling);
    if (data.residual_factor.degree() > 0) {
      throw NoPolynomialDenominator("irrational local exponents at z" + std::to_string(i + 1));
    }
    const Scalar smallest = data.eigenvalues.front().value;
    if (!smallest.is_integer()) {
      throw NoPolynomialDenominator("non-integer minimal exponent " + smallest.to_string() + " at z" +
                                    std::to_string(i + 1));
    }
    if (smallest.sign() < 0) {
      const auto m = static_cast<std::size_t>((-smallest).numerator().get_ui());
      den = den * pow(Poly(std::vector<Scalar>{-*sys.points[i], Scalar(1)}), m);
    }
  }
  return den;
}

std::size_t required_coefficients(const Poly& denominator, std::size_t max_num_degree) {
  return max_num_degree + static_cast<std::size_t>(denominator.degree()) + 2;
}

namespace {

// First `count` coefficients of 1/u for a power series u with u(0) != 0.
std::vector<Scalar> series_inverse(const Poly& u, std::size_t count) {
  std::vector<Scalar> inv(count);
  const Scalar u0 = u.coefficient(0);
  for (std::size_t k = 0; k < count; ++k) {
    Scalar acc = k == 0 ? Scalar(1) : Scalar(0);
    for (std::size_t i = 1; i <= k; ++i) acc -= u.coefficient(i) * inv[k - i];
    inv[k] = acc / u0;
  }
  return inv;
}

// Laurent coefficients of num(t)/den(t) at t = 0 for powers from..to; the
// polynomials are already in the local variable.
std::vector<Matrix<Scalar>> local_laurent(const Matrix<Poly>& num, const Poly& den, long from, long to) {
  const auto pole = static_cast<long>(den.valuation());
  const Poly unit = exact_quotient(den, Poly::monomial(Scalar(1), static_cast<std::size_t>(pole)));
  const long span = to + pole + 1;  // powers of num*unit^{-1} needed: 0..to+pole
  const std::vector<Scalar> inv = series_inverse(unit, static_cast<std::size_t>(std::max(0L, span)));
  std::vector<Matrix<Scalar>> out;
  for (long p = from; p <= to; ++p) {
    const long k = p + pole;  // coefficient of t^k in num*unit^{-1}
    Matrix<Scalar> m(num.rows(), num.cols());
    if (k >= 0) {
      for (std::size_t i = 0; i < num.rows(); ++i)
        for (std::size_t j = 0; j < num.cols(); ++j) {
          Scalar acc;
          const auto& c = num(i, j).coefficients();
          for (long s = 0; s <= k && s < static_cast<long>(c.size()); ++s) acc += c[s] * inv[k - s];
          m(i, j) = acc;
        }
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

ReconstructResult reconstruct(const SeriesSolution<Scalar>& s, const Scalar& center, const Poly& denominator,
                              std::size_t max_num_degree) {
  if (denominator.is_zero()) throw DivisionByZero("reconstruct: zero denominator");
  const std::size_t required = required_coefficients(denominator, max_num_degree);
  if (s.coeffs.size() < required) throw InsufficientSeries(required, s.coeffs.size());

  const std::size_t n = s.coeffs.front().rows();
  const std::size_t m = s.coeffs.front().cols();
  const Poly den_local = denominator.shifted(center);
  const auto& dc = den_local.coefficients();

  // Numerator coefficients in t = z - center are those of den*W at powers
  // 0..max_num_degree; the fit is triangular because den is prescribed.
  std::vector<std::vector<Scalar>> num_coeffs(n * m, std::vector<Scalar>(max_num_degree + 1));
  for (std::size_t k = 0; k <= max_num_degree; ++k) {
    const long power = static_cast<long>(k);
    for (std::size_t i = 0; i < dc.size(); ++i) {
      const long l = power - static_cast<long>(i);
      if (l < s.leading_exponent || dc[i].is_zero()) continue;
      if (l > s.last_power()) continue;
      const Matrix<Scalar>& b = s.at(l);
      for (std::size_t e = 0; e < n * m; ++e) num_coeffs[e][k] += dc[i] * b(e / m, e % m);
    }
  }
  Matrix<Poly> num_local(n, m);
  for (std::size_t e = 0; e < n * m; ++e) num_local(e / m, e % m) = Poly(num_coeffs[e]);

  const long from = std::min(s.leading_exponent, -static_cast<long>(den_local.valuation()));
  const auto expansion = local_laurent(num_local, den_local, from, s.last_power());
  for (long p = from; p <= s.last_power(); ++p) {
    const Matrix<Scalar>& got = expansion[static_cast<std::size_t>(p - from)];
    const bool ok = p < s.leading_exponent ? got.is_zero() : got == s.at(p);
    if (!ok) return NotRepresentable{p};
  }
  return RationalMatrixFunction::normalized(num_local.map([&](const Poly& e) { return e.shifted(-center); }),
                                            denominator);
}

std::vector<Matrix<Scalar>> laurent_coefficients(const RationalMatrixFunction& w, const Scalar& center, long from,
                                                 long to) {
  const Matrix<Poly> num_local = w.numerator.map([&](const Poly& e) { return e.shifted(center); });
  return local_laurent(num_local, w.denominator.shifted(center), from, to);
}

OdeVerdict verify_ode(const RationalMatrixFunction& w, const KZSystem& sys) {
  if (sys.is_symbolic()) throw InvalidArgument("verify_ode needs numeric points");
  if (w.numerator.rows() != sys.n) throw DimensionMismatch("verify_ode: W row count != system size");
  const Poly& q = w.denominator;
  const Matrix<Poly>& num = w.numerator;

  // A(z) = apoly(z) / lcm(z), lcm = prod (z - z_i).
  std::vector<Poly> linear;
  for (const auto& p : sys.points) linear.emplace_back(std::vector<Scalar>{-*p, Scalar(1)});
  Poly lcm(Scalar(1));
  for (const auto& f : linear) lcm = lcm * f;
  Matrix<Poly> apoly(sys.n, sys.n);
  for (std::size_t i = 0; i < linear.size(); ++i) {
    const Poly cofactor = exact_quotient(lcm, linear[i]);
    apoly = apoly + sys.residues[i].map([&](const Scalar& x) { return Poly(x) * cofactor; });
  }

  // (N'q - Nq') lcm - coupling*q*apoly*N over q^2*lcm.
  const Matrix<Poly> dnum = num.map([](const Poly& e) { return e.derivative(); });
  const Poly dq = q.derivative();
  const Matrix<Poly> lhs = (dnum.map([&](const Poly& e) { return e * q; }) - num.map([&](const Poly& e) { return e * dq; }))
                               .map([&](const Poly& e) { return e * lcm; });
  const Matrix<Poly> rhs = (apoly * num).map([&](const Poly& e) { return Poly(sys.coupling) * q * e; });
  OdeVerdict v;
  v.residual = RationalMatrixFunction::normalized(lhs - rhs, q * q * lcm);
  v.satisfied = v.residual.is_zero();
  if (num.is_square()) {
    const Matrix<RatFunc> as_rat = num.map([](const Poly& e) { return RatFunc(e); });
    v.det_identically_zero = determinant(as_rat).is_zero();
  } else {
    v.det_identically_zero = true;
  }
  return v;
}

Matrix<Scalar> evaluate(const RationalMatrixFunction& w, const Scalar& z) {
  const Scalar q = w.denominator(z);
  if (q.is_zero()) throw InvalidArgument("evaluation at a pole z = " + z.to_string());
  return w.numerator.map([&](const Poly& e) { return e(z) / q; });
}

}  // namespace kzrat
