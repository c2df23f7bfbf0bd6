#include <doctest.h>

#include <random>

#include "kzrat/linalg.hpp"
#include "kzrat/poly.hpp"
#include "kzrat/ratfunc.hpp"
#include "kzrat/scalar.hpp"
#include "test_support.hpp"

using namespace kzrat;
using namespace kzrat::testing;

namespace {

// Rank of the matrix whose columns are the given vectors.
std::size_t span_rank(const std::vector<Matrix<Scalar>>& cols) {
  Matrix<Scalar> m(cols.front().rows(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, c) = cols[c](i, 0);
  return row_reduce(m).rank();
}

Matrix<Scalar> col(std::initializer_list<long> v) {
  Matrix<Scalar> m(v.size(), 1);
  std::size_t i = 0;
  for (long x : v) m(i++, 0) = Scalar(x);
  return m;
}

}  // namespace

TEST_CASE("scalar parsing and canonical text") {
  CHECK(Scalar::parse("6/4") == Scalar(3) / Scalar(2));
  CHECK(Scalar::parse("-7").to_string() == "-7");
  CHECK(Scalar::parse("+2/4").to_string() == "1/2");
  CHECK(Scalar::parse("-2/4").to_string() == "-1/2");
  CHECK_THROWS_AS(Scalar::parse("0.5"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1e3"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1/0"), Error);
  CHECK_THROWS_AS(Scalar::parse(""), ParseError);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
  CHECK(pow(Scalar(-2), 3) == Scalar(-8));
  CHECK(pow(Scalar(2), -2) == Scalar(1) / Scalar(4));
}

TEST_CASE("mat_mul on the permutation residues") {
  CHECK(P1() * P1() == I3());
  CHECK(I3() * P2() == P2());
  CHECK(P1() * P2() == ints({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
  CHECK_THROWS_AS(P1() * Matrix<Scalar>(2, 2), DimensionMismatch);
}

TEST_CASE("mat_inverse") {
  const Matrix<Scalar> inv = mat_inverse<Scalar>(I3() + Scalar(2) * P1());
  const Scalar third = Scalar(1) / Scalar(3);
  CHECK(inv == Matrix<Scalar>{{-third, 2 * third, 0}, {2 * third, -third, 0}, {0, 0, third}});
  CHECK(inv * (I3() + Scalar(2) * P1()) == I3());
  CHECK(mat_inverse<Scalar>(I3()) == I3());
  CHECK_THROWS_AS(mat_inverse<Scalar>(I3() - P1()), SingularMatrix);
}

TEST_CASE("solve_linear classifications") {
  SUBCASE("unique") {
    const auto r = solve_linear<Scalar>(I3(), P2());
    CHECK(r.kind == SolveKind::unique);
    CHECK(*r.particular == P2());
    CHECK(r.kernel_basis.empty());
  }
  SUBCASE("affine with two dimensional kernel") {
    const Matrix<Scalar> a = I3() - P1();
    const Matrix<Scalar> b = ints({{1, -1, 0}, {-1, 1, 0}, {0, 0, 0}});
    const auto r = solve_linear(a, b);
    REQUIRE(r.kind == SolveKind::affine);
    CHECK(a * *r.particular == b);
    REQUIRE(r.kernel_basis.size() == 2);
    std::vector<Matrix<Scalar>> joined = r.kernel_basis;
    CHECK(span_rank(joined) == 2);
    joined.push_back(col({1, 1, 0}));
    joined.push_back(col({0, 0, 1}));
    CHECK(span_rank(joined) == 2);
    CHECK(certifies(r, a, b));
  }
  SUBCASE("inconsistent with certificate") {
    const Matrix<Scalar> a = I3() - P1();
    const auto r = solve_linear(a, I3());
    REQUIRE(r.kind == SolveKind::inconsistent);
    const Matrix<Scalar>& y = *r.certificate;
    CHECK((y * a).is_zero());
    CHECK(!(y * I3()).is_zero());
    // the left kernel of I - P1 restricted to nonzero y is spanned by (1,1,0) and (0,0,1);
    // the certificate found is proportional to (1,1,0)
    CHECK(y(0, 0) == y(0, 1));
    CHECK(y(0, 2).is_zero());
    CHECK(!y(0, 0).is_zero());
    CHECK(certifies(r, a, I3()));
  }
  SUBCASE("non-square coefficient matrix") {
    CHECK_THROWS_AS(solve_linear(Matrix<Scalar>(2, 3), Matrix<Scalar>(2, 1)), DimensionMismatch);
  }
}

TEST_CASE("polynomial gcd") {
  const Poly x = Poly::variable();
  CHECK(gcd(x * x - Poly(1), x - Poly(1)) == x - Poly(1));
  CHECK(gcd(pow(x, 3), pow(x, 2)) == pow(x, 2));
  CHECK(gcd(x * x + Poly(1), x) == Poly(1));
  CHECK(gcd(Poly(), Poly()).is_zero());
  CHECK(gcd(Poly(Scalar(3)) * x, Poly()) == x);
}

TEST_CASE("polynomial division and transforms") {
  const Poly x = Poly::variable();
  const Poly a = pow(x, 4) - Poly(3) * x + Poly(2);
  const Poly b = x * x + Poly(1);
  const auto [q, r] = divmod(a, b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
  CHECK_THROWS(exact_quotient(a, b));
  CHECK(exact_quotient(a * b, b) == a);
  CHECK((x * x).shifted(Scalar(1)) == x * x + Poly(2) * x + Poly(1));
  CHECK((x * x * x + x).reflected() == -(x * x * x + x));
  CHECK(pow(x, 3).derivative() == Poly(3) * x * x);
  CHECK((pow(x, 3) * Poly(2)).valuation() == 3);
}

TEST_CASE("RatFunc canonical form") {
  const Poly x = Poly::variable();
  const RatFunc f(x * x - Poly(1), Poly(2) * (x - Poly(1)));
  CHECK(f.numerator() == Poly(Scalar(1) / Scalar(2)) * (x + Poly(1)));
  CHECK(f.denominator() == Poly(1));
  CHECK(RatFunc(Poly(), x) == RatFunc(0));
  CHECK(RatFunc(Poly(), x).denominator() == Poly(1));
  CHECK(d() / d() == RatFunc(1));
  const auto m = (RatFunc(Scalar(-3)) / (d() * d())).as_monomial();
  REQUIRE(m);
  CHECK(m->coefficient == Scalar(-3));
  CHECK(m->exponent == -2);
  CHECK_THROWS_AS(RatFunc(1) / RatFunc(0), DivisionByZero);
  CHECK((RatFunc(1) / d()).reflected() == RatFunc(-1) / d());
}

TEST_CASE("RatFunc canonicality under random arithmetic") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Scalar> nc, dc;
    for (int k = 0; k < 3; ++k) nc.push_back(small_rational(rng));
    for (int k = 0; k < 2; ++k) dc.push_back(small_rational(rng));
    dc.push_back(Scalar(1));
    const RatFunc f{Poly(nc), Poly(dc)};
    const RatFunc g = (f * d() + RatFunc(1)) / (d() + RatFunc(2));
    const RatFunc back = (g * (d() + RatFunc(2)) - RatFunc(1)) / d();
    CHECK(back == f);
    CHECK(back.denominator().leading() == Scalar(1));
    CHECK(gcd(back.numerator(), back.denominator()).degree() <= 0);
  }
}

TEST_CASE("random inverses and associativity") {
  std::mt19937 rng(7);
  int inverted = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const Matrix<Scalar> a = random_matrix(rng, n, n);
    if (determinant(a).is_zero()) {
      CHECK_THROWS_AS(mat_inverse(a), SingularMatrix);
      continue;
    }
    const Matrix<Scalar> inv = mat_inverse(a);
    CHECK(a * inv == Matrix<Scalar>::identity(n));
    CHECK(inv * a == Matrix<Scalar>::identity(n));
    ++inverted;
  }
  CHECK(inverted > 50);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix<Scalar> a = random_matrix(rng, 3, 4), b = random_matrix(rng, 4, 2), c = random_matrix(rng, 2, 3);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("SolveResult identities on random rank-deficient systems") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const std::size_t rank = trial % (n + 1);
    const Matrix<Scalar> a = random_rank(rng, n, rank);
    const bool consistent = trial % 2 == 0;
    const Matrix<Scalar> b = consistent ? a * random_matrix(rng, n, 2) : random_matrix(rng, n, 2);
    const auto r = solve_linear(a, b);
    CHECK(certifies(r, a, b));
    if (consistent) CHECK(r.kind != SolveKind::inconsistent);
    CHECK(r.kernel_basis.size() == (r.kind == SolveKind::inconsistent ? 0 : n - row_reduce(a).rank()));
  }
}

TEST_CASE("determinant and projection") {
  CHECK(determinant(P1()) == Scalar(-1));
  CHECK(determinant(I3() - P1()) == Scalar(0));
  const std::vector<Matrix<Scalar>> basis{col({1, 1, 0}), col({0, 0, 1})};
  const Matrix<Scalar> p = project_off(col({3, 1, 5}), basis);
  CHECK(p == col({1, -1, 0}));
}
