#include <doctest.h>

#include "kzrat/kz_model.hpp"
#include "test_support.hpp"

using namespace kzrat;
using namespace kzrat::testing;

TEST_CASE("transposition_matrix") {
  CHECK(transposition_matrix(3, 1, 2) == P1());
  CHECK(transposition_matrix(3, 1, 3) == P2());
  CHECK(transposition_matrix(2, 1, 2) == ints({{0, 1}, {1, 0}}));
  CHECK_THROWS_AS(transposition_matrix(3, 2, 2), InvalidArgument);
  CHECK_THROWS_AS(transposition_matrix(3, 1, 4), InvalidArgument);
}

TEST_CASE("transpositions are symmetric involutions") {
  for (std::size_t n = 2; n <= 8; ++n) {
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        const Matrix<Scalar> t = transposition_matrix(n, i, j);
        CHECK(t * t == Matrix<Scalar>::identity(n));
        CHECK(t.transpose() == t);
      }
    }
  }
}

TEST_CASE("build_kz_s3") {
  const KZSystem sys = build_kz_s3(Scalar(0), Scalar(1), Scalar(2));
  CHECK(sys.n == 3);
  REQUIRE(sys.points.size() == 2);
  CHECK(*sys.points[0] == Scalar(0));
  CHECK(*sys.points[1] == Scalar(1));
  CHECK(sys.residues[0] == P1());
  CHECK(sys.residues[1] == P2());
  CHECK(sys.coupling == Scalar(2));
  CHECK(!sys.is_symbolic());

  const KZSystem sym = build_kz_s3(symbolic_point, symbolic_point);
  CHECK(sym.is_symbolic());
  CHECK(sym.residues[0] == P1());
  CHECK(sym.residues[1] == P2());

  CHECK_THROWS_AS(build_kz_s3(Scalar(0), Scalar(0)), InvalidArgument);
  CHECK_THROWS_AS(build_kz_s3(Scalar(0), symbolic_point), InvalidArgument);
}

TEST_CASE("make_system validation") {
  CHECK_THROWS_AS(make_system({Scalar(0)}, {P1(), P2()}, Scalar(2)), DimensionMismatch);
  CHECK_THROWS_AS(make_system({Scalar(0), Scalar(1)}, {P1(), ints({{0, 1}, {1, 0}})}, Scalar(2)), DimensionMismatch);
  CHECK_THROWS_AS(make_system({symbolic_point}, {P1()}, Scalar(2)), InvalidArgument);
  const KZSystem three = make_system({Scalar(0), Scalar(1), Scalar(-1)}, {P1(), P2(), I3()}, Scalar(1));
  CHECK(three.points.size() == 3);
}

TEST_CASE("system_matrix_at") {
  const KZSystem sys = build_kz_s3(Scalar(0), Scalar(1), Scalar(2));
  const Scalar half = Scalar(1) / Scalar(2);
  CHECK(system_matrix_at(sys, Scalar(2)) == Matrix<Scalar>{{0, half, 1}, {half, 1, 0}, {1, 0, half}});
  CHECK_THROWS_AS(system_matrix_at(sys, Scalar(0)), InvalidArgument);
  // 2*P1 - 2*P2; the (3,3) entry is 2 since P2 has a zero there
  CHECK(system_matrix_at(sys, half) == ints({{0, 2, -2}, {2, -2, 0}, {-2, 0, 2}}));
  CHECK_THROWS_AS(system_matrix_at(build_kz_s3(symbolic_point, symbolic_point), Scalar(2)), InvalidArgument);
}

TEST_CASE("local_expansion examples") {
  const KZSystem sym = build_kz_s3(symbolic_point, symbolic_point);
  const auto lit = local_expansion<RatFunc>(sym, 0, Convention::literal_paper, 3);
  const auto der = local_expansion<RatFunc>(sym, 0, Convention::derived_taylor, 3);
  CHECK(lit.a_minus1 == P1());
  CHECK(der.a_minus1 == P1());
  REQUIRE(lit.regular_coeffs.size() == 4);
  CHECK(lit.regular_coeffs[2] == scaled(P2(), 1, 3));
  CHECK(der.regular_coeffs[0] == scaled(P2(), -1, 1));
  CHECK_THROWS_AS(local_expansion<Scalar>(sym, 0, Convention::derived_taylor, 3), InvalidArgument);
  const KZSystem num = build_kz_s3(Scalar(0), Scalar(1));
  CHECK_THROWS_AS(local_expansion<Scalar>(num, 0, Convention::literal_paper, 3), InvalidArgument);
  CHECK_THROWS_AS(local_expansion<Scalar>(num, 2, Convention::derived_taylor, 3), InvalidArgument);
}

TEST_CASE("derived expansion matches brute-force series reciprocal") {
  const std::size_t order = 15;
  SUBCASE("numeric points, both centers") {
    const Scalar z1 = Scalar(-2) / Scalar(3), z2 = Scalar(5) / Scalar(4);
    const KZSystem sys = build_kz_s3(z1, z2);
    for (std::size_t center = 0; center < 2; ++center) {
      const Scalar delta = center == 0 ? z2 - z1 : z1 - z2;
      const Matrix<Scalar>& other = center == 0 ? P2() : P1();
      const auto exp = local_expansion<Scalar>(sys, center, Convention::derived_taylor, order);
      const auto c = reciprocal_linear(delta, order);
      CHECK(exp.a_minus1 == (center == 0 ? P1() : P2()));
      for (std::size_t r = 0; r <= order; ++r) CHECK(exp.regular_coeffs[r] == c[r] * other);
    }
  }
  SUBCASE("symbolic, sampled at several values of d") {
    const KZSystem sym = build_kz_s3(symbolic_point, symbolic_point);
    const auto exp = local_expansion<RatFunc>(sym, 0, Convention::derived_taylor, order);
    for (long num : {1, -1, 3, 7}) {
      const Scalar dv = Scalar(num) / Scalar(2);
      const auto c = reciprocal_linear(dv, order);
      for (std::size_t r = 0; r <= order; ++r)
        CHECK(exp.regular_coeffs[r].map([&](const RatFunc& f) { return f.evaluate(dv); }) == c[r] * P2());
    }
  }
}

TEST_CASE("expansion conventions differ by the sign of d and are homogeneous") {
  const KZSystem sym = build_kz_s3(symbolic_point, symbolic_point);
  const std::size_t order = 12;
  const auto lit = local_expansion<RatFunc>(sym, 0, Convention::literal_paper, order);
  const auto der = local_expansion<RatFunc>(sym, 0, Convention::derived_taylor, order);
  for (std::size_t r = 0; r <= order; ++r) {
    CHECK(lit.regular_coeffs[r] == der.regular_coeffs[r].map([](const RatFunc& f) { return f.reflected(); }));
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        const RatFunc& e = der.regular_coeffs[r](i, j);
        if (e.is_zero()) continue;
        const auto m = e.as_monomial();
        REQUIRE(m);
        CHECK(m->exponent == -static_cast<long>(r + 1));
      }
    }
  }
}

TEST_CASE("convention parsing") {
  CHECK(parse_convention("derived-taylor") == Convention::derived_taylor);
  CHECK(parse_convention("literal-paper") == Convention::literal_paper);
  CHECK(to_string(Convention::literal_paper) == "literal-paper");
  CHECK_THROWS_AS(parse_convention("taylor"), InvalidArgument);
}
