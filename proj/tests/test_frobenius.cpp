#include <doctest.h>

#include "kzrat/frobenius.hpp"
#include "kzrat/linalg.hpp"
#include "test_support.hpp"

using namespace kzrat;
using namespace kzrat::testing;

namespace {

const KZSystem& symbolic_s3() {
  static const KZSystem sys = build_kz_s3(symbolic_point, symbolic_point);
  return sys;
}

SeriesSolution<RatFunc> symbolic_series(Convention conv, std::size_t order) {
  const auto exp = local_expansion<RatFunc>(symbolic_s3(), 0, conv, order);
  return compute_series(exp, Scalar(2), -2, order, LeadingPolicy::paper_projector);
}

Matrix<RatFunc> reflect(const Matrix<RatFunc>& m) {
  return m.map([](const RatFunc& f) { return f.reflected(); });
}

}  // namespace

TEST_CASE("characteristic polynomial and rational roots") {
  const Poly x = Poly::variable();
  CHECK(characteristic_polynomial(Scalar(2) * P1()) == pow(x - Poly(2), 2) * (x + Poly(2)));
  Poly rest;
  const auto roots = rational_roots((x * x - Poly(2)) * (x - Poly(Scalar(1) / Scalar(3))), &rest);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].value == Scalar(1) / Scalar(3));
  CHECK(rest == x * x - Poly(2));
}

TEST_CASE("indicial_data examples") {
  SUBCASE("coupling 2, P1") {
    const IndicialData d = indicial_data(P1(), Scalar(2));
    REQUIRE(d.eigenvalues.size() == 2);
    CHECK(d.eigenvalues[0].value == Scalar(-2));
    CHECK(d.eigenvalues[0].multiplicity == 1);
    CHECK(d.eigenvalues[1].value == Scalar(2));
    CHECK(d.eigenvalues[1].multiplicity == 2);
    CHECK(d.resonant_levels == std::vector<long>{-2, 2});
    CHECK(d.residual_factor == Poly(1));
    CHECK(default_exponent(d) == -2);
  }
  SUBCASE("coupling 2, identity") {
    const IndicialData d = indicial_data(I3(), Scalar(2));
    REQUIRE(d.eigenvalues.size() == 1);
    CHECK(d.eigenvalues[0].value == Scalar(2));
    CHECK(d.eigenvalues[0].multiplicity == 3);
    CHECK(d.resonant_levels == std::vector<long>{2});
  }
  SUBCASE("coupling 1, P1") {
    const IndicialData d = indicial_data(P1(), Scalar(1));
    REQUIRE(d.eigenvalues.size() == 2);
    CHECK(d.eigenvalues[0].value == Scalar(-1));
    CHECK(d.eigenvalues[1].value == Scalar(1));
    CHECK(d.eigenvalues[1].multiplicity == 2);
    CHECK(d.resonant_levels == std::vector<long>{-1, 1});
  }
  SUBCASE("coupling 2/3 has no integer eigenvalue") {
    const IndicialData d = indicial_data(P1(), Scalar(2) / Scalar(3));
    CHECK(d.resonant_levels.empty());
    CHECK_THROWS_AS(default_exponent(d), NoIntegerExponent);
  }
  SUBCASE("irrational spectrum stays in the residual factor") {
    const IndicialData d = indicial_data(ints({{0, 2}, {1, 0}}), Scalar(1));
    CHECK(d.eigenvalues.empty());
    CHECK(d.residual_factor == Poly::variable() * Poly::variable() - Poly(2));
  }
}

TEST_CASE("leading_coefficient examples") {
  CHECK(leading_coefficient(P1(), Scalar(2), -2, LeadingPolicy::paper_projector) ==
        ints({{1, -1, 0}, {-1, 1, 0}, {0, 0, 0}}));
  CHECK(leading_coefficient(P1(), Scalar(2), -2, LeadingPolicy::kernel_columns) ==
        ints({{1, 0, 0}, {-1, 0, 0}, {0, 0, 0}}));
  CHECK_THROWS_AS(leading_coefficient(P1(), Scalar(2), 0, LeadingPolicy::kernel_columns), NotAnEigenvalue);
  CHECK_THROWS_AS(leading_coefficient(P1(), Scalar(2), 2, LeadingPolicy::paper_projector), InvalidArgument);
  CHECK(default_leading_policy(P1(), Scalar(2), -2) == LeadingPolicy::paper_projector);
  CHECK(default_leading_policy(P1(), Scalar(2), 2) == LeadingPolicy::kernel_columns);
  const Matrix<Scalar> upper = leading_coefficient(P1(), Scalar(2), 2, LeadingPolicy::kernel_columns);
  CHECK(!upper.is_zero());
  CHECK((Scalar(2) * I3() - Scalar(2) * P1()) * upper == Matrix<Scalar>(3, 3));
}

TEST_CASE("compute_series reproduces the reference coefficients") {
  const auto s = symbolic_series(Convention::literal_paper, 3);
  CHECK(s.leading_exponent == -2);
  CHECK(s.last_power() == 1);
  CHECK(s.at(-2) == embed<RatFunc>(ints({{1, -1, 0}, {-1, 1, 0}, {0, 0, 0}})));
  CHECK(s.at(-1) == scaled(ints({{-12, 12, 0}, {6, -6, 0}, {6, -6, 0}}), -9, 1));
  CHECK(s.at(0) == scaled(ints({{3, -3, 0}, {-6, 6, 0}, {3, -3, 0}}), -9, 2));
  CHECK(s.at(1) == scaled(ints({{6, -6, 0}, {6, -6, 0}, {-12, 12, 0}}), -9, 3));
  CHECK(s.resonances.empty());
}

TEST_CASE("derived-taylor series flips odd powers") {
  const auto lit = symbolic_series(Convention::literal_paper, 3);
  const auto der = symbolic_series(Convention::derived_taylor, 3);
  for (long p = -1; p <= 1; ++p) {
    const Matrix<RatFunc> sign = p % 2 == 0 ? lit.at(p) : RatFunc(-1) * lit.at(p);
    CHECK(der.at(p) == sign);
  }
}

TEST_CASE("single-point series terminates") {
  const KZSystem sys = make_system({Scalar(0)}, {P1()}, Scalar(2));
  const auto exp = local_expansion<Scalar>(sys, 0, Convention::derived_taylor, 5);
  const auto s = compute_series(exp, Scalar(2), -2, 5, LeadingPolicy::paper_projector);
  REQUIRE(s.coeffs.size() == 6);
  CHECK(s.at(-2) == I3() - P1());
  for (long p = -1; p <= 3; ++p) CHECK(s.at(p).is_zero());
  // level 2 is resonant with a zero right side
  REQUIRE(s.resonances.size() == 1);
  CHECK(s.resonances[0].level == 2);
  CHECK(s.resonances[0].rhs.is_zero());
}

TEST_CASE("resonant level 2 is consistent with the +1 eigenspace as kernel") {
  for (Convention conv : {Convention::literal_paper, Convention::derived_taylor}) {
    const auto s = symbolic_series(conv, 6);
    REQUIRE(s.resonances.size() == 1);
    const auto& r = s.resonances[0];
    CHECK(r.level == 2);
    CHECK(r.kind == SolveKind::affine);
    CHECK(!r.certificate);
    REQUIRE(r.kernel.size() == 2);
    for (const auto& v : r.kernel) CHECK(embed<RatFunc>(P1()) * v == v);
    // level 2 right side: [[1,-1,0],[-1,1,0],[0,0,0]] / d^4
    CHECK(r.rhs == scaled(ints({{1, -1, 0}, {-1, 1, 0}, {0, 0, 0}}), 1, 4));
    // the chosen particular solution is orthogonal to the kernel
    for (const auto& v : r.kernel) CHECK((v.transpose() * s.at(2)).is_zero());
  }
}

TEST_CASE("resonance obstruction is reported with a certificate") {
  const KZSystem sys = make_system({Scalar(0), Scalar(1)}, {ints({{-1, 0}, {0, 0}}), ints({{0, 0}, {1, 0}})}, Scalar(1));
  const auto exp = local_expansion<Scalar>(sys, 0, Convention::derived_taylor, 3);
  try {
    compute_series(exp, Scalar(1), -1, 3, LeadingPolicy::kernel_columns);
    FAIL("expected an obstruction");
  } catch (const ResonanceObstruction& e) {
    CHECK(e.level() == 0);
    CHECK(!e.certificate().empty());
  }
}

TEST_CASE("verify_recursion") {
  const auto exp = local_expansion<RatFunc>(symbolic_s3(), 0, Convention::literal_paper, 6);
  const auto s = compute_series(exp, Scalar(2), -2, 6, LeadingPolicy::paper_projector);
  const auto report = verify_recursion(s, exp, Scalar(2));
  CHECK(report.all_zero());
  CHECK(report.levels.size() == 7);
  bool saw_level2 = false;
  for (std::size_t i = 0; i < report.levels.size(); ++i) {
    if (report.levels[i].level != 2) continue;
    saw_level2 = true;
    CHECK(report.levels[i].resonant);
    REQUIRE(report.resonant_rhs[i]);
    CHECK(*report.resonant_rhs[i] == scaled(ints({{1, -1, 0}, {-1, 1, 0}, {0, 0, 0}}), 1, 4));
  }
  CHECK(saw_level2);

  for (long tampered = -2; tampered <= 4; ++tampered) {
    auto bad = s;
    auto& m = bad.coeffs[static_cast<std::size_t>(tampered + 2)];
    m(0, 0) = m(0, 0) + RatFunc(1);
    const auto r = verify_recursion(bad, exp, Scalar(2));
    REQUIRE(r.first_failure());
    CHECK(*r.first_failure() == tampered);
  }
  // at the resonant level a change along the step kernel is invisible there
  // and first shows up one level later
  auto along_kernel = s;
  along_kernel.coeffs[4](2, 2) = along_kernel.coeffs[4](2, 2) + RatFunc(1);
  const auto rk = verify_recursion(along_kernel, exp, Scalar(2));
  REQUIRE(rk.first_failure());
  CHECK(*rk.first_failure() == 3);
  // a change in the last coefficient shows up at that level only
  auto last = s;
  last.coeffs.back()(0, 2) = last.coeffs.back()(0, 2) + RatFunc(1);
  const auto r = verify_recursion(last, exp, Scalar(2));
  for (const auto& l : r.levels) CHECK(l.residual_zero == (l.level != 4));
}

TEST_CASE("series coefficients are homogeneous in d") {
  const auto s = symbolic_series(Convention::derived_taylor, 22);
  for (long p = -2; p <= 20; ++p) {
    for (const RatFunc& e : s.at(p).data()) {
      if (e.is_zero()) continue;
      const auto m = e.as_monomial();
      REQUIRE(m);
      CHECK(m->exponent == -(p + 2));
    }
  }
}

TEST_CASE("convention duality up to p = 10") {
  const auto lit = symbolic_series(Convention::literal_paper, 12);
  const auto der = symbolic_series(Convention::derived_taylor, 12);
  for (long p = -2; p <= 10; ++p) {
    const RatFunc sign = p % 2 == 0 ? RatFunc(1) : RatFunc(-1);
    CHECK(lit.at(p) == sign * der.at(p));
    CHECK(lit.at(p) == reflect(der.at(p)));
  }
}

TEST_CASE("numeric series agrees with the symbolic one at d = 1") {
  const KZSystem num = build_kz_s3(Scalar(0), Scalar(1));
  const auto exp = local_expansion<Scalar>(num, 0, Convention::derived_taylor, 12);
  const auto s = compute_series(exp, Scalar(2), -2, 12, LeadingPolicy::paper_projector);
  const auto sym = symbolic_series(Convention::derived_taylor, 12);
  for (long p = -2; p <= 10; ++p)
    CHECK(s.at(p) == sym.at(p).map([](const RatFunc& f) { return f.evaluate(Scalar(1)); }));
  CHECK(verify_recursion(s, exp, Scalar(2)).all_zero());
  CHECK(s.at(3) == Matrix<Scalar>{{Scalar(4) / 5, Scalar(-4) / 5, 0}, {Scalar(1) / 5, Scalar(-1) / 5, 0}, {-1, 1, 0}});
}

TEST_CASE("seeding from the upper exponent and from the second point") {
  const KZSystem num = build_kz_s3(Scalar(0), Scalar(1));
  const auto exp2 = local_expansion<Scalar>(num, 1, Convention::derived_taylor, 8);
  const auto s2 = compute_series(exp2, Scalar(2), -2, 8, LeadingPolicy::paper_projector);
  CHECK(s2.at(-2) == I3() - P2());
  CHECK(verify_recursion(s2, exp2, Scalar(2)).all_zero());

  const auto exp = local_expansion<Scalar>(num, 0, Convention::derived_taylor, 6);
  const auto up = compute_series(exp, Scalar(2), 2, 6, LeadingPolicy::kernel_columns);
  CHECK(!up.at(2).is_zero());
  CHECK(verify_recursion(up, exp, Scalar(2)).all_zero());
}
