#include "doctest.h"

#include "cartanweil/lie_data.hpp"

#include <fstream>

using namespace cw;

namespace {

std::vector<std::vector<std::vector<Rational>>> zero_c(int n) {
  return std::vector<std::vector<std::vector<Rational>>>(
      static_cast<std::size_t>(n),
      std::vector<std::vector<Rational>>(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n))));
}

}  // namespace

TEST_CASE("builtin algebras validate") {
  for (const char* name : {"abelian(1)", "abelian(2)", "abelian:3", "su2", "su3"}) {
    const auto data = builtin_algebra(name);
    const auto report = validate_algebra(data);
    INFO(name);
    CHECK(report.passed());
    CHECK(report.checks.size() == 5);
  }
  CHECK_THROWS_AS(builtin_algebra("so5"), UnknownAlgebra);
  CHECK_THROWS_AS(builtin_algebra("abelian(x)"), UnknownAlgebra);
}

TEST_CASE("abelian(1) has zero structure constants") {
  const auto a = builtin_algebra("abelian(1)");
  CHECK(a.dim() == 1);
  CHECK(a.is_abelian());
}

TEST_CASE("su2 structure constants are the epsilon tensor") {
  const auto su2 = builtin_algebra("su2");
  CHECK(su2.c(0, 1, 2) == 1);
  CHECK(su2.c(1, 2, 0) == 1);
  CHECK(su2.c(2, 0, 1) == 1);
  CHECK(su2.c(0, 2, 1) == -1);
  CHECK(su2.nonzero().size() == 6);
  CHECK(su2.metric_is_identity());
}

TEST_CASE("su3 basis is orthonormal with totally antisymmetric constants") {
  const auto su3 = builtin_algebra("su3");
  CHECK(su3.dim() == 8);
  CHECK(su3.nonzero().size() == 96);
  for (const auto& e : su3.nonzero()) {
    CHECK(su3.c(e.j, e.k, e.i) == e.value);
    CHECK((e.value == make_rational(1, 2) || e.value == make_rational(-1, 2)));
  }
  // Killing form of su3 in this basis: −tr(ad_a ad_b) = 3δ_ab for −2tr normalisation.
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) CHECK(-(su3.ad(a) * su3.ad(b)).trace() == (a == b ? Rational(3) : Rational(0)));
}

TEST_CASE("non-invariant metric is detected") {
  auto c = zero_c(3);
  c[2][0][1] = Rational(1);
  c[2][1][0] = Rational(-1);
  const LieAlgebraData heis("heisenberg", 3, c, RationalMatrix::Identity(3, 3));
  const auto report = validate_algebra(heis);
  CHECK(!report.passed());
  CHECK(report.check("antisymmetry").pass);
  CHECK(report.check("jacobi").pass);
  CHECK(!report.check("metric_invariance").pass);
}

TEST_CASE("broken Jacobi is reported with its indices") {
  auto c = zero_c(3);
  auto set = [&](int i, int j, int k, int v) {
    c[i][j][k] = Rational(v);
    c[i][k][j] = Rational(-v);
  };
  // [ξ3,ξ1] = ξ1, [ξ1,ξ2] = ξ3.
  set(0, 2, 0, 1);
  set(2, 0, 1, 1);
  const LieAlgebraData bad("bad", 3, c, RationalMatrix::Identity(3, 3));
  const auto report = validate_algebra(bad);
  CHECK(!report.check("jacobi").pass);
  CHECK(report.check("jacobi").detail.find("(i,j,k,l)") != std::string::npos);
}

TEST_CASE("shape errors") {
  CHECK_THROWS_AS(LieAlgebraData("x", 2, zero_c(3), RationalMatrix::Identity(2, 2)), DimensionMismatch);
  CHECK_THROWS_AS(LieAlgebraData("x", 3, zero_c(3), RationalMatrix::Identity(2, 2)), DimensionMismatch);
}

TEST_CASE("singular or asymmetric metric fails") {
  RationalMatrix g = RationalMatrix::Identity(2, 2);
  g(1, 1) = 0;
  CHECK(!validate_algebra(LieAlgebraData("x", 2, zero_c(2), g)).check("metric_invertible").pass);
  g(1, 1) = 1;
  g(0, 1) = 1;
  CHECK(!validate_algebra(LieAlgebraData("x", 2, zero_c(2), g)).check("metric_symmetric").pass);
}

TEST_CASE("algebra json round trip and 1-based indices") {
  const auto su2 = builtin_algebra("su2");
  const auto text = algebra_to_json(su2);
  const auto back = parse_algebra_json(text);
  CHECK(back.dim() == 3);
  CHECK(back.c(2, 0, 1) == 1);
  CHECK(back.rotations().size() == 3);
  const auto custom = parse_algebra_json(R"({"name":"h","dim":2,"c":[[1,1,2,"1/2"]],"metric":[[1,0],[0,1]]})");
  CHECK(custom.c(0, 0, 1) == make_rational(1, 2));
  CHECK(custom.c(0, 1, 0) == make_rational(-1, 2));
  CHECK_THROWS_AS(parse_algebra_json(R"({"dim":2,"c":[[3,1,2,1]],"metric":[[1,0],[0,1]]})"), DimensionMismatch);
  CHECK_THROWS_AS(parse_algebra_json(R"({"dim":2,"c":[],"metric":[[1,0]]})"), DimensionMismatch);
  CHECK_THROWS(parse_algebra_json(R"({"dim":2,"c":[[1,1,2,"1/0"]],"metric":[[1,0],[0,1]]})"));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == make_rational(1, 2));
  CHECK(parse_rational(" -7 ") == Rational(-7));
  CHECK(parse_rational("+2/4") == make_rational(1, 2));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("a/2"));
  CHECK_THROWS(parse_rational(""));
  CHECK(to_string(make_rational(-2, 4)) == "-1/2");
}

TEST_CASE("matrix inverse") {
  RationalMatrix m(2, 2);
  m << Rational(2), Rational(1), Rational(1), Rational(1);
  RationalMatrix inv;
  REQUIRE(invert(m, inv));
  CHECK(is_identity(RationalMatrix(m * inv)));
  m(1, 0) = 2;
  CHECK(!invert(m, inv));
}

TEST_CASE("metric polynomial") {
  const auto su2 = builtin_algebra("su2");
  const auto p = metric_polynomial(su2);
  CHECK(p.degree() == 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int idx[] = {i, j};
      CHECK(p.components().value(idx) == (i == j ? 1 : 0));
    }
  const auto q = metric_polynomial(su2, Scale{make_rational(-1, 8), 2});
  CHECK(q.scale().coefficient == make_rational(-1, 8));
  CHECK(q.scale().pi_inv_power == 2);
  CHECK(metric_polynomial(builtin_algebra("abelian(2)")).components().entries().size() == 2);
}

TEST_CASE("sym_power polynomials") {
  const auto su2 = builtin_algebra("su2");
  const auto p2 = sym_power_polynomial(su2, 2);
  CHECK(p2.components().entries() == metric_polynomial(su2).components().entries());
  const auto p4 = sym_power_polynomial(su2, 4);
  const int iiii[] = {0, 0, 0, 0}, iijj[] = {0, 0, 1, 1}, ijij[] = {0, 1, 0, 1}, ijjk[] = {0, 1, 1, 2};
  CHECK(p4.components().value(iiii) == 1);
  CHECK(p4.components().value(iijj) == make_rational(1, 3));
  CHECK(p4.components().value(ijij) == make_rational(1, 3));
  CHECK(p4.components().value(ijjk) == 0);
  const auto a1 = sym_power_polynomial(builtin_algebra("abelian(1)"), 4);
  CHECK(a1.components().value(iiii) == 1);
  CHECK_THROWS_AS(sym_power_polynomial(su2, 3), DegreeMismatch);
}

TEST_CASE("su3 cubic invariant") {
  const auto su3 = builtin_algebra("su3");
  const auto d = su3_cubic_polynomial(su3);
  CHECK(d.degree() == 3);
  CHECK(d.components().entries().size() == 34);
  CHECK_THROWS_AS(su3_cubic_polynomial(builtin_algebra("su2")), UnsupportedAlgebra);
  const auto d5 = symmetrized_product(su3, metric_polynomial(su3), d);
  CHECK(d5.degree() == 5);
  CHECK(!d5.components().is_zero());
}

TEST_CASE("non-invariant tensors are rejected") {
  const auto su2 = builtin_algebra("su2");
  SymmetricTensor t(3, 2);
  t.set({0, 0}, Rational(1));
  CHECK_THROWS_AS(InvariantPolynomial(su2, t), NotInvariant);
  const auto su3 = builtin_algebra("su3");
  CHECK_THROWS_AS(InvariantPolynomial(su3, random_symmetric_tensor(8, 3, 5)), NotInvariant);
  CHECK(find_invariance_violation(su3, random_symmetric_tensor(8, 3, 5)).has_value());
  // Every symmetric tensor is invariant on an abelian algebra.
  CHECK_NOTHROW(InvariantPolynomial(builtin_algebra("abelian(2)"), random_symmetric_tensor(2, 3, 1)));
}

TEST_CASE("property: constructed polynomials pass the exhaustive invariance check") {
  const auto su2 = builtin_algebra("su2");
  const auto su3 = builtin_algebra("su3");
  CHECK(!find_invariance_violation(su3, metric_polynomial(su3).components()));
  CHECK(!find_invariance_violation(su3, su3_cubic_polynomial(su3).components()));
  CHECK(!find_invariance_violation(su3, sym_power_polynomial(su3, 4).components()));
  CHECK(!find_invariance_violation(su2, sym_power_polynomial(su2, 6).components()));
  // Randomized beyond the exhaustive limit.
  CHECK(!find_invariance_violation(su3, sym_power_polynomial(su3, 4).components(), 1000, 9));
  const auto d5 = symmetrized_product(su3, metric_polynomial(su3), su3_cubic_polynomial(su3));
  CHECK(!find_invariance_violation(su3, d5.components(), 20000, 3));
}
