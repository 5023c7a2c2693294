#include "doctest.h"
#include "support.hpp"

#include "cartanweil/transgression.hpp"

using namespace cw;
using cw::testing::G;

namespace {

LieElement Theta(int n) { return lie_generators(Kind::Theta, n); }
LieElement Hat(int n) { return lie_generators(Kind::HatTheta, n); }
LieElement Chi(int n) { return lie_generators(Kind::Chi, n); }

/// Invariant polynomials of degree 1..5 used throughout.
std::vector<InvariantPolynomial> polynomials(const LieAlgebraData& data) {
  std::vector<InvariantPolynomial> out;
  out.push_back(zero_polynomial(data, 1));
  out.push_back(metric_polynomial(data));
  if (data.dim() == 8) {
    const auto d = su3_cubic_polynomial(data);
    out.push_back(d);
    out.push_back(sym_power_polynomial(data, 4));
    out.push_back(symmetrized_product(data, metric_polynomial(data), d));
  } else {
    out.push_back(zero_polynomial(data, 3));
    out.push_back(sym_power_polynomial(data, 4));
    out.push_back(zero_polynomial(data, 5));
  }
  return out;
}

GradedElement chi_to_zero(const GradedElement& x) {
  return substitute(x, [](const Generator& y) -> std::optional<GradedElement> {
    if (y.kind == Kind::Chi) return GradedElement();
    return std::nullopt;
  });
}

}  // namespace

TEST_CASE("transgression coefficients") {
  CHECK(transgression_coefficient(1) == 1);
  CHECK(transgression_coefficient(2) == make_rational(-1, 6));
  CHECK(transgression_coefficient(3) == make_rational(1, 40));
  CHECK(transgression_coefficient(4) == make_rational(-1, 280));
}

TEST_CASE("degree one transgression is p(Theta)") {
  const auto ab = builtin_algebra("abelian(2)");
  SymmetricTensor t(2, 1);
  t.set({0}, Rational(3));
  t.set({1}, make_rational(-1, 2));
  const InvariantPolynomial p(ab, t);
  const auto expected = Rational(3) * G(gen::Theta(0)) - make_rational(1, 2) * G(gen::Theta(1));
  CHECK(transgress_integral(ab, p).form.element == expected);
  CHECK(transgress_closed(ab, p).form.element == expected);
}

TEST_CASE("su2 metric transgression") {
  const auto su2 = builtin_algebra("su2");
  const auto tau = transgress_integral(su2, metric_polynomial(su2));
  CHECK(tau.form.element == make_rational(-1, 6) * pairing(su2, Theta(3), bracket(su2, Theta(3), Theta(3))));
  CHECK(tau.form.element == -(G(gen::Theta(0)) * G(gen::Theta(1)) * G(gen::Theta(2))));
  CHECK(tau.method == TransgressionMethod::integral);
  CHECK(!tau.equivariant);
  CHECK(check_closed(su2, tau.form.element));
}

TEST_CASE("su3 cubic transgression has coefficient 1/40") {
  const auto su3 = builtin_algebra("su3");
  const auto d = su3_cubic_polynomial(su3);
  const auto expected = make_rational(1, 40) * first_slot_form(d, Theta(8), bracket(su3, Theta(8), Theta(8)));
  CHECK(!expected.is_zero());
  CHECK(transgress_integral(su3, d).form.element == expected);
  CHECK(transgress_closed(su3, d).form.element == expected);
}

TEST_CASE("integral and closed formula agree for k = 1..5") {
  for (const char* name : {"su2", "su3"}) {
    const auto data = builtin_algebra(name);
    for (const auto& p : polynomials(data)) {
      INFO(name << " k=" << p.degree());
      const auto a = transgress_integral(data, p).form.element;
      const auto b = transgress_closed(data, p).form.element;
      CHECK(a == b);
      CHECK(check_closed(data, a));
    }
  }
}

TEST_CASE("tensor-level agreement for non-invariant tensors") {
  const auto su2 = builtin_algebra("su2");
  for (int k = 1; k <= 4; ++k) {
    const auto t = random_symmetric_tensor(3, k, static_cast<std::uint64_t>(k));
    CHECK(transgression_integral(su2, t) == transgression_closed(su2, t));
    CHECK(equivariant_transgression_integral(su2, t) == equivariant_transgression_closed(su2, t));
  }
  const auto su3 = builtin_algebra("su3");
  const auto t3 = random_symmetric_tensor(8, 3, 11);
  CHECK(transgression_integral(su3, t3) == transgression_closed(su3, t3));
}

TEST_CASE("equivariant transgression reduces to the ordinary one at chi = 0") {
  const auto su2 = builtin_algebra("su2");
  for (const auto& p : polynomials(su2)) {
    if (p.degree() > 4) continue;
    INFO("k=" << p.degree());
    const auto tg = equivariant_transgress(su2, p).form.element;
    CHECK(chi_to_zero(tg) == transgress_integral(su2, p).form.element);
    CHECK(tg == equivariant_transgress(su2, p, TransgressionMethod::closed_formula).form.element);
  }
}

TEST_CASE("equivariant transgression of the metric") {
  const auto su2 = builtin_algebra("su2");
  const int n = 3;
  const auto tg = equivariant_transgress(su2, metric_polynomial(su2));
  const auto cubic = pairing(su2, Theta(n), bracket(su2, Theta(n), Theta(n)));
  CHECK(tg.form.element == make_rational(-1, 6) * cubic + pairing(su2, Chi(n), Theta(n)) +
                               pairing(su2, Theta(n), symbolic_matrix_apply(Kind::Abar, Chi(n))));
  const auto hat = rewrite_adjoint_pairings(su2, tg.form.element);
  REQUIRE(hat);
  CHECK(*hat == make_rational(-1, 6) * cubic + pairing(su2, Chi(n), Theta(n)) + pairing(su2, Chi(n), Hat(n)));
  CHECK(check_equivariantly_closed(su2, tg.form.element).equal);
  CHECK(check_invariant(su2, tg.form.element).equal);
}

TEST_CASE("normalized metric gives the universal string form") {
  const auto su2 = builtin_algebra("su2");
  const int n = 3;
  const auto p = metric_polynomial(su2, Scale{make_rational(-1, 8), 2});
  const auto tg = equivariant_transgress(su2, p).form.element;
  const auto pi2 = G(gen::pi_inv) * G(gen::pi_inv);
  const auto hat = rewrite_adjoint_pairings(su2, tg);
  REQUIRE(hat);
  const auto cubic = pairing(su2, Theta(n), bracket(su2, Theta(n), Theta(n)));
  const auto expected =
      make_rational(1, 8) * pi2 * (make_rational(1, 6) * cubic - pairing(su2, Chi(n), Theta(n) + Hat(n)));
  CHECK(*hat == expected);
  const auto reference = make_rational(1, 8) * pi2 *
                     (make_rational(1, 6) * pairing(su2, bracket(su2, Hat(n), Hat(n)), Hat(n)) -
                      pairing(su2, Chi(n), Theta(n) + Hat(n)));
  CHECK(equality_oracle(su2, tg, reference).equal);
  CHECK(!equality_oracle(su2, tg, -reference).equal);
}

TEST_CASE("closedness negative control") {
  const auto su2 = builtin_algebra("su2");
  const auto v = check_equivariantly_closed(su2, pairing(su2, Chi(3), Theta(3)), {8, 5});
  CHECK(!v.equal);
  REQUIRE(v.witness);
  CHECK(v.witness->seed == 5);
  CHECK(!check_closed(su2, G(gen::Theta(0))));
}

TEST_CASE("hat presentation leaves incomplete sums alone") {
  const auto su2 = builtin_algebra("su2");
  const auto x = G(gen::Theta(0)) * G(gen::Abar(0, 1)) * G(gen::chi(1));
  const auto r = rewrite_adjoint_pairings(su2, x);
  REQUIRE(r);
  CHECK(*r == x);
  RationalMatrix g = RationalMatrix::Identity(3, 3);
  g(0, 0) = 2;
  const LieAlgebraData scaled("scaled", 3, std::vector<std::vector<std::vector<Rational>>>(
                                               3, std::vector<std::vector<Rational>>(3, std::vector<Rational>(3))),
                              g);
  CHECK(!rewrite_adjoint_pairings(scaled, x));
}

TEST_CASE("property: equivariant closedness and invariance for k <= 3") {
  for (const char* name : {"su2", "su3"}) {
    const auto data = builtin_algebra(name);
    for (const auto& p : polynomials(data)) {
      if (p.degree() > 3) continue;
      INFO(name << " k=" << p.degree());
      const auto tg = equivariant_transgress(data, p).form.element;
      CHECK(check_equivariantly_closed(data, tg).equal);
      CHECK(check_invariant(data, tg).equal);
    }
  }
}
