#include "doctest.h"
#include "support.hpp"

using namespace cw;
using cw::testing::G;

TEST_CASE("normalize reorders odd words with signs") {
  const auto x = GradedElement::normalize({{Rational(1), {gen::Theta(1), gen::Theta(0)}}});
  CHECK(x == -(G(gen::Theta(0)) * G(gen::Theta(1))));
  CHECK(GradedElement::normalize({{Rational(1), {gen::Theta(0), gen::Theta(0)}}}).is_zero());
  const auto y = GradedElement::normalize({{Rational(1), {gen::mu(0), gen::theta(0)}}});
  CHECK(y == G(gen::theta(0)) * G(gen::mu(0)));
  CHECK(y.terms().front().coeff == 1);
}

TEST_CASE("normalize cancels and sorts even factors") {
  const auto x = GradedElement::normalize({{Rational(2), {gen::chi(1), gen::chi(0)}},
                                           {Rational(-2), {gen::chi(0), gen::chi(1)}},
                                           {Rational(1), {gen::Theta(2), gen::Theta(1), gen::Theta(0)}}});
  CHECK(x.size() == 1);
  CHECK(x.terms().front().coeff == -1);
}

TEST_CASE("multiply examples") {
  const auto T1 = G(gen::Theta(0)), T2 = G(gen::Theta(1));
  CHECK((T1 + T2) * (T1 - T2) == Rational(-2) * (T1 * T2));
  const auto th1 = G(gen::theta(0)), th2 = G(gen::theta(1)), th3 = G(gen::theta(2)), mu1 = G(gen::mu(0));
  CHECK(th1 * (mu1 - th2 * th3) == th1 * mu1 - th1 * th2 * th3);
  const auto chi1 = G(gen::chi(0));
  CHECK((chi1 * T1 - T1 * chi1).is_zero());
}

TEST_CASE("odd_product_sign counts inversions") {
  CHECK(odd_product_sign(0b10, 0b01) == -1);
  CHECK(odd_product_sign(0b01, 0b10) == 1);
  CHECK(odd_product_sign(0b110, 0b001) == 1);
  CHECK(odd_product_sign(0b1, 0b1) == 0);
}

TEST_CASE("apply_derivation follows the graded Leibniz rule") {
  Derivation D;
  D.parity = Parity::Odd;
  D.name = "D";
  D.action = [](const Generator& g) -> std::optional<GradedElement> {
    if (g == gen::Theta(0)) return G(gen::mu(0));
    if (g == gen::Theta(1)) return G(gen::chi(0));
    return std::nullopt;
  };
  const auto x = G(gen::Theta(0)) * G(gen::Theta(1));
  CHECK(apply_derivation(D, x) == G(gen::mu(0)) * G(gen::Theta(1)) - G(gen::Theta(0)) * G(gen::chi(0)));
  CHECK_THROWS_AS(apply_derivation(D, G(gen::Theta(2))), MissingAction);

  Derivation E;
  E.parity = Parity::Even;
  E.name = "E";
  E.action = [](const Generator&) -> std::optional<GradedElement> { return G(gen::alpha); };
  CHECK(apply_derivation(E, GradedElement(Rational(7))).is_zero());
}

TEST_CASE("missing action names the generator") {
  Derivation D;
  D.name = "D";
  D.action = [](const Generator&) -> std::optional<GradedElement> { return std::nullopt; };
  try {
    apply_derivation(D, G(gen::chi(2)));
    FAIL("expected MissingAction");
  } catch (const MissingAction& e) {
    CHECK(std::string(e.what()).find("chi_3") != std::string::npos);
  }
}

TEST_CASE("integrate_parameter examples") {
  CHECK(integrate_parameter(GradedElement(1), gen::alpha, Rational(0), Rational(1)) == GradedElement(1));
  const auto a = G(gen::alpha);
  CHECK(integrate_parameter(a * a - a, gen::alpha, Rational(0), Rational(1)) == GradedElement(make_rational(-1, 6)));
  const auto t = G(gen::t);
  const auto form = (t * t - t) * G(gen::Theta(0)) * G(gen::Theta(1));
  CHECK(integrate_parameter(form, gen::t, Rational(0), Rational(1)) ==
        make_rational(-1, 6) * (G(gen::Theta(0)) * G(gen::Theta(1))));
  CHECK(integrate_parameter(t, gen::t, Rational(1), Rational(0)) == GradedElement(make_rational(-1, 2)));
  CHECK_THROWS(integrate_parameter(t, gen::Theta(0), Rational(0), Rational(1)));
}

TEST_CASE("evaluate examples") {
  const auto a = G(gen::alpha);
  CHECK(evaluate_scalar(a * a - a, {{gen::alpha, make_rational(1, 2)}}) == make_rational(-1, 4));
  const auto x = G(gen::A(0, 0)) * G(gen::Theta(0));
  const auto table = evaluate(x, {{gen::A(0, 0), make_rational(3, 5)}}, OddPolicy::coefficient_extraction);
  REQUIRE(table.size() == 1);
  CHECK(odd_word_name(table.begin()->first) == "Theta_1");
  CHECK(table.begin()->second == make_rational(3, 5));
  const auto z = G(gen::chi(0)) * G(gen::A(0, 0)) - G(gen::chi(0));
  CHECK(evaluate_scalar(z, {{gen::chi(0), Rational(5)}, {gen::A(0, 0), Rational(1)}}) == 0);
  CHECK_THROWS_AS(evaluate_scalar(z, {{gen::chi(0), Rational(5)}}), UnassignedGenerator);
  CHECK_THROWS_AS(evaluate(x, {{gen::A(0, 0), Rational(1)}}, OddPolicy::reject), OddGeneratorError);
}

TEST_CASE("right_coefficient moves the generator to the right") {
  const auto x = G(gen::dt) * G(gen::Theta(0)) + G(gen::Theta(1));
  CHECK(right_coefficient(x, gen::dt) == -G(gen::Theta(0)));
  CHECK(without_odd(x, gen::dt) == G(gen::Theta(1)));
  const auto y = G(gen::Theta(0)) * G(gen::Theta(1)) * G(gen::Theta(2));
  CHECK(right_coefficient(y, gen::Theta(1)) == -(G(gen::Theta(0)) * G(gen::Theta(2))));
}

TEST_CASE("substitute is an algebra homomorphism") {
  const auto x = G(gen::mu(0)) * G(gen::theta(1)) * G(gen::theta(0));
  const auto y = substitute(x, gen::mu(0), G(gen::chi(0)));
  CHECK(y == G(gen::chi(0)) * G(gen::theta(1)) * G(gen::theta(0)));
  const auto z = substitute(x, gen::theta(0), G(gen::Theta(0)) + G(gen::Theta(1)));
  CHECK(z == G(gen::mu(0)) * G(gen::theta(1)) * (G(gen::Theta(0)) + G(gen::Theta(1))));
  CHECK_THROWS(substitute(x, gen::theta(0), G(gen::chi(0))));
}

TEST_CASE("degree decomposition") {
  const auto x = G(gen::mu(0)) + G(gen::Theta(0)) + G(gen::chi(0)) * G(gen::Theta(1)) + GradedElement(3);
  const auto parts = degree_decomposition(x);
  REQUIRE(parts.size() == 4);
  CHECK(parts.at(0) == GradedElement(3));
  CHECK(parts.at(2) == G(gen::mu(0)));
  CHECK(!homogeneous_degree(x));
  CHECK(homogeneous_degree(G(gen::chi(0)) * G(gen::Theta(1))) == 3);
}

TEST_CASE("generator names round-trip") {
  for (const auto& g : {gen::Theta(0), gen::HatTheta(3), gen::theta(2), gen::mu(7), gen::chi(1), gen::A(0, 2),
                        gen::Abar(2, 1), gen::A(9, 10), gen::Abar(0, 11), gen::dtheta, gen::dt, gen::alpha, gen::t,
                        gen::pi_inv})
    CHECK(parse_generator(generator_name(g)) == g);
  CHECK(generator_name(gen::A(0, 1)) == "A_12");
  CHECK(generator_name(gen::A(0, 10)) == "A_1_11");
  CHECK(parse_generator("A_1_2") == gen::A(0, 1));
  CHECK_THROWS(parse_generator("Theta_0"));
  CHECK_THROWS(parse_generator("phi_1"));
}

TEST_CASE("json serialization round-trips") {
  std::mt19937_64 rng(11);
  const auto p = testing::pool(3, {Kind::Theta, Kind::HatTheta, Kind::WeilTheta, Kind::Mu, Kind::A, Kind::Abar,
                                   Kind::Chi, Kind::Alpha, Kind::PiInv, Kind::LoopDTheta, Kind::Dt});
  for (int r = 0; r < 50; ++r) {
    const auto x = testing::random_element(rng, p, 8, 5);
    CHECK(element_from_json(to_json(x)) == x);
  }
  const auto x = make_rational(-1, 6) * G(gen::chi(0)) * G(gen::chi(0)) * G(gen::Theta(0));
  CHECK(to_json(x) == R"({"terms":[{"coeff":"-1/6","even":{"chi_1":2},"odd":["Theta_1"]}]})");
}

TEST_CASE("text and latex emitters") {
  const auto x = make_rational(-1, 6) * G(gen::Theta(0)) * G(gen::Theta(1)) + G(gen::chi(0)) * G(gen::HatTheta(2));
  CHECK(to_text(x) == "-1/6·Θ¹·Θ² + χ¹·Θ̂³");
  CHECK(to_latex(x) == "-\\frac{1}{6} \\Theta^{1} \\Theta^{2} + \\chi^{1} \\hat{\\Theta}^{3}");
  CHECK(to_text(GradedElement()) == "0");
}

TEST_CASE("property: normalize is idempotent") {
  std::mt19937_64 rng(1);
  const auto p = testing::pool(4, {Kind::Theta, Kind::WeilTheta, Kind::Mu, Kind::Chi, Kind::A});
  for (int r = 0; r < 100; ++r) {
    const auto x = testing::random_element(rng, p, 10, 6);
    std::vector<std::pair<Rational, std::vector<Generator>>> raw;
    for (const auto& t : x.terms()) {
      std::vector<Generator> word;
      for (auto id : t.monomial.even) word.push_back(even_generator(id));
      for (auto m = t.monomial.odd; m; m &= m - 1) word.push_back(odd_generator_at(std::countr_zero(m)));
      raw.emplace_back(t.coeff, word);
    }
    CHECK(GradedElement::normalize(raw) == x);
  }
}

TEST_CASE("property: multiplication is associative and graded commutative") {
  std::mt19937_64 rng(2);
  const auto p = testing::pool(4, {Kind::Theta, Kind::HatTheta, Kind::WeilTheta, Kind::Mu, Kind::Chi, Kind::A,
                                   Kind::LoopDTheta});
  for (int r = 0; r < 100; ++r) {
    const auto a = testing::random_element(rng, p, 6, 4);
    const auto b = testing::random_element(rng, p, 6, 4);
    const auto c = testing::random_element(rng, p, 6, 4);
    CHECK((a * b) * c == a * (b * c));
    const bool pa = rng() % 2, pb = rng() % 2;
    const auto x = testing::random_homogeneous(rng, p, 6, 4, pa);
    const auto y = testing::random_homogeneous(rng, p, 6, 4, pb);
    CHECK(x * y == ((pa && pb) ? -(y * x) : y * x));
  }
}

TEST_CASE("property: integration is linear and additive in the interval") {
  std::mt19937_64 rng(3);
  const auto p = testing::pool(3, {Kind::Theta, Kind::Alpha, Kind::Chi});
  for (int r = 0; r < 100; ++r) {
    const auto x = testing::random_element(rng, p, 6, 6);
    const auto y = testing::random_element(rng, p, 6, 6);
    const Rational s = testing::small_rational(rng), c = testing::small_rational(rng);
    const auto I = [&](const GradedElement& e, const Rational& lo, const Rational& hi) {
      return integrate_parameter(e, gen::alpha, lo, hi);
    };
    CHECK(I(x + s * y, Rational(0), Rational(1)) == I(x, Rational(0), Rational(1)) + s * I(y, Rational(0), Rational(1)));
    CHECK(I(x, Rational(0), Rational(1)) == I(x, Rational(0), c) + I(x, c, Rational(1)));
  }
}

TEST_CASE("property: Leibniz rule for random derivations") {
  std::mt19937_64 rng(4);
  const auto p = testing::pool(3, {Kind::Theta, Kind::WeilTheta, Kind::Mu, Kind::Chi});
  for (int parity = 0; parity < 2; ++parity) {
    std::map<Generator, GradedElement> images;
    for (const auto& g : p.gens)
      images[g] = testing::random_homogeneous(rng, p, 3, 3, g.odd() != (parity == 1));
    Derivation D;
    D.parity = parity ? Parity::Odd : Parity::Even;
    D.name = "R";
    D.action = [images](const Generator& g) -> std::optional<GradedElement> { return images.at(g); };
    for (int r = 0; r < 50; ++r) {
      const bool odd_a = rng() % 2;
      const auto a = testing::random_homogeneous(rng, p, 4, 3, odd_a);
      const auto b = testing::random_element(rng, p, 4, 3);
      const auto lhs = apply_derivation(D, a * b);
      const auto rhs = apply_derivation(D, a) * b + ((parity && odd_a) ? -(a * apply_derivation(D, b))
                                                                       : a * apply_derivation(D, b));
      CHECK(lhs == rhs);
    }
  }
}
