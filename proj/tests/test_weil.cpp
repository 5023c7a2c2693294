#include "doctest.h"
#include "support.hpp"

#include "cartanweil/weil.hpp"

using namespace cw;
using cw::testing::G;

TEST_CASE("abelian Weil differential") {
  const WeilComplex w(builtin_algebra("abelian(1)"));
  CHECK(apply_derivation(w.d(), G(gen::theta(0))) == G(gen::mu(0)));
  CHECK(apply_derivation(w.d(), G(gen::mu(0))).is_zero());
}

TEST_CASE("su2 Weil differential") {
  const WeilComplex w(builtin_algebra("su2"));
  CHECK(apply_derivation(w.d(), G(gen::theta(0))) == G(gen::mu(0)) - G(gen::theta(1)) * G(gen::theta(2)));
  for (int i = 0; i < 3; ++i) {
    CHECK(apply_derivation(w.d(), apply_derivation(w.d(), G(gen::theta(i)))).is_zero());
    CHECK(apply_derivation(w.d(), apply_derivation(w.d(), G(gen::mu(i)))).is_zero());
  }
}

TEST_CASE("Weil contractions") {
  const auto su2 = builtin_algebra("su2");
  const WeilComplex w(su2);
  CHECK(apply_derivation(w.iota(0), G(gen::theta(0)) * G(gen::theta(1))) == G(gen::theta(1)));
  CHECK(apply_derivation(w.iota(1), G(gen::mu(0)) - G(gen::theta(1)) * G(gen::theta(2))) == -G(gen::theta(2)));
  CHECK_THROWS_AS(weil_contraction(su2, 3), IndexOutOfRange);
  std::mt19937_64 rng(5);
  const auto p = testing::pool(3, {Kind::WeilTheta, Kind::Mu});
  for (int r = 0; r < 50; ++r) {
    const auto x = testing::random_element(rng, p, 8, 5);
    for (int i = 0; i < 3; ++i) CHECK(apply_derivation(w.iota(i), apply_derivation(w.iota(i), x)).is_zero());
  }
}

TEST_CASE("horizontal and basic predicates") {
  const auto su2 = builtin_algebra("su2");
  const WeilComplex w(su2);
  const auto m1 = G(gen::mu(0)), m2 = G(gen::mu(1));
  CHECK(is_horizontal(w, m1 * m2 + m2 * m1));
  const auto casimir = m1 * m1 + m2 * m2 + G(gen::mu(2)) * G(gen::mu(2));
  CHECK(is_basic(w, casimir));
  CHECK(!is_basic(w, m1 * m1));
  CHECK(!is_horizontal(w, G(gen::theta(0))));
  CHECK_THROWS_AS(is_horizontal(w, G(gen::Theta(0))), ForeignGenerator);
}

TEST_CASE("Chern-Weil elements") {
  const auto ab2 = builtin_algebra("abelian(2)");
  CHECK(chern_weil_element(metric_polynomial(ab2)) == G(gen::mu(0)) * G(gen::mu(0)) + G(gen::mu(1)) * G(gen::mu(1)));
  const auto su2 = builtin_algebra("su2");
  const WeilComplex w(su2);
  const auto cw2 = chern_weil_element(metric_polynomial(su2));
  CHECK(cw2 == G(gen::mu(0)) * G(gen::mu(0)) + G(gen::mu(1)) * G(gen::mu(1)) + G(gen::mu(2)) * G(gen::mu(2)));
  CHECK(is_basic(w, cw2));
  const auto cw4 = chern_weil_element(sym_power_polynomial(su2, 4));
  CHECK(homogeneous_degree(cw4) == 8);
  CHECK(is_basic(w, cw4));
  const auto su3 = builtin_algebra("su3");
  const WeilComplex w3(su3);
  CHECK(is_basic(w3, chern_weil_element(su3_cubic_polynomial(su3))));
}

TEST_CASE("non-invariant tensor gives a non-basic element") {
  const auto su2 = builtin_algebra("su2");
  const WeilComplex w(su2);
  SymmetricTensor t(3, 2);
  t.set({0, 0}, Rational(1));
  t.set({0, 1}, Rational(2));
  const auto x = chern_weil_element(t);
  CHECK(is_horizontal(w, x));
  CHECK(!is_basic(w, x));
  const auto su3 = builtin_algebra("su3");
  CHECK(!is_basic(WeilComplex(su3), chern_weil_element(random_symmetric_tensor(8, 3, 2))));
}

TEST_CASE("property: Weil complex identities on random elements") {
  for (const char* name : {"su2", "su3"}) {
    const auto data = builtin_algebra(name);
    const WeilComplex w(data);
    const int n = data.dim();
    std::mt19937_64 rng(17);
    const auto p = testing::pool(n, {Kind::WeilTheta, Kind::Mu});
    for (int r = 0; r < 100; ++r) {
      const auto x = testing::random_element(rng, p, 6, 4);
      INFO(name << " sample " << r);
      CHECK(apply_derivation(w.d(), apply_derivation(w.d(), x)).is_zero());
      const int i = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      CHECK(w.lie(i, x) == apply_derivation(w.lie_rule(i), x));
      CHECK((apply_derivation(w.iota(i), apply_derivation(w.iota(j), x)) +
             apply_derivation(w.iota(j), apply_derivation(w.iota(i), x)))
                .is_zero());
    }
  }
}
