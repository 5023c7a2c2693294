// One line per acceptance criterion; exit status is the number of failures.

#include "cartanweil/sampling.hpp"
#include "cartanweil/string_universal.hpp"
#include "cartanweil/weil.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace cw;

namespace {

GradedElement G(const Generator& g) { return GradedElement(g); }
GradedElement pi2() { return G(gen::pi_inv) * G(gen::pi_inv); }

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) note = what;
    pass = false;
  }
};

int failures = 0;

void criterion(int number, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.note = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (s > budget_s) o.require(false, "runtime above " + std::to_string(budget_s) + " s");
  if (!o.pass) ++failures;
  char time[32];
  std::snprintf(time, sizeof time, "%.2f s", s);
  std::cout << "criterion " << number << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title << "  [" << time << "]";
  if (!o.note.empty()) std::cout << "  " << o.note;
  std::cout << std::endl;
}

std::vector<InvariantPolynomial> polynomials(const LieAlgebraData& data) {
  std::vector<InvariantPolynomial> out{zero_polynomial(data, 1), metric_polynomial(data)};
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

Outcome transgression_coefficients() {
  Outcome o;
  o.require(transgression_coefficient(2) == make_rational(-1, 6), "k=2 coefficient");
  o.require(transgression_coefficient(3) == make_rational(1, 40), "k=3 coefficient");
  for (const char* name : {"su2", "su3"}) {
    const auto data = builtin_algebra(name);
    for (const auto& p : polynomials(data))
      o.require(transgress_integral(data, p).form.element == transgress_closed(data, p).form.element,
                std::string(name) + " k=" + std::to_string(p.degree()));
  }
  const auto su2 = builtin_algebra("su2");
  const auto theta = lie_generators(Kind::Theta, 3);
  o.require(transgress_integral(su2, metric_polynomial(su2)).form.element ==
                make_rational(-1, 6) * pairing(su2, theta, bracket(su2, theta, theta)),
            "su2 metric value");
  const auto su3 = builtin_algebra("su3");
  const auto t8 = lie_generators(Kind::Theta, 8);
  const auto d = su3_cubic_polynomial(su3);
  o.require(transgress_integral(su3, d).form.element ==
                make_rational(1, 40) * first_slot_form(d, t8, bracket(su3, t8, t8)),
            "su3 cubic value");
  return o;
}

Outcome based_class() {
  Outcome o;
  const auto su2 = builtin_algebra("su2");
  const auto b = based_string_class(su2, metric_polynomial(su2, Scale{make_rational(-1, 8), 2}));
  const auto theta = lie_generators(Kind::Theta, 3);
  o.require(b.theta_form.has_value(), "rename not certified");
  if (b.theta_form)
    o.require(*b.theta_form == make_rational(1, 48) * pi2() * pairing(su2, bracket(su2, theta, theta), theta),
              "term map differs from (1/48) pi^-2 <[Theta,Theta],Theta>");
  return o;
}

Outcome normalized_metric_class() {
  Outcome o;
  const auto su2 = builtin_algebra("su2");
  UniversalStringOptions options;
  options.path = MqPath::full;
  const auto us = universal_string_class(su2, metric_polynomial(su2, Scale{make_rational(-1, 8), 2}), options);
  const auto hat = lie_generators(Kind::HatTheta, 3);
  const auto reference = make_rational(1, 8) * pi2() *
                     (make_rational(1, 6) * pairing(su2, bracket(su2, hat, hat), hat) -
                      pairing(su2, lie_generators(Kind::Chi, 3), lie_generators(Kind::Theta, 3) + hat));
  const auto v = equality_oracle(su2, us.form.element, reference, {8, 1});
  o.require(v.equal && v.samples >= 8, "oracle");
  const TensorComplex tc(su2);
  o.require(us.weil_element && rename_mu_to_chi(mq_phi(tc, *us.weil_element)) ==
                                   rename_mu_to_chi(drop_weil_theta(*us.weil_element)),
            "mq_phi and projection differ");
  const auto r = rewrite_adjoint_pairings(su2, us.form.element);
  o.require(r && *r == reference, "hat presentation differs");
  o.note = "oracle samples=" + std::to_string(v.samples);
  return o;
}

Outcome string_equals_transgression() {
  Outcome o;
  const auto su2 = builtin_algebra("su2");
  const auto su3 = builtin_algebra("su3");
  for (const auto& [data, p] : std::vector<std::pair<LieAlgebraData, InvariantPolynomial>>{
           {su2, metric_polynomial(su2)}, {su3, metric_polynomial(su3)}, {su3, su3_cubic_polynomial(su3)}}) {
    const auto r = verify_string_equals_transgression(data, p);
    o.require(r.pass, data.name() + " " + p.label() + ": " + r.detail);
  }
  return o;
}

Outcome closedness() {
  Outcome o;
  int count = 0;
  for (const char* name : {"su2", "su3"}) {
    const auto data = builtin_algebra(name);
    for (const auto& p : polynomials(data)) {
      const std::string where = std::string(name) + " k=" + std::to_string(p.degree());
      o.require(check_closed(data, transgress_integral(data, p).form.element), "d tau " + where);
      if (p.degree() > 3 && data.dim() > 3) continue;
      const auto tg = equivariant_transgress(data, p).form.element;
      o.require(check_equivariantly_closed(data, tg).equal, "d_G tau_G " + where);
      o.require(check_invariant(data, tg).equal, "invariance " + where);
      ++count;
    }
  }
  if (o.pass) o.note = std::to_string(count) + " equivariant forms checked";
  return o;
}

Outcome structural() {
  Outcome o;
  constexpr int samples = 100;
  for (const char* name : {"su2", "su3"}) {
    const auto data = builtin_algebra(name);
    const int n = data.dim();
    const WeilComplex w(data);
    const GFormComplex f(data);
    const TensorComplex tc(data);
    std::mt19937_64 rng(2024);
    const auto wp = weil_pool(n), fp = form_pool(n), tp = tensor_pool(n);
    const auto blocks = basic_blocks(data, n <= 3);
    const std::string tag = std::string(name) + " ";
    for (int r = 0; r < samples; ++r) {
      const auto x = random_element(rng, wp, 6, 4);
      o.require(apply_derivation(w.d(), apply_derivation(w.d(), x)).is_zero(), tag + "d_W^2");
      const auto y = random_element(rng, tp, 4, 4);
      o.require(apply_derivation(tc.total_d(), apply_derivation(tc.total_d(), y)).is_zero(), tag + "total_d^2");
      o.require(mq_phi(tc, mq_phi_inverse(tc, y)) == y, tag + "phi phi^-1");
      GradedElement g = y;
      for (int m = 0; m <= n; ++m) g = apply_derivation(tc.gamma(), g);
      o.require(g.is_zero(), tag + "gamma nilpotency");
      const auto z = random_element(rng, fp, 3, 3);
      const auto lhs = apply_derivation(f.d(), apply_derivation(f.iota_chi(), z)) +
                       apply_derivation(f.iota_chi(), apply_derivation(f.d(), z));
      Accumulator rhs;
      for (int i = 0; i < n; ++i) rhs.add_product(G(gen::chi(i)), apply_derivation(f.form_lie(i), z));
      o.require(equality_oracle(data, lhs, rhs.finish(), {8, static_cast<std::uint64_t>(r)}).equal,
                tag + "magic formula");
      const auto b = random_basic(rng, blocks);
      const OracleOptions opt{8, static_cast<std::uint64_t>(r)};
      o.require(is_basic_tensor(tc, b, opt).basic, tag + "basic sample");
      const auto phb = mq_phi(tc, b);
      o.require(!uses_kind(phb, Kind::WeilTheta), tag + "phi(basic) theta-free");
      o.require(rename_mu_to_chi(phb) == mq_project(tc, b, opt).element, tag + "phi = projection");
    }
  }
  if (o.pass) o.note = std::to_string(samples) + " elements per check per algebra";
  return o;
}

Outcome caloron() {
  Outcome o;
  std::mt19937_64 rng(7);
  const auto even = generator_pool(3, {Kind::Mu, Kind::A});
  const auto odd = generator_pool(3, {Kind::Theta, Kind::HatTheta});
  const auto su2 = builtin_algebra("su2");
  for (int k = 1; k <= 4; ++k) {
    const auto p = random_symmetric_tensor(3, k, static_cast<std::uint64_t>(k));
    LieElement F, psi;
    for (int i = 0; i < 3; ++i) {
      F.push_back(random_element(rng, even, 3, 2) + G(gen::Theta(i)) * G(gen::HatTheta((i + 2) % 3)));
      psi.push_back(random_homogeneous(rng, odd, 3, 1, true) + G(gen::HatTheta(i)));
    }
    const auto split = caloron_expand_identity(p, {}, F, psi);
    o.require(split.dtheta_part == Rational(k) * first_slot_form(p, {}, psi * G(gen::dtheta), F),
              "k=" + std::to_string(k));
    o.require(!split.dtheta_part.is_zero(), "degenerate sample k=" + std::to_string(k));
  }
  return o;
}

Outcome negative_controls() {
  Outcome o;
  // [e1,e2] = e3, [e1,e3] = e3, [e2,e3] = e1.
  std::vector<std::vector<std::vector<Rational>>> c(3, std::vector<std::vector<Rational>>(3, std::vector<Rational>(3)));
  auto set = [&](int i, int j, int k) {
    c[i][j][k] = 1;
    c[i][k][j] = -1;
  };
  set(2, 0, 1);
  set(2, 0, 2);
  set(0, 1, 2);
  const LieAlgebraData broken("broken", 3, c, RationalMatrix::Identity(3, 3));
  o.require(!validate_algebra(broken).check("jacobi").pass, "broken Jacobi accepted");

  const auto su2 = builtin_algebra("su2");
  SymmetricTensor t(3, 2);
  t.set({0, 0}, Rational(1));
  bool rejected = false;
  try {
    InvariantPolynomial(su2, t);
  } catch (const NotInvariant&) {
    rejected = true;
  }
  o.require(rejected, "non-invariant tensor accepted");

  UniversalStringOptions reference;
  reference.variant = Variant::inverse_adjoint;
  const auto r = verify_string_equals_transgression(su2, metric_polynomial(su2), reference);
  o.require(!r.pass && r.witness.has_value(), "sign-flipped variant not rejected with a witness");
  if (o.pass) o.note = "sign-flipped variant: " + r.detail;
  return o;
}

}  // namespace

int main() {
  criterion(1, "transgression coefficients: integral = closed for k = 1..5 on su2, su3; -1/6 and 1/40", 10,
            transgression_coefficients);
  criterion(2, "based universal string class = (1/48) pi^-2 <[Theta,Theta],Theta> exactly", 1, based_class);
  criterion(3, "normalized metric universal class on su2 = (1/8) pi^-2 (1/6 <[ThetaHat,ThetaHat],ThetaHat> - <chi,Theta+ThetaHat>)", 30,
            normalized_metric_class);
  criterion(4, "universal string class = equivariant transgression (su2, su3 metric; su3 cubic)", 300, string_equals_transgression);
  criterion(5, "closedness and invariance of tau and tau_G on su2, su3", 120, closedness);
  criterion(6, "structural identities on 100 random elements for su2 and su3", 300, structural);
  criterion(7, "caloron expansion carries the factor k for k = 1..4", 10, caloron);
  criterion(8, "negative controls: broken Jacobi, non-invariant tensor, sign-flipped variant", 60, negative_controls);
  std::cout << (failures == 0 ? "all acceptance criteria passed" : "acceptance failures: " + std::to_string(failures))
            << std::endl;
  return failures;
}
