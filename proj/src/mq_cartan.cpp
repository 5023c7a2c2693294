#include "cartanweil/mq_cartan.hpp"

#include "cartanweil/errors.hpp"

namespace cw {

namespace {

GradedElement g(const Generator& x) { return GradedElement(x); }

constexpr std::uint64_t weil_theta_mask() { return 0xFFFFull << 32; }

Derivation make_cartan_d(const LieAlgebraData& data) {
  const int n = data.dim();
  const Derivation d = gform_differential(data);
  std::vector<Derivation> contractions;
  for (int k = 0; k < n; ++k) contractions.push_back(form_contraction(data, k));
  Derivation out;
  out.parity = Parity::Odd;
  out.name = "d_cartan";
  out.action = [d, contractions, n](const Generator& x) -> std::optional<GradedElement> {
    if (x.kind == Kind::Mu) return GradedElement();
    auto v = d.action(x);
    if (!v || x.kind == Kind::Chi) return v;
    for (int k = 0; k < n; ++k) {
      auto c = contractions[static_cast<std::size_t>(k)].action(x);
      if (c && !c->is_zero()) *v -= g(gen::mu(k)) * *c;
    }
    return v;
  };
  return out;
}

GradedElement exp_derivation(const Derivation& D, const GradedElement& x, const Rational& sign) {
  GradedElement total = x;
  GradedElement power = x;
  Rational factor(1);
  for (int m = 1; !power.is_zero(); ++m) {
    power = apply_derivation(D, power);
    factor = factor * sign / Rational(m);
    total += power * factor;
    if (m > 64) throw InvariantViolation("exp(γ): no nilpotency");
  }
  return total;
}

std::optional<OracleWitness> zero_check(const LieAlgebraData& data, const GradedElement& x,
                                        const OracleOptions& options) {
  if (x.is_zero()) return std::nullopt;
  auto v = tensor_equality_oracle(data, x, GradedElement(), options);
  if (v.equal) return std::nullopt;
  if (v.witness) return v.witness;
  return OracleWitness{};
}

}  // namespace

Derivation mq_gamma(const LieAlgebraData& data) {
  const int n = data.dim();
  std::vector<GradedElement> on_theta, on_hat;
  for (int j = 0; j < n; ++j) {
    GradedElement a = g(gen::theta(j)), b;
    for (int i = 0; i < n; ++i) {
      a -= g(gen::Abar(j, i)) * g(gen::theta(i));
      b += g(gen::theta(i)) * g(gen::A(j, i));
    }
    b -= g(gen::theta(j));
    on_theta.push_back(std::move(a));
    on_hat.push_back(std::move(b));
  }
  Derivation out;
  out.parity = Parity::Even;
  out.name = "gamma";
  out.action = [on_theta, on_hat](const Generator& x) -> std::optional<GradedElement> {
    switch (x.kind) {
      case Kind::Theta: return on_theta[static_cast<std::size_t>(x.i)];
      case Kind::HatTheta: return on_hat[static_cast<std::size_t>(x.i)];
      default: return GradedElement();
    }
  };
  return out;
}

TensorComplex::TensorComplex(const LieAlgebraData& data)
    : weil_(data),
      gforms_(data),
      total_d_(derivation_sum("d_total", {weil_differential(data), gform_differential(data)})),
      gamma_(mq_gamma(data)),
      cartan_d_(make_cartan_d(data)) {
  for (int i = 0; i < data.dim(); ++i)
    iota_.push_back(derivation_sum("iota_total", {weil_contraction(data, i), form_contraction(data, i)}));
}

EquivariantForm make_equivariant_form(const GradedElement& x) {
  require_kinds(x, {Kind::Theta, Kind::HatTheta, Kind::A, Kind::Abar, Kind::Chi, Kind::PiInv}, "equivariant form");
  return EquivariantForm{x};
}

GradedElement mq_phi(const TensorComplex& complex, const GradedElement& x) {
  return exp_derivation(complex.gamma(), x, Rational(1));
}

GradedElement mq_phi_inverse(const TensorComplex& complex, const GradedElement& x) {
  return exp_derivation(complex.gamma(), x, Rational(-1));
}

BasicVerdict is_basic_tensor(const TensorComplex& complex, const GradedElement& x, const OracleOptions& options) {
  const auto& data = complex.algebra();
  for (int i = 0; i < data.dim(); ++i) {
    const std::string idx = std::to_string(i + 1);
    if (auto w = zero_check(data, apply_derivation(complex.iota(i), x), options))
      return BasicVerdict{false, "iota_" + idx, w};
    if (auto w = zero_check(data, apply_derivation(complex.lie(i), x), options))
      return BasicVerdict{false, "lie_" + idx, w};
  }
  return {};
}

const Derivation& cartan_differential(const TensorComplex& complex) { return complex.gforms().d_G(); }

GradedElement rename_mu_to_chi(const GradedElement& x) {
  return substitute(x, [](const Generator& y) -> std::optional<GradedElement> {
    if (y.kind == Kind::Mu) return GradedElement(gen::chi(y.i));
    return std::nullopt;
  });
}

GradedElement drop_weil_theta(const GradedElement& x) {
  std::vector<Term> kept;
  for (const auto& t : x.terms())
    if ((t.monomial.odd & weil_theta_mask()) == 0) kept.push_back(t);
  return GradedElement::from_sorted_terms(std::move(kept));
}

EquivariantForm mq_project(const TensorComplex& complex, const GradedElement& x, const OracleOptions& options) {
  const auto verdict = is_basic_tensor(complex, x, options);
  if (!verdict.basic)
    throw NotBasic("mq_project: element fails " + verdict.failed_check +
                   (verdict.witness ? " at " + verdict.witness->to_json() : std::string()));
  return make_equivariant_form(rename_mu_to_chi(drop_weil_theta(x)));
}

}  // namespace cw
