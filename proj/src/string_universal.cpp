#include "cartanweil/string_universal.hpp"

#include "cartanweil/errors.hpp"

namespace cw {

namespace {

GradedElement g(const Generator& x) { return GradedElement(x); }

constexpr std::uint64_t dtheta_bit() { return std::uint64_t{1} << 48; }

std::string describe(const BasicVerdict& v) {
  std::string out = "fails " + v.failed_check;
  if (v.witness) out += " at " + v.witness->to_json();
  return out;
}

/// Checks ι_i X^j = 0 and L_i X^j = −c^j_{ik}X^k for every component; also that φ(X^j) equals
/// its θ = 0 part.
void check_component_structure(const TensorComplex& tc, const LieElement& x, const std::string& name,
                               const OracleOptions& options) {
  const auto& data = tc.algebra();
  const int n = data.dim();
  auto zero = [&](const GradedElement& e) -> std::optional<OracleWitness> {
    if (e.is_zero()) return std::nullopt;
    auto v = tensor_equality_oracle(data, e, GradedElement(), options);
    if (v.equal) return std::nullopt;
    return v.witness ? v.witness : std::optional<OracleWitness>(OracleWitness{});
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& xj = x[static_cast<std::size_t>(j)];
      const std::string where = name + "^" + std::to_string(j + 1) + ", index " + std::to_string(i + 1);
      if (auto w = zero(apply_derivation(tc.iota(i), xj)))
        throw NotBasic("iota " + where + (w->word.empty() ? "" : " at " + w->to_json()));
      GradedElement l = apply_derivation(tc.lie(i), xj);
      for (int k = 0; k < n; ++k)
        if (!is_zero(data.c(j, i, k))) l += x[static_cast<std::size_t>(k)] * data.c(j, i, k);
      if (auto w = zero(l)) throw NotBasic("equivariance " + where + (w->word.empty() ? "" : " at " + w->to_json()));
    }
  for (int j = 0; j < n; ++j) {
    const auto& xj = x[static_cast<std::size_t>(j)];
    if (!(mq_phi(tc, xj) == drop_weil_theta(xj)))
      throw NotBasic("phi of " + name + "^" + std::to_string(j + 1) + " is not its theta-free part");
  }
}

LieElement drop_weil_theta(const LieElement& x) {
  LieElement out;
  for (const auto& e : x) out.push_back(cw::drop_weil_theta(e));
  return out;
}

std::string witness_json(const OracleVerdict& v) {
  return v.witness ? v.witness->to_json() : std::string();
}

}  // namespace

std::string variant_name(Variant v) { return v == Variant::adjoint ? "adjoint" : "inverse_adjoint"; }

Variant parse_variant(std::string_view name) {
  if (name == "adjoint") return Variant::adjoint;
  if (name == "inverse_adjoint" || name == "inverse-adjoint") return Variant::inverse_adjoint;
  throw std::invalid_argument("unknown variant: " + std::string(name));
}

LieElement universal_connection_term(const LieAlgebraData& data) {
  const int n = data.dim();
  const auto theta = lie_generators(Kind::WeilTheta, n);
  return lie_generators(Kind::HatTheta, n) - symbolic_matrix_apply(Kind::A, theta) + theta;
}

UniversalData build_universal_data(const LieAlgebraData& data, Variant variant) {
  const int n = data.dim();
  if (n > kMaxDim) throw UnsupportedAlgebra("universal data: dimension above " + std::to_string(kMaxDim));
  const auto B = universal_connection_term(data);
  const auto mu = lie_generators(Kind::Mu, n);
  const GradedElement a = g(gen::alpha);
  const GradedElement a2a = a * a - a;
  LieElement F = (a2a * make_rational(1, 2)) * bracket(data, B, B) +
                 a * (symbolic_matrix_apply(Kind::A, mu) - mu) + mu;
  if (variant == Variant::inverse_adjoint) {
    const auto hat = lie_generators(Kind::HatTheta, n);
    const auto theta = lie_generators(Kind::WeilTheta, n);
    F = F + a2a * (bracket(data, hat, symbolic_matrix_apply(Kind::A, theta)) -
                   bracket(data, hat, symbolic_matrix_apply(Kind::Abar, theta)));
  }
  return UniversalData{std::move(F), B * g(gen::dtheta), variant};
}

UniversalData based_universal_data(const LieAlgebraData& data) {
  const int n = data.dim();
  const auto hat = lie_generators(Kind::HatTheta, n);
  const GradedElement a = g(gen::alpha);
  return UniversalData{((a * a - a) * make_rational(1, 2)) * bracket(data, hat, hat), hat * g(gen::dtheta),
                       Variant::adjoint};
}

GradedElement string_form(const SymmetricTensor& p, const Scale& scale, const LieElement& F,
                          const LieElement& higgs_cov) {
  if (static_cast<int>(F.size()) != p.dim() || static_cast<int>(higgs_cov.size()) != p.dim())
    throw DimensionMismatch("string_form: data dimension differs from the polynomial");
  if (p.degree() < 1) throw DegreeMismatch("string_form: degree must be at least 1");
  for (const auto& c : F)
    for (const auto& t : c.terms())
      if (t.monomial.odd & dtheta_bit()) throw std::invalid_argument("string_form: curvature contains dtheta");
  for (const auto& c : higgs_cov)
    for (const auto& t : c.terms())
      if (!(t.monomial.odd & dtheta_bit()))
        throw std::invalid_argument("string_form: Higgs term without the dtheta marker");
  const auto integrand = first_slot_form(p, scale, higgs_cov, F) * Rational(p.degree());
  return integrate_parameter(right_coefficient(integrand, gen::dtheta), gen::alpha, Rational(0), Rational(1));
}

GradedElement string_form(const InvariantPolynomial& p, const UniversalData& u) {
  return string_form(p.components(), p.scale(), u.curvature_F, u.higgs_cov);
}

CaloronSplit caloron_expand_identity(const SymmetricTensor& p, const Scale& scale, const LieElement& F,
                                     const LieElement& psi) {
  const auto full = power_form(p, scale, F + psi * g(gen::dtheta));
  auto rest = without_odd(full, gen::dtheta);
  return CaloronSplit{full - rest, std::move(rest)};
}

GradedElement at_identity(const GradedElement& x) {
  return substitute(x, [](const Generator& y) -> std::optional<GradedElement> {
    switch (y.kind) {
      case Kind::A:
      case Kind::Abar: return GradedElement(y.i == y.j ? 1 : 0);
      case Kind::HatTheta: return g(gen::Theta(y.i));
      default: return std::nullopt;
    }
  });
}

UniversalStringResult universal_string_class(const LieAlgebraData& data, const InvariantPolynomial& p,
                                             const UniversalStringOptions& options) {
  const TensorComplex tc(data);
  const auto u = build_universal_data(data, options.variant);
  MqPath path = options.path;
  if (path == MqPath::automatic) path = (p.degree() <= 2 && data.dim() <= 3) ? MqPath::full : MqPath::structured;
  if (path == MqPath::full) {
    const auto s = string_form(p, u);
    const auto verdict = is_basic_tensor(tc, s, options.oracle);
    if (!verdict.basic) throw NotBasic("universal string element " + describe(verdict));
    auto projected = rename_mu_to_chi(drop_weil_theta(s));
    if (!(rename_mu_to_chi(mq_phi(tc, s)) == projected))
      throw InvariantViolation("phi and the projection disagree on the universal string element");
    return UniversalStringResult{make_equivariant_form(projected), MqPath::full, s};
  }
  // Basicness of p(∇Φ, F, ..., F) follows from that of the components and invariance of p.
  const auto B = universal_connection_term(data);
  check_component_structure(tc, B, "B", options.oracle);
  check_component_structure(tc, u.curvature_F, "F", options.oracle);
  const auto s0 = string_form(p.components(), p.scale(), drop_weil_theta(u.curvature_F),
                              drop_weil_theta(B) * g(gen::dtheta));
  return UniversalStringResult{make_equivariant_form(rename_mu_to_chi(s0)), MqPath::structured, std::nullopt};
}

BasedClass based_string_class(const LieAlgebraData& data, const InvariantPolynomial& p,
                              const OracleOptions& options) {
  BasedClass out;
  out.hat_form = string_form(p, based_universal_data(data));
  out.theta_form = invariance_rename(data, out.hat_form, options);
  return out;
}

Report verify_string_equals_transgression(const LieAlgebraData& data, const InvariantPolynomial& p,
                     const UniversalStringOptions& options) {
  Report r{"string_class_equals_equivariant_transgression", data.name(), p.label(), false, "", {}, {}};
  try {
    const auto us = universal_string_class(data, p, options);
    const auto tg = equivariant_transgress(data, p);
    const auto v = equality_oracle(data, us.form.element, tg.form.element, options.oracle);
    r.pass = v.equal;
    r.detail = "k=" + std::to_string(p.degree()) + ", variant=" + variant_name(options.variant) +
               ", samples=" + std::to_string(v.samples);
    if (!v.equal) r.witness = witness_json(v);
  } catch (const NotBasic& e) {
    const std::string msg = e.what();
    const auto at = msg.find(" at {");
    r.detail = "not basic: " + msg.substr(0, at);
    if (at != std::string::npos) r.witness = msg.substr(at + 4);
  }
  return r;
}

std::vector<Report> verify_universal_class_consistency(const LieAlgebraData& data, const InvariantPolynomial& p,
                                                 const UniversalStringOptions& options) {
  std::vector<Report> out;
  auto base = [&](std::string claim) { return Report{std::move(claim), data.name(), p.label(), false, "", {}, {}}; };
  UniversalStringResult us;
  try {
    us = universal_string_class(data, p, options);
  } catch (const NotBasic& e) {
    auto r = base("universal_class_basic");
    r.detail = std::string("not basic: ") + e.what();
    out.push_back(std::move(r));
    return out;
  }
  const auto& w = us.form.element;
  {
    auto r = base("universal_class_equivariantly_closed");
    const auto v = check_equivariantly_closed(data, w, options.oracle);
    r.pass = v.equal;
    if (!v.equal) r.witness = witness_json(v);
    out.push_back(std::move(r));
  }
  {
    auto r = base("universal_class_invariant");
    const auto v = check_invariant(data, w, options.oracle);
    r.pass = v.equal;
    if (!v.equal) r.witness = witness_json(v);
    out.push_back(std::move(r));
  }
  {
    auto r = base("universal_class_specializes_to_transgression");
    const auto chi_free = substitute(w, [](const Generator& y) -> std::optional<GradedElement> {
      if (y.kind == Kind::Chi) return GradedElement();
      return std::nullopt;
    });
    r.pass = at_identity(chi_free) == transgress_integral(data, p).form.element;
    r.detail = "exact term comparison";
    out.push_back(std::move(r));
  }
  return out;
}

Report verify_string_form_closed(const LieAlgebraData& data, const InvariantPolynomial& p,
                                 const UniversalStringOptions& options) {
  Report r{"string_form_closed", data.name(), p.label(), false, "", {}, {}};
  const TensorComplex tc(data);
  const auto s = string_form(p, build_universal_data(data, options.variant));
  const auto ds = apply_derivation(tc.total_d(), s);
  if (ds.is_zero()) {
    r.pass = true;
    r.detail = "exact";
    return r;
  }
  const auto v = tensor_equality_oracle(data, ds, GradedElement(), options.oracle);
  r.pass = v.equal;
  if (!v.equal) r.witness = witness_json(v);
  return r;
}

}  // namespace cw
