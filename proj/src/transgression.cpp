#include "cartanweil/transgression.hpp"

#include "cartanweil/errors.hpp"

#include <map>
#include <tuple>

namespace cw {

namespace {

GradedElement g(const Generator& x) { return GradedElement(x); }

LieElement Theta(int n) { return lie_generators(Kind::Theta, n); }

/// ½(t²−t)[Θ,Θ].
LieElement bracket_part(const LieAlgebraData& data) {
  const int n = data.dim();
  const GradedElement t = g(gen::t);
  const GradedElement s = (t * t - t) * make_rational(1, 2);
  return s * bracket(data, Theta(n), Theta(n));
}

/// (1−t)χ + tĀχ.
LieElement chi_part(const LieAlgebraData& data) {
  const int n = data.dim();
  const GradedElement t = g(gen::t);
  const auto chi = lie_generators(Kind::Chi, n);
  return (GradedElement(1) - t) * chi + t * symbolic_matrix_apply(Kind::Abar, chi);
}

void check_dim(const LieAlgebraData& data, const SymmetricTensor& p) {
  if (p.dim() != data.dim()) throw DimensionMismatch("transgression: polynomial dimension differs from the algebra");
  if (p.degree() < 1) throw DegreeMismatch("transgression: degree must be at least 1");
}

}  // namespace

Rational transgression_coefficient(int k) {
  Rational c(1);
  for (int i = 1; i < k; ++i) c *= make_rational(-1, 2);
  Rational f(1);
  for (int i = 2; i <= k; ++i) f *= Rational(i);
  Rational f1(1);
  for (int i = 2; i <= k - 1; ++i) f1 *= Rational(i);
  Rational f2(1);
  for (int i = 2; i <= 2 * k - 1; ++i) f2 *= Rational(i);
  return c * f * f1 / f2;
}

LieElement transgression_curvature(const LieAlgebraData& data) {
  return g(gen::dt) * Theta(data.dim()) + bracket_part(data);
}

LieElement equivariant_transgression_curvature(const LieAlgebraData& data) {
  const int n = data.dim();
  const auto chi = lie_generators(Kind::Chi, n);
  const GradedElement t = g(gen::t);
  return transgression_curvature(data) - t * (chi - symbolic_matrix_apply(Kind::Abar, chi)) + chi;
}

GradedElement fiber_integral(const SymmetricTensor& p, const Scale& scale, const LieElement& curvature) {
  const auto full = power_form(p, scale, curvature);
  return -integrate_parameter(right_coefficient(full, gen::dt), gen::t, Rational(0), Rational(1));
}

GradedElement transgression_integral(const LieAlgebraData& data, const SymmetricTensor& p, const Scale& scale) {
  check_dim(data, p);
  return fiber_integral(p, scale, transgression_curvature(data));
}

GradedElement transgression_closed(const LieAlgebraData& data, const SymmetricTensor& p, const Scale& scale) {
  check_dim(data, p);
  const int n = data.dim();
  const auto bb = bracket(data, Theta(n), Theta(n));
  return first_slot_form(p, scale, Theta(n), bb) * transgression_coefficient(p.degree());
}

GradedElement equivariant_transgression_integral(const LieAlgebraData& data, const SymmetricTensor& p,
                                                 const Scale& scale) {
  check_dim(data, p);
  return fiber_integral(p, scale, equivariant_transgression_curvature(data));
}

GradedElement equivariant_transgression_closed(const LieAlgebraData& data, const SymmetricTensor& p,
                                               const Scale& scale) {
  check_dim(data, p);
  const auto y = bracket_part(data) + chi_part(data);
  const auto integrand = first_slot_form(p, scale, Theta(data.dim()), y) * Rational(p.degree());
  return integrate_parameter(integrand, gen::t, Rational(0), Rational(1));
}

TransgressionResult transgress_integral(const LieAlgebraData& data, const InvariantPolynomial& p) {
  return {EquivariantForm{transgression_integral(data, p.components(), p.scale())}, p,
          TransgressionMethod::integral, false};
}

TransgressionResult transgress_closed(const LieAlgebraData& data, const InvariantPolynomial& p) {
  return {EquivariantForm{transgression_closed(data, p.components(), p.scale())}, p,
          TransgressionMethod::closed_formula, false};
}

TransgressionResult equivariant_transgress(const LieAlgebraData& data, const InvariantPolynomial& p,
                                           TransgressionMethod method) {
  auto form = method == TransgressionMethod::integral
                  ? equivariant_transgression_integral(data, p.components(), p.scale())
                  : equivariant_transgression_closed(data, p.components(), p.scale());
  return {EquivariantForm{std::move(form)}, p, method, true};
}

bool check_closed(const LieAlgebraData& data, const GradedElement& omega) {
  return apply_derivation(gform_differential(data), omega).is_zero();
}

OracleVerdict check_equivariantly_closed(const LieAlgebraData& data, const GradedElement& omega,
                                         const OracleOptions& options) {
  const auto dG = apply_derivation(cartan_model_differential(data), omega);
  if (dG.is_zero()) return OracleVerdict{true, 0, options.seed, std::nullopt};
  return equality_oracle(data, dG, GradedElement(), options);
}

OracleVerdict check_invariant(const LieAlgebraData& data, const GradedElement& omega, const OracleOptions& options) {
  OracleVerdict last{true, 0, options.seed, std::nullopt};
  for (int i = 0; i < data.dim(); ++i) {
    const auto l = apply_derivation(total_lie(data, i), omega);
    if (l.is_zero()) continue;
    last = equality_oracle(data, l, GradedElement(), options);
    if (!last.equal) return last;
  }
  return last;
}

namespace {

/// One pass of Σ_i M^i_j V^i → W^j over complete groups of terms.
GradedElement rewrite_pass(const GradedElement& x, int n, Kind matrix, Kind vector, Kind target) {
  using Key = std::tuple<std::vector<std::uint32_t>, std::uint64_t, int>;
  struct Group {
    std::map<int, Rational> by_index;
    std::vector<std::size_t> terms;
  };
  std::map<Key, Group> groups;
  const auto& terms = x.terms();
  std::vector<char> claimed(terms.size(), 0);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto& m = terms[t].monomial;
    int count = 0;
    std::uint32_t id_m = 0;
    for (auto id : m.even)
      if (even_generator(id).kind == matrix) {
        ++count;
        id_m = id;
      }
    if (count != 1) continue;
    const Generator mg = even_generator(id_m);
    const std::uint64_t bit = std::uint64_t{1} << odd_bit(Generator{vector, mg.i, 0});
    if (!(m.odd & bit)) continue;
    const std::uint64_t word = m.odd & ~bit;
    // V^i·word = ε·(odd word of the term).
    const int eps = odd_product_sign(bit, word);
    std::vector<std::uint32_t> rest;
    for (auto id : m.even)
      if (id != id_m) rest.push_back(id);
    auto& grp = groups[Key{rest, word, mg.j}];
    grp.by_index[mg.i] = eps > 0 ? terms[t].coeff : -terms[t].coeff;
    grp.terms.push_back(t);
  }
  Accumulator out;
  for (const auto& [key, grp] : groups) {
    const auto& [rest, word, j] = key;
    const Rational& c = grp.by_index.begin()->second;
    bool complete = true;
    for (int i = 0; i < n && complete; ++i) {
      if (word & (std::uint64_t{1} << odd_bit(Generator{vector, i, 0}))) continue;
      auto it = grp.by_index.find(i);
      complete = it != grp.by_index.end() && it->second == c;
    }
    if (!complete) continue;
    for (auto t : grp.terms) claimed[t] = 1;
    Monomial rm;
    for (auto id : rest) rm.even.push_back(id);
    rm.odd = word;
    out.add_product(g(Generator{target, j, 0}), GradedElement::from_sorted_terms({Term{rm, c}}));
  }
  for (std::size_t t = 0; t < terms.size(); ++t)
    if (!claimed[t]) out.add(GradedElement::from_sorted_terms({terms[t]}));
  return out.finish();
}

}  // namespace

std::optional<GradedElement> rewrite_adjoint_pairings(const LieAlgebraData& data, const GradedElement& x,
                                                      const OracleOptions& options) {
  if (!data.metric_is_identity()) return std::nullopt;
  const int n = data.dim();
  auto result = rewrite_pass(x, n, Kind::Abar, Kind::Theta, Kind::HatTheta);
  result = rewrite_pass(result, n, Kind::A, Kind::HatTheta, Kind::Theta);
  if (!equality_oracle(data, result, x, options).equal) return std::nullopt;
  return result;
}

}  // namespace cw
