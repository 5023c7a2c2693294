#include "cartanweil/weil.hpp"

#include "cartanweil/lie_valued.hpp"

namespace cw {

namespace {

void check_supported(const LieAlgebraData& data) {
  if (data.dim() > kMaxDim)
    throw UnsupportedAlgebra("dimension " + std::to_string(data.dim()) + " exceeds " + std::to_string(kMaxDim));
}

void check_index(const LieAlgebraData& data, int i) {
  if (i < 0 || i >= data.dim()) throw IndexOutOfRange("basis index " + std::to_string(i + 1) + " out of range");
}

}  // namespace

Derivation weil_differential(const LieAlgebraData& data) {
  check_supported(data);
  const int n = data.dim();
  std::vector<GradedElement> dtheta(static_cast<std::size_t>(n)), dmu(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Accumulator a, b;
    a.add(GradedElement(gen::mu(i)));
    for (const auto& e : data.nonzero()) {
      if (e.i != i) continue;
      a.add_product(GradedElement(gen::theta(e.j)), GradedElement(gen::theta(e.k)), -e.value / 2);
      b.add_product(GradedElement(gen::mu(e.j)), GradedElement(gen::theta(e.k)), e.value);
    }
    dtheta[static_cast<std::size_t>(i)] = a.finish();
    dmu[static_cast<std::size_t>(i)] = b.finish();
  }
  Derivation d;
  d.parity = Parity::Odd;
  d.name = "d_W";
  d.action = [dtheta, dmu](const Generator& g) -> std::optional<GradedElement> {
    switch (g.kind) {
      case Kind::WeilTheta: return dtheta[static_cast<std::size_t>(g.i)];
      case Kind::Mu: return dmu[static_cast<std::size_t>(g.i)];
      case Kind::PiInv: return GradedElement();
      default: return std::nullopt;
    }
  };
  return d;
}

Derivation weil_contraction(const LieAlgebraData& data, int i) {
  check_supported(data);
  check_index(data, i);
  Derivation d;
  d.parity = Parity::Odd;
  d.name = "iota_W_" + std::to_string(i + 1);
  d.action = [i](const Generator& g) -> std::optional<GradedElement> {
    switch (g.kind) {
      case Kind::WeilTheta: return GradedElement(g.i == i ? 1 : 0);
      case Kind::Mu:
      case Kind::PiInv: return GradedElement();
      default: return std::nullopt;
    }
  };
  return d;
}

Derivation weil_lie_rule(const LieAlgebraData& data, int i) {
  check_supported(data);
  check_index(data, i);
  const int n = data.dim();
  std::vector<GradedElement> ltheta(static_cast<std::size_t>(n)), lmu(static_cast<std::size_t>(n));
  for (const auto& e : data.with_first_lower(i)) {
    ltheta[static_cast<std::size_t>(e.i)] -= e.value * GradedElement(gen::theta(e.k));
    lmu[static_cast<std::size_t>(e.i)] -= e.value * GradedElement(gen::mu(e.k));
  }
  Derivation d;
  d.parity = Parity::Even;
  d.name = "L_W_" + std::to_string(i + 1);
  d.action = [ltheta, lmu](const Generator& g) -> std::optional<GradedElement> {
    switch (g.kind) {
      case Kind::WeilTheta: return ltheta[static_cast<std::size_t>(g.i)];
      case Kind::Mu: return lmu[static_cast<std::size_t>(g.i)];
      case Kind::PiInv: return GradedElement();
      default: return std::nullopt;
    }
  };
  return d;
}

WeilComplex::WeilComplex(const LieAlgebraData& data) : data_(data), d_(weil_differential(data)) {
  for (int i = 0; i < data.dim(); ++i) {
    iota_.push_back(weil_contraction(data, i));
    lie_rule_.push_back(weil_lie_rule(data, i));
  }
}

const Derivation& WeilComplex::iota(int i) const {
  check_index(data_, i);
  return iota_[static_cast<std::size_t>(i)];
}

const Derivation& WeilComplex::lie_rule(int i) const {
  check_index(data_, i);
  return lie_rule_[static_cast<std::size_t>(i)];
}

GradedElement WeilComplex::lie(int i, const GradedElement& x) const {
  return apply_derivation(d_, apply_derivation(iota(i), x)) + apply_derivation(iota(i), apply_derivation(d_, x));
}

bool is_horizontal(const WeilComplex& w, const GradedElement& x) {
  require_kinds(x, {Kind::WeilTheta, Kind::Mu, Kind::PiInv}, "is_horizontal");
  for (int i = 0; i < w.algebra().dim(); ++i)
    if (!apply_derivation(w.iota(i), x).is_zero()) return false;
  return true;
}

bool is_basic(const WeilComplex& w, const GradedElement& x) {
  if (!is_horizontal(w, x)) return false;
  for (int i = 0; i < w.algebra().dim(); ++i)
    if (!w.lie(i, x).is_zero()) return false;
  return true;
}

GradedElement chern_weil_element(const InvariantPolynomial& p) {
  return power_form(p, lie_generators(Kind::Mu, p.dim()));
}

GradedElement chern_weil_element(const SymmetricTensor& p) {
  return power_form(p, Scale{}, lie_generators(Kind::Mu, p.dim()));
}

}  // namespace cw
