#include "cartanweil/lie_valued.hpp"

#include <algorithm>
#include <map>

namespace cw {

LieElement lie_generators(Kind kind, int n) {
  LieElement x;
  x.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x.emplace_back(Generator{kind, i, 0});
  return x;
}

LieElement lie_zero(int n) { return LieElement(static_cast<std::size_t>(n)); }

namespace {

void same_size(const LieElement& x, const LieElement& y) {
  if (x.size() != y.size()) throw DimensionMismatch("Lie-valued elements of different dimension");
}

}  // namespace

LieElement operator+(const LieElement& x, const LieElement& y) {
  same_size(x, y);
  LieElement r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

LieElement operator-(const LieElement& x, const LieElement& y) {
  same_size(x, y);
  LieElement r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
  return r;
}

LieElement operator*(const Rational& s, const LieElement& x) {
  LieElement r = x;
  for (auto& c : r) c *= s;
  return r;
}

LieElement operator*(const GradedElement& s, const LieElement& x) {
  LieElement r;
  r.reserve(x.size());
  for (const auto& c : x) r.push_back(s * c);
  return r;
}

LieElement operator*(const LieElement& x, const GradedElement& s) {
  LieElement r;
  r.reserve(x.size());
  for (const auto& c : x) r.push_back(c * s);
  return r;
}

LieElement bracket(const LieAlgebraData& data, const LieElement& x, const LieElement& y) {
  same_size(x, y);
  if (static_cast<int>(x.size()) != data.dim()) throw DimensionMismatch("bracket: dimension differs from algebra");
  std::vector<Accumulator> acc(x.size());
  for (const auto& e : data.nonzero()) {
    if (x[static_cast<std::size_t>(e.j)].is_zero() || y[static_cast<std::size_t>(e.k)].is_zero()) continue;
    acc[static_cast<std::size_t>(e.i)].add_product(x[static_cast<std::size_t>(e.j)], y[static_cast<std::size_t>(e.k)],
                                                   e.value);
  }
  LieElement r;
  r.reserve(x.size());
  for (auto& a : acc) r.push_back(a.finish());
  return r;
}

GradedElement pairing(const LieAlgebraData& data, const LieElement& x, const LieElement& y) {
  same_size(x, y);
  const int n = data.dim();
  if (static_cast<int>(x.size()) != n) throw DimensionMismatch("pairing: dimension differs from algebra");
  Accumulator acc;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational& g = data.metric()(i, j);
      if (is_zero(g)) continue;
      acc.add_product(x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(j)], g);
    }
  return acc.finish();
}

LieElement symbolic_matrix_apply(Kind matrix, const LieElement& x) {
  if (matrix != Kind::A && matrix != Kind::Abar) throw std::invalid_argument("symbolic_matrix_apply: not a matrix kind");
  const int n = static_cast<int>(x.size());
  LieElement r;
  r.reserve(x.size());
  for (int i = 0; i < n; ++i) {
    Accumulator acc;
    for (int j = 0; j < n; ++j) acc.add_product(GradedElement(Generator{matrix, i, j}), x[static_cast<std::size_t>(j)]);
    r.push_back(acc.finish());
  }
  return r;
}

LieElement matrix_apply(const RationalMatrix& m, const LieElement& x) {
  const auto n = static_cast<Eigen::Index>(x.size());
  if (m.rows() != n || m.cols() != n) throw DimensionMismatch("matrix_apply: shape mismatch");
  LieElement r;
  r.reserve(x.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    Accumulator acc;
    for (Eigen::Index j = 0; j < n; ++j) acc.add(x[static_cast<std::size_t>(j)], m(i, j));
    r.push_back(acc.finish());
  }
  return r;
}

LieElement apply_derivation(const Derivation& D, const LieElement& x) {
  LieElement r;
  r.reserve(x.size());
  for (const auto& c : x) r.push_back(apply_derivation(D, c));
  return r;
}

LieElement substitute(const LieElement& x, const Generator& g, const GradedElement& value) {
  LieElement r;
  r.reserve(x.size());
  for (const auto& c : x) r.push_back(substitute(c, g, value));
  return r;
}

LieElement integrate_parameter(const LieElement& x, const Generator& var, const Rational& lower,
                               const Rational& upper) {
  LieElement r;
  r.reserve(x.size());
  for (const auto& c : x) r.push_back(integrate_parameter(c, var, lower, upper));
  return r;
}

GradedElement scale_element(const Scale& s) {
  GradedElement r(s.coefficient);
  for (unsigned e = 0; e < s.pi_inv_power; ++e) r = r * GradedElement(gen::pi_inv);
  return r;
}

namespace {

void check_slots(const SymmetricTensor& p, const LieElement& x) {
  if (static_cast<int>(x.size()) != p.dim()) throw DimensionMismatch("polynomial argument has wrong dimension");
}

void require_even(const LieElement& y, const char* context) {
  for (const auto& c : y)
    for (const auto& t : c.terms())
      if (has_odd_parity(t.monomial))
        throw std::invalid_argument(std::string(context) + ": repeated argument must have even components");
}

// Number of distinct orderings of a sorted multiset.
Rational arrangements(const std::vector<int>& sorted) {
  Rational r(1);
  std::size_t run = 0;
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    r *= static_cast<long>(a + 1);
    run = (a > 0 && sorted[a] == sorted[a - 1]) ? run + 1 : 1;
    r /= static_cast<long>(run);
  }
  return r;
}

// Products Π_{s∈S} Y^s of commuting components, memoized by prefix.
class ProductCache {
 public:
  explicit ProductCache(const LieElement& y) : y_(y) {}

  const GradedElement& operator()(const std::vector<int>& s) {
    auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;
    GradedElement value;
    if (s.empty()) {
      value = GradedElement(1);
    } else {
      std::vector<int> prefix(s.begin(), s.end() - 1);
      const GradedElement& head = (*this)(prefix);
      value = multiply(head, y_[static_cast<std::size_t>(s.back())]);
    }
    return cache_.emplace(s, std::move(value)).first->second;
  }

 private:
  const LieElement& y_;
  std::map<std::vector<int>, GradedElement> cache_;
};

}  // namespace

GradedElement multilinear(const SymmetricTensor& p, const Scale& scale, const std::vector<LieElement>& slots) {
  if (static_cast<int>(slots.size()) != p.degree()) throw DegreeMismatch("multilinear: wrong number of arguments");
  for (const auto& x : slots) check_slots(p, x);
  Accumulator acc;
  for (const auto& [key, value] : p.entries()) {
    std::vector<int> perm = key;
    do {
      GradedElement prod(value);
      for (std::size_t s = 0; s < slots.size() && !prod.is_zero(); ++s)
        prod = multiply(prod, slots[s][static_cast<std::size_t>(perm[s])]);
      acc.add(prod);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return multiply(scale_element(scale), acc.finish());
}

GradedElement power_form(const SymmetricTensor& p, const Scale& scale, const LieElement& y) {
  check_slots(p, y);
  require_even(y, "power_form");
  ProductCache products(y);
  Accumulator acc;
  for (const auto& [key, value] : p.entries()) {
    const GradedElement& prod = products(key);
    if (!prod.is_zero()) acc.add(prod, value * arrangements(key));
  }
  return multiply(scale_element(scale), acc.finish());
}

GradedElement first_slot_form(const SymmetricTensor& p, const Scale& scale, const LieElement& x, const LieElement& y) {
  check_slots(p, x);
  check_slots(p, y);
  require_even(y, "first_slot_form");
  ProductCache products(y);
  // Σ_i X^i · Σ_S p_{i,S} arrangements(S) Π_S Y.
  std::vector<Accumulator> rest(x.size());
  for (const auto& [key, value] : p.entries()) {
    for (std::size_t a = 0; a < key.size(); ++a) {
      if (a > 0 && key[a] == key[a - 1]) continue;
      const int i = key[a];
      if (x[static_cast<std::size_t>(i)].is_zero()) continue;
      std::vector<int> others;
      others.reserve(key.size() - 1);
      for (std::size_t b = 0; b < key.size(); ++b)
        if (b != a) others.push_back(key[b]);
      const GradedElement& prod = products(others);
      if (!prod.is_zero()) rest[static_cast<std::size_t>(i)].add(prod, value * arrangements(others));
    }
  }
  Accumulator acc;
  for (std::size_t i = 0; i < x.size(); ++i) {
    GradedElement r = rest[i].finish();
    if (!r.is_zero()) acc.add_product(x[i], r);
  }
  return multiply(scale_element(scale), acc.finish());
}

GradedElement multilinear(const InvariantPolynomial& p, const std::vector<LieElement>& slots) {
  return multilinear(p.components(), p.scale(), slots);
}

GradedElement power_form(const InvariantPolynomial& p, const LieElement& y) {
  return power_form(p.components(), p.scale(), y);
}

GradedElement first_slot_form(const InvariantPolynomial& p, const LieElement& x, const LieElement& y) {
  return first_slot_form(p.components(), p.scale(), x, y);
}

}  // namespace cw
