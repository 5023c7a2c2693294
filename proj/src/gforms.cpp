#include "cartanweil/gforms.hpp"

#include "json.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <tuple>
#include <unordered_map>

namespace cw {

namespace {

void check_supported(const LieAlgebraData& data) {
  if (data.dim() > kMaxDim)
    throw UnsupportedAlgebra("dimension " + std::to_string(data.dim()) + " exceeds " + std::to_string(kMaxDim));
}

void check_index(const LieAlgebraData& data, int k) {
  if (k < 0 || k >= data.dim()) throw IndexOutOfRange("basis index " + std::to_string(k + 1) + " out of range");
}

using Table = std::vector<GradedElement>;
using MatrixTable = std::vector<std::vector<GradedElement>>;

GradedElement g(const Generator& x) { return GradedElement(x); }

MatrixTable matrix_table(int n) {
  return MatrixTable(static_cast<std::size_t>(n), Table(static_cast<std::size_t>(n)));
}

Derivation negated(const Derivation& D, std::string name) {
  Derivation r = D;
  r.name = std::move(name);
  r.action = [inner = D.action](const Generator& x) -> std::optional<GradedElement> {
    auto v = inner(x);
    if (v) return -*v;
    return v;
  };
  return r;
}

}  // namespace

Derivation gform_differential(const LieAlgebraData& data) {
  check_supported(data);
  const int n = data.dim();
  Table dTheta(static_cast<std::size_t>(n)), dHat(static_cast<std::size_t>(n));
  MatrixTable dA = matrix_table(n), dAbar = matrix_table(n);
  for (const auto& e : data.nonzero()) {
    const auto i = static_cast<std::size_t>(e.i);
    dTheta[i] += (-e.value / 2) * (g(gen::Theta(e.j)) * g(gen::Theta(e.k)));
    dHat[i] += (e.value / 2) * (g(gen::HatTheta(e.j)) * g(gen::HatTheta(e.k)));
  }
  for (int i = 0; i < n; ++i)
    for (const auto& e : data.nonzero()) {
      // dA^i_j += A^i_k c^k_{lj} Θ^l  with (k,l,j) = (e.i, e.j, e.k)
      dA[static_cast<std::size_t>(i)][static_cast<std::size_t>(e.k)] +=
          e.value * (g(gen::A(i, e.i)) * g(gen::Theta(e.j)));
      // dĀ^i_j −= c^i_{lk} Θ^l Ā^k_j  with (i,l,k) = (e.i, e.j, e.k), any j
      dAbar[static_cast<std::size_t>(e.i)][static_cast<std::size_t>(i)] -=
          e.value * (g(gen::Theta(e.j)) * g(gen::Abar(e.k, i)));
    }
  Derivation d;
  d.parity = Parity::Odd;
  d.name = "d";
  d.action = [dTheta, dHat, dA, dAbar](const Generator& x) -> std::optional<GradedElement> {
    const auto i = static_cast<std::size_t>(x.i), j = static_cast<std::size_t>(x.j);
    switch (x.kind) {
      case Kind::Theta: return dTheta[i];
      case Kind::HatTheta: return dHat[i];
      case Kind::A: return dA[i][j];
      case Kind::Abar: return dAbar[i][j];
      case Kind::Chi:
      case Kind::PiInv: return GradedElement();
      default: return std::nullopt;
    }
  };
  return d;
}

GradedElement hat_theta(const LieAlgebraData& data, int i) {
  check_index(data, i);
  Accumulator acc;
  for (int j = 0; j < data.dim(); ++j) acc.add_product(g(gen::A(i, j)), g(gen::Theta(j)));
  return acc.finish();
}

LieElement hat_theta_expanded(const LieAlgebraData& data) {
  LieElement r;
  for (int i = 0; i < data.dim(); ++i) r.push_back(hat_theta(data, i));
  return r;
}

Derivation iota_chi(const LieAlgebraData& data) {
  check_supported(data);
  const int n = data.dim();
  Table onTheta(static_cast<std::size_t>(n)), onHat(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Accumulator a, b;
    a.add(g(gen::chi(i)));
    b.add(g(gen::chi(i)), Rational(-1));
    for (int j = 0; j < n; ++j) {
      a.add_product(g(gen::Abar(i, j)), g(gen::chi(j)), Rational(-1));
      b.add_product(g(gen::A(i, j)), g(gen::chi(j)));
    }
    onTheta[static_cast<std::size_t>(i)] = a.finish();
    onHat[static_cast<std::size_t>(i)] = b.finish();
  }
  Derivation d;
  d.parity = Parity::Odd;
  d.name = "iota_chi";
  d.action = [onTheta, onHat](const Generator& x) -> std::optional<GradedElement> {
    switch (x.kind) {
      case Kind::Theta: return onTheta[static_cast<std::size_t>(x.i)];
      case Kind::HatTheta: return onHat[static_cast<std::size_t>(x.i)];
      case Kind::A:
      case Kind::Abar:
      case Kind::Chi:
      case Kind::PiInv: return GradedElement();
      default: return std::nullopt;
    }
  };
  return d;
}

Derivation form_contraction(const LieAlgebraData& data, int k) {
  check_supported(data);
  check_index(data, k);
  Derivation d;
  d.parity = Parity::Odd;
  d.name = "iota_" + std::to_string(k + 1);
  d.action = [k](const Generator& x) -> std::optional<GradedElement> {
    switch (x.kind) {
      case Kind::Theta: return GradedElement(x.i == k ? 1 : 0) - g(gen::Abar(x.i, k));
      case Kind::HatTheta: return g(gen::A(x.i, k)) - GradedElement(x.i == k ? 1 : 0);
      case Kind::A:
      case Kind::Abar:
      case Kind::Chi:
      case Kind::PiInv:
      case Kind::Alpha: return GradedElement();
      default: return std::nullopt;
    }
  };
  return d;
}

namespace {

struct LieRules {
  std::map<Kind, Table> vectors;
  std::map<Kind, MatrixTable> matrices;
};

LieRules lie_rules(const LieAlgebraData& data, int k, std::initializer_list<Kind> vector_kinds) {
  const int n = data.dim();
  LieRules rules;
  for (Kind kind : vector_kinds) {
    Table t(static_cast<std::size_t>(n));
    for (const auto& e : data.with_first_lower(k))
      t[static_cast<std::size_t>(e.i)] -= e.value * g(Generator{kind, e.k, 0});
    rules.vectors.emplace(kind, std::move(t));
  }
  for (Kind kind : {Kind::A, Kind::Abar}) {
    MatrixTable m = matrix_table(n);
    // (M ad_k − ad_k M)^i_j = Σ_l M^i_l c^l_{kj} − Σ_l c^i_{kl} M^l_j
    for (const auto& e : data.with_first_lower(k))
      for (int i = 0; i < n; ++i) {
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(e.k)] += e.value * g(Generator{kind, i, e.i});
        m[static_cast<std::size_t>(e.i)][static_cast<std::size_t>(i)] -= e.value * g(Generator{kind, e.k, i});
      }
    rules.matrices.emplace(kind, std::move(m));
  }
  return rules;
}

}  // namespace

Derivation total_lie(const LieAlgebraData& data, int k) {
  check_supported(data);
  check_index(data, k);
  auto rules = lie_rules(data, k, {Kind::Theta, Kind::HatTheta, Kind::WeilTheta, Kind::Mu, Kind::Chi});
  Derivation d;
  d.parity = Parity::Even;
  d.name = "L_total_" + std::to_string(k + 1);
  d.action = [rules](const Generator& x) -> std::optional<GradedElement> {
    if (auto it = rules.vectors.find(x.kind); it != rules.vectors.end())
      return it->second[static_cast<std::size_t>(x.i)];
    if (auto it = rules.matrices.find(x.kind); it != rules.matrices.end())
      return it->second[static_cast<std::size_t>(x.i)][static_cast<std::size_t>(x.j)];
    return GradedElement();
  };
  return d;
}

Derivation form_lie(const LieAlgebraData& data, int k) {
  check_supported(data);
  check_index(data, k);
  auto rules = lie_rules(data, k, {Kind::Theta, Kind::HatTheta});
  Derivation d;
  d.parity = Parity::Even;
  d.name = "L_" + std::to_string(k + 1);
  d.action = [rules](const Generator& x) -> std::optional<GradedElement> {
    if (auto it = rules.vectors.find(x.kind); it != rules.vectors.end())
      return it->second[static_cast<std::size_t>(x.i)];
    if (auto it = rules.matrices.find(x.kind); it != rules.matrices.end())
      return it->second[static_cast<std::size_t>(x.i)][static_cast<std::size_t>(x.j)];
    switch (x.kind) {
      case Kind::Chi:
      case Kind::PiInv:
      case Kind::Alpha:
      case Kind::T: return GradedElement();
      default: return std::nullopt;
    }
  };
  return d;
}

Derivation cartan_model_differential(const LieAlgebraData& data) {
  return derivation_sum("d_G", {gform_differential(data), negated(iota_chi(data), "-iota_chi")});
}

GFormComplex::GFormComplex(const LieAlgebraData& data)
    : data_(data),
      d_(gform_differential(data)),
      iota_chi_(cw::iota_chi(data)),
      d_G_(cartan_model_differential(data)) {
  for (int k = 0; k < data.dim(); ++k) {
    iota_.push_back(form_contraction(data, k));
    total_lie_.push_back(cw::total_lie(data, k));
    form_lie_.push_back(cw::form_lie(data, k));
  }
}

// ---------------------------------------------------------------------------

RationalMatrix rotation_factor(const LieAlgebraData& data, const RotationGenerator& rot, const Rational& tau) {
  const int n = data.dim();
  const RationalMatrix M = data.ad(rot.direction);
  const RationalMatrix S = -(M * M);
  const RationalMatrix I = RationalMatrix::Identity(n, n);
  std::vector<Rational> eigen{Rational(0)};
  for (int m : rot.multiples) eigen.push_back(rot.q * m * m);
  auto projector = [&](std::size_t a) {
    RationalMatrix P = I;
    for (std::size_t b = 0; b < eigen.size(); ++b)
      if (b != a) P = (P * (S - eigen[b] * I)) / (eigen[a] - eigen[b]);
    return P;
  };
  const Rational denom = 1 + rot.q * tau * tau;
  const Rational c1 = (1 - rot.q * tau * tau) / denom;
  const Rational s1 = 2 * tau / denom;  // sin φ / √q
  int max_multiple = 0;
  for (int m : rot.multiples) max_multiple = std::max(max_multiple, m);
  std::vector<Rational> cosm{Rational(1)}, sinm{Rational(0)};
  for (int m = 1; m <= max_multiple; ++m) {
    cosm.push_back(cosm.back() * c1 - rot.q * sinm.back() * s1);
    sinm.push_back(sinm.back() * c1 + cosm[static_cast<std::size_t>(m - 1)] * s1);
  }
  RationalMatrix result = projector(0);
  for (std::size_t a = 1; a < eigen.size(); ++a) {
    const int m = rot.multiples[a - 1];
    const RationalMatrix P = projector(a);
    result += cosm[static_cast<std::size_t>(m)] * P + (sinm[static_cast<std::size_t>(m)] / m) * (M * P);
  }
  return result;
}

bool is_adjoint_point(const LieAlgebraData& data, const AdjointPoint& point) {
  const int n = data.dim();
  if (point.A.rows() != n || point.A.cols() != n || point.Abar.rows() != n || point.Abar.cols() != n) return false;
  if (!is_identity(RationalMatrix(point.A.transpose() * point.A))) return false;
  if (!is_identity(RationalMatrix(point.A * point.Abar))) return false;
  // c^i_{jk} A^j_l A^k_m = A^i_p c^p_{lm}
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m) {
      std::vector<Rational> lhs(static_cast<std::size_t>(n)), rhs(static_cast<std::size_t>(n));
      for (const auto& e : data.nonzero()) {
        lhs[static_cast<std::size_t>(e.i)] += e.value * point.A(e.j, l) * point.A(e.k, m);
        if (e.j == l && e.k == m)
          for (int i = 0; i < n; ++i) rhs[static_cast<std::size_t>(i)] += point.A(i, e.i) * e.value;
      }
      if (lhs != rhs) return false;
    }
  return true;
}

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

Rational small_nonzero(std::mt19937_64& rng) {
  const auto num = static_cast<std::int64_t>(1 + draw(rng, 9));
  const auto den = static_cast<std::int64_t>(1 + draw(rng, 5));
  return make_rational(draw(rng, 2) ? num : -num, den);
}

}  // namespace

AdjointPoint sample_adjoint_point(const LieAlgebraData& data, std::uint64_t seed) {
  const int n = data.dim();
  AdjointPoint point{RationalMatrix::Identity(n, n), RationalMatrix::Identity(n, n)};
  if (data.is_abelian()) return point;
  if (data.rotations().empty())
    throw UnsupportedAlgebra("no rational adjoint sampling available for algebra " + data.name());
  std::mt19937_64 rng(seed);
  const int factors = 3;
  for (int f = 0; f < factors; ++f) {
    const auto& rot = data.rotations()[draw(rng, data.rotations().size())];
    const Rational tau = small_nonzero(rng);
    point.A = point.A * rotation_factor(data, rot, tau);
  }
  point.Abar = point.A.transpose();
  if (!is_adjoint_point(data, point))
    throw InvariantViolation("sampled matrix is not an adjoint point for " + data.name());
  return point;
}

Assignment sample_point(const LieAlgebraData& data, std::uint64_t seed, int sample) {
  const std::uint64_t sub = seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(sample) * 0xD1B54A32D192ED03ULL + 1;
  const AdjointPoint adj = sample_adjoint_point(data, sub);
  std::mt19937_64 rng(sub ^ 0x5851F42D4C957F2DULL);
  Assignment point;
  const int n = data.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      point[gen::A(i, j)] = adj.A(i, j);
      point[gen::Abar(i, j)] = adj.Abar(i, j);
    }
  for (int i = 0; i < n; ++i) point[gen::chi(i)] = small_nonzero(rng);
  for (int i = 0; i < n; ++i) point[gen::mu(i)] = small_nonzero(rng);
  point[gen::alpha] = small_nonzero(rng);
  point[gen::t] = small_nonzero(rng);
  point[gen::pi_inv] = small_nonzero(rng);
  return point;
}

CoefficientTable evaluate_at_point(const GradedElement& x, const Assignment& point, int dim) {
  std::unordered_map<std::uint32_t, const Rational*> values;
  for (const auto& [gen_, v] : point)
    if (!gen_.odd()) values[even_id(gen_)] = &v;
  constexpr std::uint64_t theta_mask = (std::uint64_t{1} << kMaxDim) - 1;
  constexpr std::uint64_t hat_mask = theta_mask << kMaxDim;
  // Expansion of a Θ̂ word as a combination of Θ words.
  std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint64_t, Rational>>> expansions;
  auto expand = [&](std::uint64_t hats) -> const std::vector<std::pair<std::uint64_t, Rational>>& {
    auto it = expansions.find(hats);
    if (it != expansions.end()) return it->second;
    std::map<std::uint64_t, Rational> cur{{0, Rational(1)}};
    for (std::uint64_t b = hats; b; b &= b - 1) {
      const int a = std::countr_zero(b);
      std::map<std::uint64_t, Rational> next;
      for (const auto& [mask, c] : cur)
        for (int j = 0; j < dim; ++j) {
          auto v = values.find(even_id(gen::A(a, j)));
          if (v == values.end()) throw UnassignedGenerator("evaluate_at_point: no value for " + generator_name(gen::A(a, j)));
          if (is_zero(*v->second)) continue;
          const std::uint64_t bit = std::uint64_t{1} << j;
          const int s = odd_product_sign(mask, bit);
          if (s == 0) continue;
          next[mask | bit] += s > 0 ? c * *v->second : -(c * *v->second);
        }
      cur = std::move(next);
    }
    std::vector<std::pair<std::uint64_t, Rational>> list;
    for (auto& [mask, c] : cur)
      if (!is_zero(c)) list.emplace_back(mask, std::move(c));
    return expansions.emplace(hats, std::move(list)).first->second;
  };
  CoefficientTable table;
  for (const auto& t : x.terms()) {
    Rational v = t.coeff;
    for (auto id : t.monomial.even) {
      auto it = values.find(id);
      if (it == values.end())
        throw UnassignedGenerator("evaluate_at_point: no value for " + generator_name(even_generator(id)));
      v *= *it->second;
      if (is_zero(v)) break;
    }
    if (is_zero(v)) continue;
    const std::uint64_t hats = (t.monomial.odd & hat_mask) >> kMaxDim;
    if (hats == 0) {
      table[t.monomial.odd] += v;
      continue;
    }
    const std::uint64_t thetas = t.monomial.odd & theta_mask;
    const std::uint64_t rest = t.monomial.odd & ~(theta_mask | hat_mask);
    for (const auto& [mask, c] : expand(hats)) {
      const int s = odd_product_sign(thetas, mask);
      if (s == 0) continue;
      table[thetas | mask | rest] += s > 0 ? v * c : -(v * c);
    }
  }
  for (auto it = table.begin(); it != table.end();) it = is_zero(it->second) ? table.erase(it) : std::next(it);
  return table;
}

std::string OracleWitness::to_json() const {
  nlohmann::ordered_json doc;
  doc["seed"] = seed;
  doc["sample"] = sample;
  doc["word"] = word;
  doc["value"] = to_string(value);
  nlohmann::ordered_json pt = nlohmann::ordered_json::object();
  for (const auto& [gen_, v] : point) pt[generator_name(gen_)] = to_string(v);
  doc["point"] = pt;
  return doc.dump();
}

namespace {

OracleVerdict run_oracle(const LieAlgebraData& data, const GradedElement& x, const GradedElement& y,
                         const OracleOptions& options) {
  if (options.samples < 1) throw std::invalid_argument("oracle needs at least one sample");
  const GradedElement diff = x - y;
  OracleVerdict verdict;
  verdict.seed = options.seed;
  for (int s = 0; s < options.samples; ++s) {
    const Assignment point = sample_point(data, options.seed, s);
    ++verdict.samples;
    if (diff.is_zero()) continue;
    const auto table = evaluate_at_point(diff, point, data.dim());
    if (!table.empty()) {
      verdict.equal = false;
      OracleWitness w;
      w.seed = options.seed;
      w.sample = s;
      w.word = odd_word_name(table.begin()->first);
      w.value = table.begin()->second;
      for (const auto& g_ : generators_of(diff))
        if (!g_.odd()) w.point[g_] = point.at(g_);
      verdict.witness = std::move(w);
      return verdict;
    }
  }
  return verdict;
}

}  // namespace

OracleVerdict equality_oracle(const LieAlgebraData& data, const GradedElement& x, const GradedElement& y,
                              const OracleOptions& options) {
  for (const auto* e : {&x, &y})
    require_kinds(*e, {Kind::Theta, Kind::HatTheta, Kind::A, Kind::Abar, Kind::Chi, Kind::PiInv}, "equality_oracle");
  return run_oracle(data, x, y, options);
}

OracleVerdict tensor_equality_oracle(const LieAlgebraData& data, const GradedElement& x, const GradedElement& y,
                                     const OracleOptions& options) {
  return run_oracle(data, x, y, options);
}

GradedElement contract_inverse_pairs(const GradedElement& x, int dim) {
  GradedElement cur = x;
  for (bool changed = true; changed;) {
    changed = false;
    using Key = std::tuple<Monomial, int, int, int, Rational>;
    std::map<Key, std::map<int, std::size_t>> groups;
    const auto& terms = cur.terms();
    for (std::size_t idx = 0; idx < terms.size(); ++idx) {
      const auto& even = terms[idx].monomial.even;
      for (std::size_t a = 0; a < even.size(); ++a) {
        if (a > 0 && even[a] == even[a - 1]) continue;
        const Generator ga = even_generator(even[a]);
        if (ga.kind != Kind::A && ga.kind != Kind::Abar) continue;
        const Kind partner = ga.kind == Kind::A ? Kind::Abar : Kind::A;
        for (std::size_t b = 0; b < even.size(); ++b) {
          if (b == a || (b > 0 && even[b] == even[b - 1] && b - 1 != a)) continue;
          const Generator gb = even_generator(even[b]);
          if (gb.kind != partner || gb.i != ga.j) continue;
          Monomial rest;
          rest.odd = terms[idx].monomial.odd;
          for (std::size_t c = 0; c < even.size(); ++c)
            if (c != a && c != b) rest.even.push_back(even[c]);
          Key key{rest, ga.i, gb.j, ga.kind == Kind::A ? 0 : 1, terms[idx].coeff};
          groups[key].emplace(ga.j, idx);
        }
      }
    }
    std::vector<bool> used(terms.size(), false);
    Accumulator acc;
    for (const auto& [key, members] : groups) {
      if (static_cast<int>(members.size()) != dim) continue;
      bool free = true;
      std::vector<std::size_t> seen;
      for (const auto& [k, idx] : members) {
        free = free && !used[idx] && std::find(seen.begin(), seen.end(), idx) == seen.end();
        seen.push_back(idx);
      }
      if (!free) continue;
      for (const auto& [k, idx] : members) used[idx] = true;
      if (std::get<1>(key) == std::get<2>(key)) acc.add(std::get<0>(key), std::get<4>(key));
      changed = true;
    }
    if (!changed) break;
    for (std::size_t idx = 0; idx < terms.size(); ++idx)
      if (!used[idx]) acc.add(terms[idx].monomial, terms[idx].coeff);
    cur = acc.finish();
  }
  return cur;
}

std::optional<GradedElement> invariance_rename(const LieAlgebraData& data, const GradedElement& x,
                                               const OracleOptions& options) {
  GradedElement renamed = substitute(x, [](const Generator& h) -> std::optional<GradedElement> {
    if (h.kind == Kind::HatTheta) return GradedElement(gen::Theta(h.i));
    return std::nullopt;
  });
  if (!equality_oracle(data, x, renamed, options).equal) return std::nullopt;
  return renamed;
}

}  // namespace cw
