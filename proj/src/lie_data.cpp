#include "cartanweil/lie_data.hpp"

#include "json.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace cw {

namespace {

std::string one_based(std::initializer_list<int> idx) {
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (int i : idx) {
    if (!first) out << ',';
    out << i + 1;
    first = false;
  }
  out << ')';
  return out.str();
}

}  // namespace

LieAlgebraData::LieAlgebraData(std::string name, int dim,
                               const std::vector<std::vector<std::vector<Rational>>>& structure,
                               RationalMatrix metric, std::vector<RotationGenerator> rotations)
    : name_(std::move(name)), dim_(dim), metric_(std::move(metric)), rotations_(std::move(rotations)) {
  if (dim_ <= 0) throw DimensionMismatch("dimension must be positive");
  const auto n = static_cast<std::size_t>(dim_);
  if (structure.size() != n) throw DimensionMismatch("structure constants: expected " + std::to_string(n) + " slices");
  for (const auto& slice : structure) {
    if (slice.size() != n) throw DimensionMismatch("structure constants: bad row count");
    for (const auto& row : slice)
      if (row.size() != n) throw DimensionMismatch("structure constants: bad column count");
  }
  if (metric_.rows() != dim_ || metric_.cols() != dim_)
    throw DimensionMismatch("metric must be " + std::to_string(n) + "x" + std::to_string(n));
  c_.resize(n * n * n);
  by_j_.resize(n);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        const Rational& v = structure[i][j][k];
        c_[index(i, j, k)] = v;
        if (!is_zero(v)) {
          nonzero_.push_back({i, j, k, v});
          by_j_[static_cast<std::size_t>(j)].push_back({i, j, k, v});
        }
      }
  for (const auto& r : rotations_)
    if (r.direction < 0 || r.direction >= dim_) throw DimensionMismatch("rotation direction out of range");
}

RationalMatrix LieAlgebraData::ad(int x) const {
  if (x < 0 || x >= dim_) throw IndexOutOfRange("basis index out of range");
  RationalMatrix m = RationalMatrix::Zero(dim_, dim_);
  for (const auto& e : by_j_[static_cast<std::size_t>(x)]) m(e.i, e.k) = e.value;
  return m;
}

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

const AxiomCheck& ValidationReport::check(std::string_view axiom) const {
  for (const auto& c : checks)
    if (c.axiom == axiom) return c;
  throw std::out_of_range("no such axiom: " + std::string(axiom));
}

ValidationReport validate_algebra(const LieAlgebraData& data) {
  const int n = data.dim();
  ValidationReport report;

  AxiomCheck anti{"antisymmetry", true, ""};
  for (int i = 0; i < n && anti.pass; ++i)
    for (int j = 0; j < n && anti.pass; ++j)
      for (int k = j; k < n && anti.pass; ++k)
        if (data.c(i, j, k) != -data.c(i, k, j)) {
          anti.pass = false;
          anti.detail = "c^i_{jk} != -c^i_{kj} at (i,j,k)=" + one_based({i, j, k});
        }
  report.checks.push_back(anti);

  AxiomCheck jacobi{"jacobi", true, ""};
  for (int i = 0; i < n && jacobi.pass; ++i)
    for (int j = 0; j < n && jacobi.pass; ++j)
      for (int k = 0; k < n && jacobi.pass; ++k)
        for (int l = 0; l < n && jacobi.pass; ++l) {
          Rational sum;
          for (int m = 0; m < n; ++m)
            sum += data.c(m, j, k) * data.c(i, m, l) + data.c(m, k, l) * data.c(i, m, j) +
                   data.c(m, l, j) * data.c(i, m, k);
          if (!is_zero(sum)) {
            jacobi.pass = false;
            jacobi.detail = "Jacobi sum " + to_string(sum) + " at (i,j,k,l)=" + one_based({i, j, k, l});
          }
        }
  report.checks.push_back(jacobi);

  const RationalMatrix& g = data.metric();
  AxiomCheck sym{"metric_symmetric", is_symmetric(g), ""};
  if (!sym.pass) sym.detail = "metric is not symmetric";
  report.checks.push_back(sym);

  RationalMatrix inverse;
  AxiomCheck inv{"metric_invertible", invert(g, inverse), ""};
  if (!inv.pass) inv.detail = "metric is singular";
  report.checks.push_back(inv);

  AxiomCheck adinv{"metric_invariance", true, ""};
  for (int x = 0; x < n && adinv.pass; ++x)
    for (int y = 0; y < n && adinv.pass; ++y)
      for (int z = 0; z < n && adinv.pass; ++z) {
        Rational sum;
        for (int m = 0; m < n; ++m) sum += data.c(m, x, y) * g(m, z) + g(y, m) * data.c(m, x, z);
        if (!is_zero(sum)) {
          adinv.pass = false;
          adinv.detail = "<[x,y],z> + <y,[x,z]> = " + to_string(sum) + " at (x,y,z)=" + one_based({x, y, z});
        }
      }
  report.checks.push_back(adinv);
  return report;
}

namespace {

using Structure = std::vector<std::vector<std::vector<Rational>>>;

Structure zero_structure(int n) {
  const auto s = static_cast<std::size_t>(n);
  return Structure(s, std::vector<std::vector<Rational>>(s, std::vector<Rational>(s)));
}

void set_antisymmetric(Structure& c, int i, int j, int k, const Rational& v) {
  c[i][j][k] = v;
  c[i][k][j] = -v;
}

LieAlgebraData make_abelian(int n) {
  if (n <= 0) throw UnknownAlgebra("abelian dimension must be positive");
  return LieAlgebraData("abelian(" + std::to_string(n) + ")", n, zero_structure(n), RationalMatrix::Identity(n, n));
}

LieAlgebraData make_su2() {
  Structure c = zero_structure(3);
  set_antisymmetric(c, 0, 1, 2, Rational(1));
  set_antisymmetric(c, 1, 2, 0, Rational(1));
  set_antisymmetric(c, 2, 0, 1, Rational(1));
  std::vector<RotationGenerator> rot;
  for (int d = 0; d < 3; ++d) rot.push_back({d, Rational(1), {1}});
  return LieAlgebraData("su2", 3, c, RationalMatrix::Identity(3, 3), std::move(rot));
}

// Orthonormal basis of su(3) for the metric -2 tr(XY), realised over Q(√-3):
//   ξ_1..ξ_3 = (E_ij - E_ji)/2 for (ij) = (12), (13), (23),
//   ξ_4      = (√-3/6) diag(1, 1, -2),
//   ξ_5..ξ_8 = (1/3) M·(w_1..w_4) with w = ((√-3/2)(E_ij + E_ji), (√-3/2) diag(1,-1,0))
//   and M the matrix of left multiplication by the quaternion 1 + i + j (MMᵀ = 3I).
// All structure constants are ±1/2.
LieAlgebraData make_su3() {
  struct Raw {
    int i, j, k, sign;
  };
  static constexpr Raw raw[] = {
      {0, 1, 2, -1}, {0, 4, 5, -1}, {0, 4, 6, 1},  {0, 5, 6, 1},  {0, 5, 7, 1},  {0, 6, 7, 1},
      {1, 0, 2, 1},  {1, 3, 4, 1},  {1, 3, 5, -1}, {1, 3, 7, -1}, {1, 4, 6, -1}, {1, 5, 7, 1},
      {2, 0, 1, -1}, {2, 3, 4, 1},  {2, 3, 6, -1}, {2, 3, 7, 1},  {2, 4, 5, -1}, {2, 6, 7, -1},
      {3, 1, 4, -1}, {3, 1, 5, 1},  {3, 1, 7, 1},  {3, 2, 4, -1}, {3, 2, 6, 1},  {3, 2, 7, -1},
      {4, 0, 5, 1},  {4, 0, 6, -1}, {4, 1, 3, 1},  {4, 1, 6, 1},  {4, 2, 3, 1},  {4, 2, 5, 1},
      {5, 0, 4, -1}, {5, 0, 6, -1}, {5, 0, 7, -1}, {5, 1, 3, -1}, {5, 1, 7, -1}, {5, 2, 4, -1},
      {6, 0, 4, 1},  {6, 0, 5, 1},  {6, 0, 7, -1}, {6, 1, 4, -1}, {6, 2, 3, -1}, {6, 2, 7, 1},
      {7, 0, 5, 1},  {7, 0, 6, 1},  {7, 1, 3, -1}, {7, 1, 5, 1},  {7, 2, 3, 1},  {7, 2, 6, -1},
  };
  Structure c = zero_structure(8);
  for (const auto& r : raw) set_antisymmetric(c, r.i, r.j, r.k, make_rational(r.sign, 2));
  // ad(ξ_d)^2 has eigenvalues -1/4, -1 (d = 1,2,3,8) or -3/4 (d = 4,5).
  std::vector<RotationGenerator> rot;
  for (int d : {0, 1, 2, 7}) rot.push_back({d, make_rational(1, 4), {1, 2}});
  for (int d : {3, 4}) rot.push_back({d, make_rational(3, 4), {1}});
  return LieAlgebraData("su3", 8, c, RationalMatrix::Identity(8, 8), std::move(rot));
}

}  // namespace

LieAlgebraData builtin_algebra(std::string_view name) {
  std::string s(name);
  if (s == "su2") return make_su2();
  if (s == "su3") return make_su3();
  auto parse_dim = [&](std::string_view digits) -> int {
    if (digits.empty() || digits.size() > 3) throw UnknownAlgebra("unknown algebra '" + s + "'");
    int v = 0;
    for (char ch : digits) {
      if (ch < '0' || ch > '9') throw UnknownAlgebra("unknown algebra '" + s + "'");
      v = v * 10 + (ch - '0');
    }
    return v;
  };
  if (s.rfind("abelian:", 0) == 0) return make_abelian(parse_dim(std::string_view(s).substr(8)));
  if (s.rfind("abelian(", 0) == 0 && s.back() == ')')
    return make_abelian(parse_dim(std::string_view(s).substr(8, s.size() - 9)));
  throw UnknownAlgebra("unknown algebra '" + s + "' (expected su2, su3, abelian:n)");
}

namespace {

Rational json_rational(const nlohmann::json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  throw std::invalid_argument("expected an integer or a \"num/den\" string, got " + v.dump());
}

}  // namespace

LieAlgebraData parse_algebra_json(std::string_view text) {
  const auto doc = nlohmann::json::parse(text);
  const std::string name = doc.value("name", std::string("custom"));
  const int n = doc.at("dim").get<int>();
  if (n <= 0) throw DimensionMismatch("dim must be positive");
  Structure c = zero_structure(n);
  for (const auto& entry : doc.value("c", nlohmann::json::array())) {
    if (!entry.is_array() || entry.size() != 4) throw std::invalid_argument("c entries are [i,j,k,value]");
    const int i = entry[0].get<int>() - 1, j = entry[1].get<int>() - 1, k = entry[2].get<int>() - 1;
    for (int idx : {i, j, k})
      if (idx < 0 || idx >= n) throw DimensionMismatch("structure-constant index out of range: " + entry.dump());
    const Rational v = json_rational(entry[3]);
    if (j == k) {
      if (!is_zero(v)) throw std::invalid_argument("c^i_{jj} must vanish: " + entry.dump());
      continue;
    }
    set_antisymmetric(c, i, j, k, v);
  }
  const auto& rows = doc.at("metric");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
    throw DimensionMismatch("metric must have " + std::to_string(n) + " rows");
  RationalMatrix g(n, n);
  for (int a = 0; a < n; ++a) {
    const auto& row = rows[static_cast<std::size_t>(a)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      throw DimensionMismatch("metric row " + std::to_string(a + 1) + " has wrong length");
    for (int b = 0; b < n; ++b) g(a, b) = json_rational(row[static_cast<std::size_t>(b)]);
  }
  // Files naming a builtin inherit its sampling directions only if the data match.
  std::vector<RotationGenerator> rotations;
  if (name == "su2" || name == "su3") {
    const auto builtin = builtin_algebra(name);
    bool same = builtin.dim() == n && builtin.metric() == g;
    for (int i = 0; same && i < n; ++i)
      for (int j = 0; same && j < n; ++j)
        for (int k = 0; same && k < n; ++k) same = builtin.c(i, j, k) == c[i][j][k];
    if (same) rotations = builtin.rotations();
  }
  return LieAlgebraData(name, n, c, g, std::move(rotations));
}

std::string algebra_to_json(const LieAlgebraData& data) {
  nlohmann::json doc;
  doc["name"] = data.name();
  doc["dim"] = data.dim();
  auto entries = nlohmann::json::array();
  for (const auto& e : data.nonzero())
    if (e.j < e.k) entries.push_back({e.i + 1, e.j + 1, e.k + 1, to_string(e.value)});
  doc["c"] = entries;
  auto rows = nlohmann::json::array();
  for (int a = 0; a < data.dim(); ++a) {
    auto row = nlohmann::json::array();
    for (int b = 0; b < data.dim(); ++b) row.push_back(to_string(data.metric()(a, b)));
    rows.push_back(row);
  }
  doc["metric"] = rows;
  return doc.dump();
}

// ---------------------------------------------------------------------------

SymmetricTensor::SymmetricTensor(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim <= 0) throw DimensionMismatch("tensor dimension must be positive");
  if (degree <= 0) throw DegreeMismatch("tensor degree must be positive");
}

void SymmetricTensor::set(std::vector<int> indices, const Rational& value) {
  if (static_cast<int>(indices.size()) != degree_) throw DegreeMismatch("index tuple has wrong length");
  for (int i : indices)
    if (i < 0 || i >= dim_) throw IndexOutOfRange("tensor index out of range");
  std::sort(indices.begin(), indices.end());
  if (cw::is_zero(value))
    entries_.erase(indices);
  else
    entries_[indices] = value;
}

Rational SymmetricTensor::value(std::span<const int> indices) const {
  std::vector<int> key(indices.begin(), indices.end());
  std::sort(key.begin(), key.end());
  const auto it = entries_.find(key);
  return it == entries_.end() ? Rational(0) : it->second;
}

namespace {

Rational invariance_residual(const LieAlgebraData& data, const SymmetricTensor& p, int x, std::vector<int> tuple) {
  Rational sum;
  for (std::size_t slot = 0; slot < tuple.size(); ++slot) {
    const int original = tuple[slot];
    // Σ_m c^m_{x i_slot} p_{..m..}
    for (const auto& e : data.with_first_lower(x)) {
      if (e.k != original) continue;
      tuple[slot] = e.i;
      sum += e.value * p.value(tuple);
    }
    tuple[slot] = original;
  }
  return sum;
}

bool next_sorted_tuple(std::vector<int>& t, int n) {
  int pos = static_cast<int>(t.size()) - 1;
  while (pos >= 0 && t[static_cast<std::size_t>(pos)] == n - 1) --pos;
  if (pos < 0) return false;
  const int v = t[static_cast<std::size_t>(pos)] + 1;
  for (std::size_t q = static_cast<std::size_t>(pos); q < t.size(); ++q) t[q] = v;
  return true;
}

std::size_t multiset_count(int n, int k) {
  // C(n + k - 1, k), saturating.
  long double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n + k - i) / i;
  return r > 1e18L ? static_cast<std::size_t>(-1) : static_cast<std::size_t>(r + 0.5L);
}

}  // namespace

std::optional<InvarianceViolation> find_invariance_violation(const LieAlgebraData& data, const SymmetricTensor& p,
                                                             std::size_t exhaustive_limit, std::uint64_t seed) {
  if (p.dim() != data.dim()) throw DimensionMismatch("tensor dimension differs from algebra dimension");
  const int n = data.dim(), k = p.degree();
  if (data.is_abelian()) return std::nullopt;
  // The residual is symmetric in the tuple, so sorted tuples suffice.
  if (multiset_count(n, k) * static_cast<std::size_t>(n) <= exhaustive_limit) {
    std::vector<int> tuple(static_cast<std::size_t>(k), 0);
    do {
      for (int x = 0; x < n; ++x) {
        Rational r = invariance_residual(data, p, x, tuple);
        if (!is_zero(r)) return InvarianceViolation{x, tuple, r};
      }
    } while (next_sorted_tuple(tuple, n));
    return std::nullopt;
  }
  std::mt19937_64 rng(seed);
  const std::size_t trials = exhaustive_limit / static_cast<std::size_t>(n) + 1;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<int> tuple(static_cast<std::size_t>(k));
    for (auto& i : tuple) i = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    for (int x = 0; x < n; ++x) {
      Rational r = invariance_residual(data, p, x, tuple);
      if (!is_zero(r)) return InvarianceViolation{x, tuple, r};
    }
  }
  return std::nullopt;
}

InvariantPolynomial::InvariantPolynomial(const LieAlgebraData& data, SymmetricTensor components, Scale scale,
                                         std::string label)
    : components_(std::move(components)), scale_(std::move(scale)), label_(std::move(label)) {
  if (components_.dim() != data.dim()) throw DimensionMismatch("polynomial dimension differs from algebra dimension");
  if (auto v = find_invariance_violation(data, components_)) {
    std::ostringstream msg;
    msg << "tensor is not ad-invariant: x=" << v->x + 1 << " tuple=(";
    for (std::size_t i = 0; i < v->indices.size(); ++i) msg << (i ? "," : "") << v->indices[i] + 1;
    msg << ") residual=" << to_string(v->residual);
    throw NotInvariant(msg.str());
  }
}

InvariantPolynomial InvariantPolynomial::scaled(const Scale& extra, std::string label) const {
  InvariantPolynomial copy = *this;
  copy.scale_.coefficient *= extra.coefficient;
  copy.scale_.pi_inv_power += extra.pi_inv_power;
  copy.label_ = std::move(label);
  return copy;
}

InvariantPolynomial metric_polynomial(const LieAlgebraData& data, Scale scale) {
  SymmetricTensor t(data.dim(), 2);
  for (int i = 0; i < data.dim(); ++i)
    for (int j = i; j < data.dim(); ++j) t.set({i, j}, data.metric()(i, j));
  std::string label = "metric";
  if (!(scale.coefficient == 1 && scale.pi_inv_power == 0)) label = "metric*scale";
  return InvariantPolynomial(data, std::move(t), std::move(scale), label);
}

namespace {

// Σ over perfect matchings of `idx` of Π g(idx_a, idx_b).
Rational matching_sum(const RationalMatrix& g, std::vector<int>& idx) {
  if (idx.empty()) return Rational(1);
  Rational total;
  const int first = idx.front();
  for (std::size_t partner = 1; partner < idx.size(); ++partner) {
    const Rational& w = g(first, idx[partner]);
    if (is_zero(w)) continue;
    std::vector<int> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t q = 1; q < idx.size(); ++q)
      if (q != partner) rest.push_back(idx[q]);
    total += w * matching_sum(g, rest);
  }
  return total;
}

}  // namespace

InvariantPolynomial sym_power_polynomial(const LieAlgebraData& data, int k) {
  if (k < 2 || k % 2 != 0) throw DegreeMismatch("sym_power requires an even degree >= 2, got " + std::to_string(k));
  const int n = data.dim();
  Rational double_factorial(1);
  for (int m = k - 1; m > 1; m -= 2) double_factorial *= m;
  SymmetricTensor t(n, k);
  std::vector<int> tuple(static_cast<std::size_t>(k), 0);
  do {
    std::vector<int> copy = tuple;
    const Rational v = matching_sum(data.metric(), copy);
    if (!is_zero(v)) t.set(tuple, v / double_factorial);
  } while (next_sorted_tuple(tuple, n));
  return InvariantPolynomial(data, std::move(t), {}, "sym_power:" + std::to_string(k));
}

InvariantPolynomial su3_cubic_polynomial(const LieAlgebraData& data) {
  if (data.name() != "su3" || data.dim() != 8) throw UnsupportedAlgebra("the cubic invariant is defined for su3 only");
  // 12·tr(ξ_a{ξ_b,ξ_c})/√-3 in the builtin basis.
  struct Raw {
    int a, b, c, v;
  };
  static constexpr Raw raw[] = {
      {0, 0, 3, -2}, {0, 1, 4, 1},  {0, 1, 6, -1}, {0, 1, 7, 1},  {0, 2, 4, -1}, {0, 2, 5, 1},  {0, 2, 7, 1},
      {1, 1, 3, 1},  {1, 1, 5, 1},  {1, 1, 6, -1}, {1, 1, 7, -1}, {1, 2, 4, -1}, {1, 2, 5, -1}, {1, 2, 6, -1},
      {2, 2, 3, 1},  {2, 2, 5, -1}, {2, 2, 6, 1},  {2, 2, 7, 1},  {3, 3, 3, 2},  {3, 4, 5, -1}, {3, 4, 6, -1},
      {3, 5, 5, -1}, {3, 5, 7, 1},  {3, 6, 6, -1}, {3, 6, 7, -1}, {4, 4, 4, -2}, {4, 5, 6, 1},  {4, 7, 7, 2},
      {5, 5, 5, 1},  {5, 5, 6, -1}, {5, 5, 7, 1},  {5, 6, 6, -1}, {6, 6, 6, 1},  {6, 6, 7, -1},
  };
  SymmetricTensor t(8, 3);
  for (const auto& r : raw) t.set({r.a, r.b, r.c}, Rational(r.v));
  return InvariantPolynomial(data, std::move(t), {}, "cubic");
}

InvariantPolynomial symmetrized_product(const LieAlgebraData& data, const InvariantPolynomial& p,
                                        const InvariantPolynomial& q) {
  const int a = p.degree(), b = q.degree(), k = a + b, n = data.dim();
  Rational binom(1);
  for (int i = 1; i <= a; ++i) binom = binom * (k - a + i) / i;
  SymmetricTensor t(n, k);
  std::vector<int> tuple(static_cast<std::size_t>(k), 0);
  do {
    Rational sum;
    // Σ over a-subsets S of slot positions of p(S) q(complement).
    std::vector<bool> choose(static_cast<std::size_t>(k), false);
    std::fill(choose.begin(), choose.begin() + a, true);
    do {
      std::vector<int> left, right;
      for (int s = 0; s < k; ++s) (choose[static_cast<std::size_t>(s)] ? left : right).push_back(tuple[static_cast<std::size_t>(s)]);
      const Rational lv = p.components().value(left);
      if (!is_zero(lv)) sum += lv * q.components().value(right);
    } while (std::prev_permutation(choose.begin(), choose.end()));
    if (!is_zero(sum)) t.set(tuple, sum / binom);
  } while (next_sorted_tuple(tuple, n));
  Scale s{p.scale().coefficient * q.scale().coefficient, p.scale().pi_inv_power + q.scale().pi_inv_power};
  return InvariantPolynomial(data, std::move(t), s, p.label() + "*" + q.label());
}

InvariantPolynomial zero_polynomial(const LieAlgebraData& data, int k) {
  return InvariantPolynomial(data, SymmetricTensor(data.dim(), k), {}, "zero");
}

SymmetricTensor random_symmetric_tensor(int dim, int degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SymmetricTensor t(dim, degree);
  std::vector<int> tuple(static_cast<std::size_t>(degree), 0);
  do {
    const auto r = static_cast<std::int64_t>(rng() % 7) - 3;
    if (r != 0) t.set(tuple, Rational(r));
  } while (next_sorted_tuple(tuple, dim));
  return t;
}

}  // namespace cw
