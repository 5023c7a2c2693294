#include "cartanweil/graded.hpp"

#include "json.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace cw {

namespace {

constexpr int kLoopBit = 3 * kMaxDim;
constexpr int kDtBit = 3 * kMaxDim + 1;

void check_index(int i) {
  if (i < 0 || i >= kMaxDim) throw IndexOutOfRange("generator index out of range: " + std::to_string(i));
}

}  // namespace

int odd_bit(const Generator& g) {
  switch (g.kind) {
    case Kind::Theta: check_index(g.i); return g.i;
    case Kind::HatTheta: check_index(g.i); return kMaxDim + g.i;
    case Kind::WeilTheta: check_index(g.i); return 2 * kMaxDim + g.i;
    case Kind::LoopDTheta: return kLoopBit;
    case Kind::Dt: return kDtBit;
    default: throw std::invalid_argument("odd_bit: generator is even");
  }
}

Generator odd_generator_at(int bit) {
  if (bit < kMaxDim) return {Kind::Theta, bit, 0};
  if (bit < 2 * kMaxDim) return {Kind::HatTheta, bit - kMaxDim, 0};
  if (bit < 3 * kMaxDim) return {Kind::WeilTheta, bit - 2 * kMaxDim, 0};
  if (bit == kLoopBit) return gen::dtheta;
  if (bit == kDtBit) return gen::dt;
  throw std::invalid_argument("odd_generator_at: bad bit");
}

std::uint32_t even_id(const Generator& g) {
  if (g.odd()) throw std::invalid_argument("even_id: generator is odd");
  if (g.i < 0 || g.i > 255 || g.j < 0 || g.j > 255) throw IndexOutOfRange("generator index out of range");
  return (static_cast<std::uint32_t>(g.kind) << 16) | (static_cast<std::uint32_t>(g.i) << 8) |
         static_cast<std::uint32_t>(g.j);
}

Generator even_generator(std::uint32_t id) {
  return {static_cast<Kind>(id >> 16), static_cast<int>((id >> 8) & 0xFF), static_cast<int>(id & 0xFF)};
}

std::string generator_name(const Generator& g) {
  auto idx = [](int i) { return std::to_string(i + 1); };
  switch (g.kind) {
    case Kind::Theta: return "Theta_" + idx(g.i);
    case Kind::HatTheta: return "HatTheta_" + idx(g.i);
    case Kind::WeilTheta: return "theta_" + idx(g.i);
    case Kind::Mu: return "mu_" + idx(g.i);
    case Kind::LoopDTheta: return "dtheta";
    case Kind::Dt: return "dt";
    case Kind::Chi: return "chi_" + idx(g.i);
    case Kind::Alpha: return "alpha";
    case Kind::T: return "t";
    case Kind::PiInv: return "pi_inv";
    case Kind::A:
    case Kind::Abar: {
      const std::string base = g.kind == Kind::A ? "A_" : "Abar_";
      if (g.i < 9 && g.j < 9) return base + idx(g.i) + idx(g.j);
      return base + idx(g.i) + "_" + idx(g.j);
    }
  }
  return "?";
}

Generator parse_generator(std::string_view name) {
  auto fail = [&]() -> Generator { throw std::invalid_argument("unknown generator name '" + std::string(name) + "'"); };
  auto number = [&](std::string_view s) {
    if (s.empty() || s.size() > 3) fail();
    int v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') fail();
      v = v * 10 + (c - '0');
    }
    if (v < 1) fail();
    return v - 1;
  };
  if (name == "dtheta") return gen::dtheta;
  if (name == "dt") return gen::dt;
  if (name == "alpha") return gen::alpha;
  if (name == "t") return gen::t;
  if (name == "pi_inv") return gen::pi_inv;
  const auto us = name.find('_');
  if (us == std::string_view::npos) return fail();
  const std::string_view head = name.substr(0, us), rest = name.substr(us + 1);
  if (head == "Theta") return gen::Theta(number(rest));
  if (head == "HatTheta") return gen::HatTheta(number(rest));
  if (head == "theta") return gen::theta(number(rest));
  if (head == "mu") return gen::mu(number(rest));
  if (head == "chi") return gen::chi(number(rest));
  if (head == "A" || head == "Abar") {
    const Kind k = head == "A" ? Kind::A : Kind::Abar;
    const auto us2 = rest.find('_');
    if (us2 != std::string_view::npos) return {k, number(rest.substr(0, us2)), number(rest.substr(us2 + 1))};
    if (rest.size() != 2) return fail();
    return {k, number(rest.substr(0, 1)), number(rest.substr(1, 1))};
  }
  return fail();
}

int Monomial::degree() const {
  int d = std::popcount(odd);
  for (auto id : even) d += even_generator(id).degree();
  return d;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = m.odd * 0x9E3779B97F4A7C15ULL;
  for (auto id : m.even) h = (h ^ id) * 0x100000001B3ULL + (h >> 29);
  return static_cast<std::size_t>(h ^ (h >> 32));
}

int odd_product_sign(std::uint64_t a, std::uint64_t b) {
  if (a & b) return 0;
  int inversions = 0;
  while (b) {
    const int y = std::countr_zero(b);
    b &= b - 1;
    if (y < 63) inversions += std::popcount(a >> (y + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

namespace {

using EvenVec = boost::container::small_vector<std::uint32_t, 6>;

EvenVec merge_even(const EvenVec& a, const EvenVec& b) {
  EvenVec out;
  out.resize(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), out.begin());
  return out;
}

void sort_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.monomial < y.monomial; });
}

}  // namespace

GradedElement::GradedElement(const Rational& scalar) {
  if (!cw::is_zero(scalar)) terms_.push_back({Monomial{}, scalar});
}

GradedElement::GradedElement(const Generator& g) {
  Monomial m;
  if (g.odd())
    m.odd = std::uint64_t{1} << odd_bit(g);
  else
    m.even.push_back(even_id(g));
  terms_.push_back({std::move(m), Rational(1)});
}

GradedElement GradedElement::normalize(const std::vector<std::pair<Rational, std::vector<Generator>>>& raw) {
  Accumulator acc;
  for (const auto& [c, word] : raw) {
    Monomial m;
    int sign = 1;
    for (const auto& g : word) {
      if (g.odd()) {
        const std::uint64_t bit = std::uint64_t{1} << odd_bit(g);
        sign *= odd_product_sign(m.odd, bit);
        if (sign == 0) break;
        m.odd |= bit;
      } else {
        m.even.push_back(even_id(g));
      }
    }
    if (sign == 0) continue;
    std::sort(m.even.begin(), m.even.end());
    acc.add(std::move(m), sign > 0 ? c : Rational(-c));
  }
  return acc.finish();
}

GradedElement GradedElement::from_sorted_terms(std::vector<Term> terms) {
  GradedElement x;
  x.terms_ = std::move(terms);
  return x;
}

Rational GradedElement::constant() const { return coefficient(Monomial{}); }

Rational GradedElement::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.monomial < key; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return Rational(0);
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->monomial < ib->monomial)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->monomial < ia->monomial) {
      out.push_back({ib->monomial, subtract ? Rational(-ib->coeff) : ib->coeff});
      ++ib;
    } else {
      Rational c = subtract ? ia->coeff - ib->coeff : ia->coeff + ib->coeff;
      if (!is_zero(c)) out.push_back({ia->monomial, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

GradedElement& GradedElement::operator+=(const GradedElement& o) {
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& o) {
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

GradedElement& GradedElement::operator*=(const Rational& s) {
  if (cw::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= s;
  return *this;
}

GradedElement GradedElement::operator-() const {
  GradedElement r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

bool operator==(const GradedElement& a, const GradedElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
GradedElement operator*(const GradedElement& a, const GradedElement& b) { return multiply(a, b); }
GradedElement operator*(GradedElement a, const Rational& s) { return a *= s; }
GradedElement operator*(const Rational& s, GradedElement a) { return a *= s; }

GradedElement multiply(const GradedElement& a, const GradedElement& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1 && a.terms().front().monomial == Monomial{}) return b * a.terms().front().coeff;
  if (b.size() == 1 && b.terms().front().monomial == Monomial{}) return a * b.terms().front().coeff;
  Accumulator acc;
  acc.add_product(a, b);
  return acc.finish();
}

void Accumulator::add(const Monomial& m, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = map_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void Accumulator::add(Monomial&& m, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = map_.try_emplace(std::move(m), c);
  if (!inserted) it->second += c;
}

void Accumulator::add(const GradedElement& x, const Rational& scale) {
  if (is_zero(scale)) return;
  const bool unit = scale == 1;
  for (const auto& t : x.terms()) add(t.monomial, unit ? t.coeff : t.coeff * scale);
}

void Accumulator::add_product(const GradedElement& x, const GradedElement& y, const Rational& scale) {
  if (is_zero(scale)) return;
  for (const auto& tx : x.terms()) {
    const Rational cx = tx.coeff * scale;
    for (const auto& ty : y.terms()) {
      const int s = odd_product_sign(tx.monomial.odd, ty.monomial.odd);
      if (s == 0) continue;
      Monomial m;
      m.odd = tx.monomial.odd | ty.monomial.odd;
      m.even = merge_even(tx.monomial.even, ty.monomial.even);
      Rational c = cx * ty.coeff;
      if (s < 0) c = -c;
      add(std::move(m), c);
    }
  }
}

GradedElement Accumulator::finish() {
  std::vector<Term> terms;
  terms.reserve(map_.size());
  for (auto& [m, c] : map_)
    if (!is_zero(c)) terms.push_back({m, std::move(c)});
  map_.clear();
  sort_terms(terms);
  return GradedElement::from_sorted_terms(std::move(terms));
}

bool has_odd_parity(const Monomial& m) { return (std::popcount(m.odd) & 1) != 0; }

std::map<int, GradedElement> degree_decomposition(const GradedElement& x) {
  std::map<int, std::vector<Term>> parts;
  for (const auto& t : x.terms()) parts[t.monomial.degree()].push_back(t);
  std::map<int, GradedElement> out;
  for (auto& [d, terms] : parts) out.emplace(d, GradedElement::from_sorted_terms(std::move(terms)));
  return out;
}

std::optional<int> homogeneous_degree(const GradedElement& x) {
  std::optional<int> deg;
  for (const auto& t : x.terms()) {
    const int d = t.monomial.degree();
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg ? deg : std::optional<int>(0);
}

std::vector<Generator> generators_of(const GradedElement& x) {
  std::uint64_t odd = 0;
  std::vector<std::uint32_t> even;
  for (const auto& t : x.terms()) {
    odd |= t.monomial.odd;
    even.insert(even.end(), t.monomial.even.begin(), t.monomial.even.end());
  }
  std::sort(even.begin(), even.end());
  even.erase(std::unique(even.begin(), even.end()), even.end());
  std::vector<Generator> out;
  for (std::uint64_t m = odd; m; m &= m - 1) out.push_back(odd_generator_at(std::countr_zero(m)));
  for (auto id : even) out.push_back(even_generator(id));
  std::sort(out.begin(), out.end());
  return out;
}

bool uses_kind(const GradedElement& x, Kind k) {
  for (const auto& g : generators_of(x))
    if (g.kind == k) return true;
  return false;
}

void require_kinds(const GradedElement& x, std::initializer_list<Kind> allowed, std::string_view context) {
  for (const auto& g : generators_of(x))
    if (std::find(allowed.begin(), allowed.end(), g.kind) == allowed.end())
      throw ForeignGenerator(std::string(context) + ": generator " + generator_name(g) + " is not allowed here");
}

namespace {

std::uint32_t cache_key(const Generator& g) {
  return g.odd() ? (0x80000000U | static_cast<std::uint32_t>(odd_bit(g))) : even_id(g);
}

class ActionCache {
 public:
  explicit ActionCache(const Derivation& D) : D_(D) {}

  const GradedElement& operator()(const Generator& g) {
    const auto key = cache_key(g);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto value = D_.action(g);
    if (!value) throw MissingAction("derivation " + D_.name + " has no rule for " + generator_name(g));
    return cache_.emplace(key, std::move(*value)).first->second;
  }

 private:
  const Derivation& D_;
  std::unordered_map<std::uint32_t, GradedElement> cache_;
};

}  // namespace

GradedElement apply_derivation(const Derivation& D, const GradedElement& x) {
  ActionCache act(D);
  const bool odd_D = D.parity == Parity::Odd;
  Accumulator acc;
  for (const auto& term : x.terms()) {
    const auto& even = term.monomial.even;
    const std::uint64_t word = term.monomial.odd;
    // Even factors commute with everything, so D passes them without sign.
    for (std::size_t p = 0; p < even.size();) {
      std::size_t q = p;
      while (q < even.size() && even[q] == even[p]) ++q;
      const GradedElement& image = act(even_generator(even[p]));
      if (!image.is_zero()) {
        EvenVec rest;
        rest.insert(rest.end(), even.begin(), even.begin() + static_cast<std::ptrdiff_t>(p));
        rest.insert(rest.end(), even.begin() + static_cast<std::ptrdiff_t>(p) + 1, even.end());
        const Rational c = term.coeff * static_cast<long>(q - p);
        for (const auto& u : image.terms()) {
          const int s = odd_product_sign(u.monomial.odd, word);
          if (s == 0) continue;
          Monomial m;
          m.odd = u.monomial.odd | word;
          m.even = merge_even(rest, u.monomial.even);
          Rational v = c * u.coeff;
          if (s < 0) v = -v;
          acc.add(std::move(m), v);
        }
      }
      p = q;
    }
    int passed = 0;
    for (std::uint64_t bits = word; bits; bits &= bits - 1, ++passed) {
      const int b = std::countr_zero(bits);
      const GradedElement& image = act(odd_generator_at(b));
      if (image.is_zero()) continue;
      const std::uint64_t low = word & ((std::uint64_t{1} << b) - 1);
      const std::uint64_t high = word & ~((std::uint64_t{2} << b) - 1);
      const int sign_D = (odd_D && (passed & 1)) ? -1 : 1;
      for (const auto& u : image.terms()) {
        const int s1 = odd_product_sign(low, u.monomial.odd);
        if (s1 == 0) continue;
        const int s2 = odd_product_sign(low | u.monomial.odd, high);
        if (s2 == 0) continue;
        Monomial m;
        m.odd = low | u.monomial.odd | high;
        m.even = merge_even(even, u.monomial.even);
        Rational v = term.coeff * u.coeff;
        if (sign_D * s1 * s2 < 0) v = -v;
        acc.add(std::move(m), v);
      }
    }
  }
  return acc.finish();
}

Derivation derivation_sum(std::string name, const std::vector<Derivation>& parts) {
  for (const auto& p : parts)
    if (p.parity != parts.front().parity) throw std::invalid_argument("derivation_sum: mixed parity");
  Derivation sum;
  sum.parity = parts.empty() ? Parity::Odd : parts.front().parity;
  sum.name = std::move(name);
  sum.action = [parts](const Generator& g) -> std::optional<GradedElement> {
    std::optional<GradedElement> total;
    for (const auto& p : parts) {
      auto v = p.action(g);
      if (!v) continue;
      if (total)
        *total += *v;
      else
        total = std::move(v);
    }
    return total;
  };
  return sum;
}

GradedElement substitute(const GradedElement& x,
                         const std::function<std::optional<GradedElement>(const Generator&)>& rule) {
  std::unordered_map<std::uint32_t, std::optional<GradedElement>> cache;
  auto lookup = [&](const Generator& g) -> const std::optional<GradedElement>& {
    const auto key = cache_key(g);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto v = rule(g);
    if (v && g.odd())
      for (const auto& t : v->terms())
        if (!has_odd_parity(t.monomial))
          throw std::invalid_argument("substitute: odd generator " + generator_name(g) + " replaced by even terms");
    return cache.emplace(key, std::move(v)).first->second;
  };
  Accumulator acc;
  for (const auto& term : x.terms()) {
    Monomial kept;
    std::vector<const GradedElement*> factors_even;
    for (auto id : term.monomial.even) {
      const auto& r = lookup(even_generator(id));
      if (r)
        factors_even.push_back(&*r);
      else
        kept.even.push_back(id);
    }
    GradedElement cur = GradedElement::from_sorted_terms({Term{kept, term.coeff}});
    for (const auto* f : factors_even) cur = multiply(cur, *f);
    for (std::uint64_t bits = term.monomial.odd; bits; bits &= bits - 1) {
      const Generator g = odd_generator_at(std::countr_zero(bits));
      const auto& r = lookup(g);
      cur = multiply(cur, r ? *r : GradedElement(g));
      if (cur.is_zero()) break;
    }
    acc.add(cur);
  }
  return acc.finish();
}

GradedElement substitute(const GradedElement& x, const Generator& g, const GradedElement& value) {
  return substitute(x, [&](const Generator& h) -> std::optional<GradedElement> {
    if (h == g) return value;
    return std::nullopt;
  });
}

GradedElement integrate_parameter(const GradedElement& x, const Generator& var, const Rational& lower,
                                  const Rational& upper) {
  if (var.odd() || var.degree() != 0)
    throw std::invalid_argument("integrate_parameter: " + generator_name(var) + " is not an even degree-0 generator");
  const auto id = even_id(var);
  std::vector<Rational> cache;
  auto weight = [&](std::size_t e) -> const Rational& {
    while (cache.size() <= e) {
      const auto n = static_cast<unsigned>(cache.size() + 1);
      cache.push_back((pow(upper, n) - pow(lower, n)) / Rational(n));
    }
    return cache[e];
  };
  Accumulator acc;
  for (const auto& t : x.terms()) {
    Monomial m;
    m.odd = t.monomial.odd;
    std::size_t e = 0;
    for (auto g : t.monomial.even) {
      if (g == id)
        ++e;
      else
        m.even.push_back(g);
    }
    acc.add(std::move(m), t.coeff * weight(e));
  }
  return acc.finish();
}

GradedElement right_coefficient(const GradedElement& x, const Generator& g) {
  const int b = odd_bit(g);
  const std::uint64_t bit = std::uint64_t{1} << b;
  const std::uint64_t above = ~((std::uint64_t{2} << b) - 1);
  std::vector<Term> out;
  for (const auto& t : x.terms()) {
    if (!(t.monomial.odd & bit)) continue;
    Monomial m = t.monomial;
    m.odd &= ~bit;
    const bool flip = (std::popcount(t.monomial.odd & above) & 1) != 0;
    out.push_back({std::move(m), flip ? Rational(-t.coeff) : t.coeff});
  }
  sort_terms(out);
  return GradedElement::from_sorted_terms(std::move(out));
}

GradedElement without_odd(const GradedElement& x, const Generator& g) {
  const std::uint64_t bit = std::uint64_t{1} << odd_bit(g);
  std::vector<Term> out;
  for (const auto& t : x.terms())
    if (!(t.monomial.odd & bit)) out.push_back(t);
  return GradedElement::from_sorted_terms(std::move(out));
}

CoefficientTable evaluate(const GradedElement& x, const Assignment& assignment, OddPolicy policy) {
  std::unordered_map<std::uint32_t, const Rational*> values;
  for (const auto& [g, v] : assignment)
    if (!g.odd()) values[even_id(g)] = &v;
  CoefficientTable table;
  for (const auto& t : x.terms()) {
    if (policy == OddPolicy::reject && t.monomial.odd != 0)
      throw OddGeneratorError("evaluate: element contains odd word " + odd_word_name(t.monomial.odd));
    Rational v = t.coeff;
    for (auto id : t.monomial.even) {
      auto it = values.find(id);
      if (it == values.end())
        throw UnassignedGenerator("evaluate: no value for " + generator_name(even_generator(id)));
      v *= *it->second;
      if (is_zero(v)) break;
    }
    if (!is_zero(v)) table[t.monomial.odd] += v;
  }
  for (auto it = table.begin(); it != table.end();) it = is_zero(it->second) ? table.erase(it) : std::next(it);
  return table;
}

Rational evaluate_scalar(const GradedElement& x, const Assignment& assignment) {
  const auto table = evaluate(x, assignment, OddPolicy::reject);
  auto it = table.find(0);
  return it == table.end() ? Rational(0) : it->second;
}

std::string odd_word_name(std::uint64_t mask) {
  if (mask == 0) return "1";
  std::string out;
  for (std::uint64_t m = mask; m; m &= m - 1) {
    if (!out.empty()) out += '*';
    out += generator_name(odd_generator_at(std::countr_zero(m)));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string to_json(const GradedElement& x) {
  auto terms = nlohmann::ordered_json::array();
  for (const auto& t : x.terms()) {
    nlohmann::ordered_json term;
    term["coeff"] = to_string(t.coeff);
    auto even = nlohmann::ordered_json::object();
    for (std::size_t p = 0; p < t.monomial.even.size();) {
      std::size_t q = p;
      while (q < t.monomial.even.size() && t.monomial.even[q] == t.monomial.even[p]) ++q;
      even[generator_name(even_generator(t.monomial.even[p]))] = q - p;
      p = q;
    }
    term["even"] = even;
    auto odd = nlohmann::ordered_json::array();
    for (std::uint64_t m = t.monomial.odd; m; m &= m - 1)
      odd.push_back(generator_name(odd_generator_at(std::countr_zero(m))));
    term["odd"] = odd;
    terms.push_back(term);
  }
  nlohmann::ordered_json doc;
  doc["terms"] = terms;
  return doc.dump();
}

GradedElement element_from_json(std::string_view text) {
  const auto doc = nlohmann::json::parse(text);
  std::vector<std::pair<Rational, std::vector<Generator>>> raw;
  for (const auto& term : doc.at("terms")) {
    std::vector<Generator> word;
    if (term.contains("even"))
      for (const auto& [name, power] : term.at("even").items()) {
        const Generator g = parse_generator(name);
        if (g.odd()) throw std::invalid_argument("odd generator " + name + " listed under even");
        const int e = power.get<int>();
        if (e < 0) throw std::invalid_argument("negative exponent for " + name);
        word.insert(word.end(), static_cast<std::size_t>(e), g);
      }
    if (term.contains("odd"))
      for (const auto& name : term.at("odd")) {
        const Generator g = parse_generator(name.get<std::string>());
        if (!g.odd()) throw std::invalid_argument("even generator " + name.get<std::string>() + " listed under odd");
        word.push_back(g);
      }
    raw.emplace_back(parse_rational(term.at("coeff").get<std::string>()), std::move(word));
  }
  return GradedElement::normalize(raw);
}

namespace {

std::string superscript(int n) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  for (char c : std::to_string(n)) out += digits[c - '0'];
  return out;
}

std::string subscript(int n) {
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string out;
  for (char c : std::to_string(n)) out += digits[c - '0'];
  return out;
}

}  // namespace

std::string generator_text(const Generator& g) {
  switch (g.kind) {
    case Kind::Theta: return "Θ" + superscript(g.i + 1);
    case Kind::HatTheta: return "Θ̂" + superscript(g.i + 1);
    case Kind::WeilTheta: return "θ" + superscript(g.i + 1);
    case Kind::Mu: return "μ" + superscript(g.i + 1);
    case Kind::LoopDTheta: return "dθ";
    case Kind::Dt: return "dt";
    case Kind::A: return "A" + superscript(g.i + 1) + subscript(g.j + 1);
    case Kind::Abar: return "Ā" + superscript(g.i + 1) + subscript(g.j + 1);
    case Kind::Chi: return "χ" + superscript(g.i + 1);
    case Kind::Alpha: return "α";
    case Kind::T: return "t";
    case Kind::PiInv: return "π⁻¹";
  }
  return "?";
}

std::string generator_latex(const Generator& g) {
  const std::string up = "^{" + std::to_string(g.i + 1) + "}";
  switch (g.kind) {
    case Kind::Theta: return "\\Theta" + up;
    case Kind::HatTheta: return "\\hat{\\Theta}" + up;
    case Kind::WeilTheta: return "\\theta" + up;
    case Kind::Mu: return "\\mu" + up;
    case Kind::LoopDTheta: return "d\\theta";
    case Kind::Dt: return "dt";
    case Kind::A: return "A" + up + "_{" + std::to_string(g.j + 1) + "}";
    case Kind::Abar: return "\\bar{A}" + up + "_{" + std::to_string(g.j + 1) + "}";
    case Kind::Chi: return "\\chi" + up;
    case Kind::Alpha: return "\\alpha";
    case Kind::T: return "t";
    case Kind::PiInv: return "\\pi^{-1}";
  }
  return "?";
}

namespace {

template <typename GenFmt, typename PowFmt, typename CoeffFmt>
std::string render(const GradedElement& x, GenFmt gen_fmt, PowFmt pow_fmt, CoeffFmt coeff_fmt, const char* sep) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : x.terms()) {
    const bool negative = t.coeff < 0;
    const Rational mag = negative ? Rational(-t.coeff) : t.coeff;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    std::string body;
    for (std::size_t p = 0; p < t.monomial.even.size();) {
      std::size_t q = p;
      while (q < t.monomial.even.size() && t.monomial.even[q] == t.monomial.even[p]) ++q;
      if (!body.empty()) body += sep;
      body += gen_fmt(even_generator(t.monomial.even[p]));
      if (q - p > 1) body += pow_fmt(static_cast<int>(q - p));
      p = q;
    }
    for (std::uint64_t m = t.monomial.odd; m; m &= m - 1) {
      if (!body.empty()) body += sep;
      body += gen_fmt(odd_generator_at(std::countr_zero(m)));
    }
    if (body.empty())
      out << coeff_fmt(mag);
    else if (mag == 1)
      out << body;
    else
      out << coeff_fmt(mag) << sep << body;
  }
  return out.str();
}

}  // namespace

std::string to_text(const GradedElement& x) {
  return render(
      x, generator_text, [](int e) { return "^" + std::to_string(e); }, [](const Rational& c) { return to_string(c); },
      "·");
}

std::string to_latex(const GradedElement& x) {
  return render(
      x, generator_latex, [](int e) { return "^{" + std::to_string(e) + "}"; },
      [](const Rational& c) {
        const auto num = numerator(c), den = denominator(c);
        if (den == 1) return num.str();
        return "\\frac{" + num.str() + "}{" + den.str() + "}";
      },
      " ");
}

}  // namespace cw
