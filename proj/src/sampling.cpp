#include "cartanweil/sampling.hpp"

#include "cartanweil/lie_valued.hpp"

namespace cw {

GeneratorPool generator_pool(int n, std::initializer_list<Kind> kinds) {
  GeneratorPool p;
  for (Kind k : kinds) {
    switch (k) {
      case Kind::A:
      case Kind::Abar:
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) p.gens.push_back({k, i, j});
        break;
      case Kind::LoopDTheta:
      case Kind::Dt:
      case Kind::Alpha:
      case Kind::T:
      case Kind::PiInv: p.gens.push_back({k, 0, 0}); break;
      default:
        for (int i = 0; i < n; ++i) p.gens.push_back({k, i, 0});
    }
  }
  return p;
}

GeneratorPool form_pool(int n) {
  return generator_pool(n, {Kind::Theta, Kind::HatTheta, Kind::A, Kind::Abar, Kind::Chi});
}

GeneratorPool weil_pool(int n) { return generator_pool(n, {Kind::WeilTheta, Kind::Mu}); }

GeneratorPool tensor_pool(int n) {
  return generator_pool(n, {Kind::Theta, Kind::HatTheta, Kind::A, Kind::Abar, Kind::WeilTheta, Kind::Mu});
}

Rational small_rational(std::mt19937_64& rng) {
  const auto num = static_cast<std::int64_t>(rng() % 11) - 5;
  const auto den = static_cast<std::int64_t>(1 + rng() % 4);
  return make_rational(num == 0 ? 1 : num, den);
}

GradedElement random_element(std::mt19937_64& rng, const GeneratorPool& p, int terms, int max_len) {
  std::vector<std::pair<Rational, std::vector<Generator>>> raw;
  for (int t = 0; t < terms; ++t) {
    std::vector<Generator> word;
    const int len = static_cast<int>(rng() % static_cast<std::uint64_t>(max_len + 1));
    for (int l = 0; l < len; ++l) word.push_back(p.gens[rng() % p.gens.size()]);
    raw.emplace_back(small_rational(rng), std::move(word));
  }
  return GradedElement::normalize(raw);
}

GradedElement random_homogeneous(std::mt19937_64& rng, const GeneratorPool& p, int terms, int max_len, bool odd) {
  GradedElement x = random_element(rng, p, terms, max_len);
  std::vector<Term> keep;
  for (const auto& t : x.terms())
    if (has_odd_parity(t.monomial) == odd) keep.push_back(t);
  return GradedElement::from_sorted_terms(std::move(keep));
}

BasicBlocks basic_blocks(const LieAlgebraData& data, bool brackets) {
  const int n = data.dim();
  const auto theta = lie_generators(Kind::WeilTheta, n);
  const auto B = lie_generators(Kind::HatTheta, n) - symbolic_matrix_apply(Kind::A, theta) + theta;
  const auto m = lie_generators(Kind::Mu, n);
  const auto Am = symbolic_matrix_apply(Kind::A, m);
  BasicBlocks out;
  out.blocks = {pairing(data, B, m), pairing(data, B, Am), pairing(data, m, Am), pairing(data, m, m)};
  out.factors = {pairing(data, m, m), pairing(data, m, Am)};
  if (brackets) {
    const auto BB = bracket(data, B, B);
    out.blocks.push_back(pairing(data, B, BB));
    out.blocks.push_back(pairing(data, BB, Am));
    out.blocks.push_back(pairing(data, B, bracket(data, B, m)));
    out.factors.push_back(pairing(data, B, m));
  }
  return out;
}

GradedElement random_basic(std::mt19937_64& rng, const BasicBlocks& b) {
  GradedElement x(small_rational(rng));
  const int count = 1 + static_cast<int>(rng() % 2);
  for (int r = 0; r < count; ++r) {
    GradedElement term(small_rational(rng));
    term = term * b.blocks[rng() % b.blocks.size()];
    const auto& f = b.factors[rng() % b.factors.size()];
    if (rng() % 3 == 0 && term.size() * f.size() < 1000) term = term * f;
    x += term;
  }
  return x;
}

}  // namespace cw
