#pragma once

#include "cartanweil/graded.hpp"
#include "cartanweil/lie_data.hpp"

#include <initializer_list>
#include <random>
#include <vector>

namespace cw {

/// Generators random words are drawn from.
struct GeneratorPool {
  std::vector<Generator> gens;
};

/// All generators of the given kinds for an n-dimensional algebra.
GeneratorPool generator_pool(int n, std::initializer_list<Kind> kinds);
/// Θ, Θ̂, A, Ā, χ.
GeneratorPool form_pool(int n);
/// θ, μ.
GeneratorPool weil_pool(int n);
/// Θ, Θ̂, A, Ā, θ, μ.
GeneratorPool tensor_pool(int n);

/// Nonzero rational with numerator in [−5, 5] and denominator in [1, 4].
Rational small_rational(std::mt19937_64& rng);

/// Up to `terms` words of length up to `max_len`.
GradedElement random_element(std::mt19937_64& rng, const GeneratorPool& p, int terms, int max_len);
/// Terms of a random element with the given parity.
GradedElement random_homogeneous(std::mt19937_64& rng, const GeneratorPool& p, int terms, int max_len, bool odd);

/// Invariant scalars built from the horizontal equivariant blocks B = Θ̂ − Aθ + θ, μ and Aμ.
struct BasicBlocks {
  std::vector<GradedElement> blocks;
  std::vector<GradedElement> factors;  ///< multiplied onto blocks
};

/// The bracket blocks ⟨B,[B,B]⟩, ⟨[B,B],Aμ⟩, ⟨B,[B,μ]⟩ grow quickly under d and φ and are
/// meant for small dimension.
BasicBlocks basic_blocks(const LieAlgebraData& data, bool brackets);
/// Random combination of one or two blocks, sometimes times a factor.
GradedElement random_basic(std::mt19937_64& rng, const BasicBlocks& b);

}  // namespace cw
