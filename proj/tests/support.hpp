#pragma once

#include "cartanweil/graded.hpp"
#include "cartanweil/lie_valued.hpp"
#include "cartanweil/sampling.hpp"

namespace cw::testing {

using cw::GeneratorPool;
using cw::random_element;
using cw::random_homogeneous;
using cw::small_rational;

inline GeneratorPool pool(int n, std::initializer_list<Kind> kinds) { return generator_pool(n, kinds); }

inline GradedElement G(const Generator& g) { return GradedElement(g); }

}  // namespace cw::testing
