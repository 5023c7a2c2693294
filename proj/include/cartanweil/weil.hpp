#pragma once

#include "cartanweil/graded.hpp"
#include "cartanweil/lie_data.hpp"

#include <vector>

namespace cw {

/// dθ^i = μ^i − ½c^i_{jk}θ^jθ^k,  dμ^i = c^i_{jk}μ^jθ^k.
Derivation weil_differential(const LieAlgebraData& data);
/// ι_i θ^j = δ^j_i,  ι_i μ^j = 0.
Derivation weil_contraction(const LieAlgebraData& data, int i);
/// Generator rule of L_i: θ^j, μ^j ↦ −c^j_{ik}(·)^k.
Derivation weil_lie_rule(const LieAlgebraData& data, int i);

/// W(𝔤) = ∧𝔤* ⊗ S𝔤* with its operations.
class WeilComplex {
 public:
  explicit WeilComplex(const LieAlgebraData& data);

  const LieAlgebraData& algebra() const { return data_; }
  const Derivation& d() const { return d_; }
  const Derivation& iota(int i) const;
  /// L_i = d∘ι_i + ι_i∘d.
  GradedElement lie(int i, const GradedElement& x) const;
  const Derivation& lie_rule(int i) const;

 private:
  LieAlgebraData data_;
  Derivation d_;
  std::vector<Derivation> iota_;
  std::vector<Derivation> lie_rule_;
};

/// Throws ForeignGenerator unless x uses only θ, μ and π⁻¹.
bool is_horizontal(const WeilComplex& w, const GradedElement& x);
bool is_basic(const WeilComplex& w, const GradedElement& x);

/// p_{i1..ik} μ^{i1}···μ^{ik} including the scale of p.
GradedElement chern_weil_element(const InvariantPolynomial& p);
/// The same element for a bare symmetric tensor (no invariance assumed).
GradedElement chern_weil_element(const SymmetricTensor& p);

}  // namespace cw
