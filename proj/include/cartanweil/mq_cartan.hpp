#pragma once

#include "cartanweil/gforms.hpp"
#include "cartanweil/weil.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cw {

/// W(𝔤) ⊗ Ω(G) with the sums of the factor operations and γ = θ^i ⊗ ι_i.
class TensorComplex {
 public:
  explicit TensorComplex(const LieAlgebraData& data);

  const LieAlgebraData& algebra() const { return weil_.algebra(); }
  const WeilComplex& weil() const { return weil_; }
  const GFormComplex& gforms() const { return gforms_; }
  const Derivation& total_d() const { return total_d_; }
  /// ι_i^W + ι_{ξ_i}^Ω.
  const Derivation& iota(int i) const { return iota_[static_cast<std::size_t>(i)]; }
  /// L_i^W + L_i^Ω.
  const Derivation& lie(int i) const { return gforms_.total_lie(i); }
  const Derivation& gamma() const { return gamma_; }
  /// 1⊗d − μ^i⊗ι_i on the image of φ.
  const Derivation& cartan_d() const { return cartan_d_; }

 private:
  WeilComplex weil_;
  GFormComplex gforms_;
  Derivation total_d_;
  std::vector<Derivation> iota_;
  Derivation gamma_;
  Derivation cartan_d_;
};

/// Element of the Cartan model: polynomial in χ with values in Ω(G).
struct EquivariantForm {
  GradedElement element;

  /// Total degree with χ of degree 2; nullopt if inhomogeneous.
  std::optional<int> degree() const { return homogeneous_degree(element); }
};

/// Throws ForeignGenerator if x uses θ, μ or any generator outside the Cartan model.
EquivariantForm make_equivariant_form(const GradedElement& x);

/// γ = Σ_i θ^i ι_i^Ω, an even derivation.
Derivation mq_gamma(const LieAlgebraData& data);
/// φ = exp(γ).
GradedElement mq_phi(const TensorComplex& complex, const GradedElement& x);
GradedElement mq_phi_inverse(const TensorComplex& complex, const GradedElement& x);

struct BasicVerdict {
  bool basic = true;
  std::string failed_check;  ///< "iota_<i>" or "lie_<i>" (1-based)
  std::optional<OracleWitness> witness;
};

/// Annihilated by every ι_i and L_i of the tensor complex. Exact zero is tried first, then
/// the oracle (needed when Θ̂ and AΘ appear together).
BasicVerdict is_basic_tensor(const TensorComplex& complex, const GradedElement& x, const OracleOptions& options = {});

/// d_G = d − ι_χ on the Cartan model.
const Derivation& cartan_differential(const TensorComplex& complex);

/// Drops every term with a θ factor and renames μ to χ. Throws NotBasic unless x is basic.
EquivariantForm mq_project(const TensorComplex& complex, const GradedElement& x, const OracleOptions& options = {});
/// μ^i ↦ χ^i.
GradedElement rename_mu_to_chi(const GradedElement& x);
/// Terms free of θ.
GradedElement drop_weil_theta(const GradedElement& x);

}  // namespace cw
