#pragma once

#include "cartanweil/graded.hpp"
#include "cartanweil/lie_data.hpp"
#include "cartanweil/lie_valued.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cw {

/// dΘ^i = −½c^i_{jk}Θ^jΘ^k, dΘ̂^i = ½c^i_{jk}Θ̂^jΘ̂^k, dA^i_j = A^i_k c^k_{lj}Θ^l,
/// dĀ^i_j = −c^i_{lk}Θ^lĀ^k_j; χ and π⁻¹ are closed.
Derivation gform_differential(const LieAlgebraData& data);

/// Θ̂^i = A^i_j Θ^j expanded in the left-invariant generators.
GradedElement hat_theta(const LieAlgebraData& data, int i);
LieElement hat_theta_expanded(const LieAlgebraData& data);

/// Contraction with the fundamental vector field of χ:
/// ι_χΘ = χ − Āχ, ι_χΘ̂ = Aχ − χ; A, Ā, χ ↦ 0.
Derivation iota_chi(const LieAlgebraData& data);
/// Contraction with the fundamental vector field of ξ_k:
/// ι_kΘ^i = δ^i_k − Ā^i_k, ι_kΘ̂^i = A^i_k − δ^i_k.
Derivation form_contraction(const LieAlgebraData& data, int k);

/// Infinitesimal adjoint action on every model generator (Θ, Θ̂, θ, μ, χ act by −ad(ξ_k);
/// A, Ā by M ↦ M·ad(ξ_k) − ad(ξ_k)·M); parameters and differentials are inert.
Derivation total_lie(const LieAlgebraData& data, int k);
/// Lie derivative of forms only: the restriction of total_lie to Θ, Θ̂, A, Ā (χ is inert).
Derivation form_lie(const LieAlgebraData& data, int k);

/// Cartan differential d_G = d − ι_χ on the G-form model.
Derivation cartan_model_differential(const LieAlgebraData& data);

/// G-form model Ω(G) with its operations.
class GFormComplex {
 public:
  explicit GFormComplex(const LieAlgebraData& data);

  const LieAlgebraData& algebra() const { return data_; }
  const Derivation& d() const { return d_; }
  const Derivation& iota_chi() const { return iota_chi_; }
  const Derivation& iota(int k) const { return iota_[static_cast<std::size_t>(k)]; }
  const Derivation& total_lie(int k) const { return total_lie_[static_cast<std::size_t>(k)]; }
  const Derivation& form_lie(int k) const { return form_lie_[static_cast<std::size_t>(k)]; }
  const Derivation& d_G() const { return d_G_; }

 private:
  LieAlgebraData data_;
  Derivation d_;
  Derivation iota_chi_;
  std::vector<Derivation> iota_;
  std::vector<Derivation> total_lie_;
  std::vector<Derivation> form_lie_;
  Derivation d_G_;
};

/// Exact rational realisation of Ad(exp(sξ_d)) for a rotation generator, parametrised by
/// τ with cos φ = (1−qτ²)/(1+qτ²), sin φ/√q = 2τ/(1+qτ²).
RationalMatrix rotation_factor(const LieAlgebraData& data, const RotationGenerator& rot, const Rational& tau);

struct AdjointPoint {
  RationalMatrix A;
  RationalMatrix Abar;
};

/// Checks AᵀA = I, AĀ = I and c^i_{jk}A^j_lA^k_m = A^i_n c^n_{lm}.
bool is_adjoint_point(const LieAlgebraData& data, const AdjointPoint& point);

/// Product of seeded random rotation factors; Ā = Aᵀ. Throws UnsupportedAlgebra for a
/// non-abelian algebra without rotation generators, InvariantViolation if the product
/// fails is_adjoint_point.
AdjointPoint sample_adjoint_point(const LieAlgebraData& data, std::uint64_t seed);

struct OracleOptions {
  int samples = 8;
  std::uint64_t seed = 1;
};

struct OracleWitness {
  std::uint64_t seed = 0;
  int sample = 0;
  std::string word;  ///< odd word whose coefficient differs
  Rational value;    ///< coefficient of x − y there
  Assignment point;  ///< values of the even generators
  std::string to_json() const;
};

struct OracleVerdict {
  bool equal = true;
  int samples = 0;
  std::uint64_t seed = 0;
  std::optional<OracleWitness> witness;
};

/// Random point: A, Ā from sample_adjoint_point and small random rationals for χ, μ, α,
/// t and π⁻¹. Deterministic in (seed, sample).
Assignment sample_point(const LieAlgebraData& data, std::uint64_t seed, int sample);

/// Coefficient table of x at a point, with Θ̂ replaced by AΘ and remaining odd generators
/// kept as keys.
CoefficientTable evaluate_at_point(const GradedElement& x, const Assignment& point, int dim);

/// Decides x = y in the G-form model (Θ, Θ̂, A, Ā, χ, π⁻¹) by evaluation at adjoint points.
/// Throws ForeignGenerator for other generators.
OracleVerdict equality_oracle(const LieAlgebraData& data, const GradedElement& x, const GradedElement& y,
                              const OracleOptions& options = {});
/// The same decision procedure on W ⊗ Ω(G) with parameters (adds θ, μ, α, t, dθ, dt).
OracleVerdict tensor_equality_oracle(const LieAlgebraData& data, const GradedElement& x, const GradedElement& y,
                                     const OracleOptions& options = {});

/// Local rewrite Σ_k A^i_kĀ^k_j → δ^i_j (and Ā·A) on groups of terms that differ only in the
/// contracted index and share a coefficient.
GradedElement contract_inverse_pairs(const GradedElement& x, int dim);

/// Replaces Θ̂ by Θ. Returns nullopt unless the oracle certifies the rename leaves x
/// unchanged (true for Ad-invariant expressions in Θ̂ alone).
std::optional<GradedElement> invariance_rename(const LieAlgebraData& data, const GradedElement& x,
                                               const OracleOptions& options = {});

}  // namespace cw
