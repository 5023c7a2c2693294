#pragma once

#include "cartanweil/gforms.hpp"
#include "cartanweil/mq_cartan.hpp"

#include <optional>

namespace cw {

enum class TransgressionMethod { integral, closed_formula };

struct TransgressionResult {
  EquivariantForm form;
  InvariantPolynomial polynomial;
  TransgressionMethod method;
  bool equivariant = false;
};

/// (−½)^{k−1} k!(k−1)!/(2k−1)!.
Rational transgression_coefficient(int k);

/// F_t = dt·Θ + ½(t²−t)[Θ,Θ].
LieElement transgression_curvature(const LieAlgebraData& data);
/// F_t − t(χ − Āχ) + χ.
LieElement equivariant_transgression_curvature(const LieAlgebraData& data);

/// −∫_0^1 of the dt-part of p(F^k), for F linear in dt.
GradedElement fiber_integral(const SymmetricTensor& p, const Scale& scale, const LieElement& curvature);

/// Tensor-level τ and τ_G; no invariance is assumed.
GradedElement transgression_integral(const LieAlgebraData& data, const SymmetricTensor& p, const Scale& scale = {});
GradedElement transgression_closed(const LieAlgebraData& data, const SymmetricTensor& p, const Scale& scale = {});
GradedElement equivariant_transgression_integral(const LieAlgebraData& data, const SymmetricTensor& p,
                                                 const Scale& scale = {});
/// k∫_0^1 p(Θ, (½(t²−t)[Θ,Θ] + (1−t)χ + tĀχ)^{k−1}) dt.
GradedElement equivariant_transgression_closed(const LieAlgebraData& data, const SymmetricTensor& p,
                                               const Scale& scale = {});

TransgressionResult transgress_integral(const LieAlgebraData& data, const InvariantPolynomial& p);
TransgressionResult transgress_closed(const LieAlgebraData& data, const InvariantPolynomial& p);
TransgressionResult equivariant_transgress(const LieAlgebraData& data, const InvariantPolynomial& p,
                                           TransgressionMethod method = TransgressionMethod::integral);

/// d(ω) = 0 exactly.
bool check_closed(const LieAlgebraData& data, const GradedElement& omega);
/// d_G(ω) oracle-equal to 0.
OracleVerdict check_equivariantly_closed(const LieAlgebraData& data, const GradedElement& omega,
                                         const OracleOptions& options = {});
/// total_lie_i(ω) oracle-equal to 0 for every i; the first failure is returned.
OracleVerdict check_invariant(const LieAlgebraData& data, const GradedElement& omega,
                              const OracleOptions& options = {});

/// Rewrites complete sums Σ_i Ā^i_jΘ^i into Θ̂^j, then Σ_i A^i_jΘ̂^i into Θ^j (orthonormal
/// metric only). Returns nullopt for other metrics or when the oracle does not certify the result.
std::optional<GradedElement> rewrite_adjoint_pairings(const LieAlgebraData& data, const GradedElement& x,
                                                      const OracleOptions& options = {});

}  // namespace cw
