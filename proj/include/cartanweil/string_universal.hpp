#pragma once

#include "cartanweil/mq_cartan.hpp"
#include "cartanweil/report.hpp"
#include "cartanweil/transgression.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cw {

/// Reading of the endpoint adjoint in the [Θ̂, a] cross term of the universal curvature.
/// `adjoint` uses Ad(g) as in the Higgs field; `inverse_adjoint` uses Ad(g⁻¹).
enum class Variant { adjoint, inverse_adjoint };

std::string variant_name(Variant v);
Variant parse_variant(std::string_view name);

/// Universal curvature and Higgs covariant derivative on PG × EG in W(𝔤) ⊗ Ω(G).
/// θ and μ stand for the Weil connection and curvature, α for the loop parameter and
/// ∇Φ carries the marker dθ (the factor ∂α is absorbed by the α-integration).
struct UniversalData {
  LieElement curvature_F;
  LieElement higgs_cov;
  Variant variant = Variant::adjoint;
};

/// B = Θ̂ − Aθ + θ.
LieElement universal_connection_term(const LieAlgebraData& data);
UniversalData build_universal_data(const LieAlgebraData& data, Variant variant = Variant::adjoint);
/// θ = μ = 0 and A = Ā = I: F = ½(α²−α)[Θ̂,Θ̂], ∇Φ = Θ̂·dθ.
UniversalData based_universal_data(const LieAlgebraData& data);

/// k∫_0^1 p(∇Φ, F^{k−1}) dα with the dθ marker stripped.
GradedElement string_form(const SymmetricTensor& p, const Scale& scale, const LieElement& F,
                          const LieElement& higgs_cov);
GradedElement string_form(const InvariantPolynomial& p, const UniversalData& u);

struct CaloronSplit {
  GradedElement dtheta_part;
  GradedElement rest;
};

/// Splits p((F + Ψ·dθ)^k) into its dθ-linear part and the rest.
CaloronSplit caloron_expand_identity(const SymmetricTensor& p, const Scale& scale, const LieElement& F,
                                     const LieElement& psi);

enum class MqPath { automatic, full, structured };

struct UniversalStringOptions {
  Variant variant = Variant::adjoint;
  /// automatic: full expansion for k ≤ 2 on algebras of dimension ≤ 3.
  MqPath path = MqPath::automatic;
  OracleOptions oracle;
};

struct UniversalStringResult {
  EquivariantForm form;
  MqPath path = MqPath::full;
  /// The string element before φ (full path only).
  std::optional<GradedElement> weil_element;
};

/// Universal string class through φ. The full path expands the string element, checks it is
/// basic and that φ agrees with the projection; the structured path checks that B and F are
/// horizontal and equivariant and that φ sends them to their θ = 0 parts, then projects the
/// integrand. Throws NotBasic with the failing check and witness.
UniversalStringResult universal_string_class(const LieAlgebraData& data, const InvariantPolynomial& p,
                                             const UniversalStringOptions& options = {});

/// A, Ā ↦ I and Θ̂ ↦ Θ.
GradedElement at_identity(const GradedElement& x);

struct BasedClass {
  GradedElement hat_form;                  ///< in Θ̂
  std::optional<GradedElement> theta_form;  ///< oracle-certified Θ̂ → Θ rename
};

BasedClass based_string_class(const LieAlgebraData& data, const InvariantPolynomial& p,
                              const OracleOptions& options = {});

Report verify_string_equals_transgression(const LieAlgebraData& data, const InvariantPolynomial& p,
                     const UniversalStringOptions& options = {});
/// Equivariant closedness, invariance and the χ = 0, A = I specialization to τ(p).
std::vector<Report> verify_universal_class_consistency(const LieAlgebraData& data, const InvariantPolynomial& p,
                                                 const UniversalStringOptions& options = {});
/// total_d of the full string element vanishes (k ≤ 2 full path only).
Report verify_string_form_closed(const LieAlgebraData& data, const InvariantPolynomial& p,
                                 const UniversalStringOptions& options = {});

}  // namespace cw
