#pragma once

#include "cartanweil/graded.hpp"
#include "cartanweil/lie_data.hpp"

#include <vector>

namespace cw {

/// 𝔤-valued element X = X^i ξ_i with components in the graded algebra.
using LieElement = std::vector<GradedElement>;

/// (g^0, ..., g^{n-1}) for an indexed generator kind (Theta, HatTheta, WeilTheta, Mu, Chi).
LieElement lie_generators(Kind kind, int n);
LieElement lie_zero(int n);

LieElement operator+(const LieElement& x, const LieElement& y);
LieElement operator-(const LieElement& x, const LieElement& y);
LieElement operator*(const Rational& s, const LieElement& x);
/// Left multiplication of every component by a scalar-like element.
LieElement operator*(const GradedElement& s, const LieElement& x);
/// Right multiplication of every component.
LieElement operator*(const LieElement& x, const GradedElement& s);

/// [X,Y]^i = c^i_{jk} X^j Y^k.
LieElement bracket(const LieAlgebraData& data, const LieElement& x, const LieElement& y);
/// ⟨X,Y⟩ = g_{ij} X^i Y^j.
GradedElement pairing(const LieAlgebraData& data, const LieElement& x, const LieElement& y);
/// (M X)^i = M^i_j X^j with M the symbolic matrix of kind A or Abar.
LieElement symbolic_matrix_apply(Kind matrix, const LieElement& x);
LieElement matrix_apply(const RationalMatrix& m, const LieElement& x);

LieElement apply_derivation(const Derivation& D, const LieElement& x);
LieElement substitute(const LieElement& x, const Generator& g, const GradedElement& value);
LieElement integrate_parameter(const LieElement& x, const Generator& var, const Rational& lower,
                               const Rational& upper);

/// scale(p) as an element: coefficient·π⁻ᵖ.
GradedElement scale_element(const Scale& s);

/// p(X_1, ..., X_k) summed over every index tuple, in slot order.
GradedElement multilinear(const InvariantPolynomial& p, const std::vector<LieElement>& slots);
/// p(Y, ..., Y) for Y with even components.
GradedElement power_form(const InvariantPolynomial& p, const LieElement& y);
/// p(X, Y, ..., Y) for Y with even components.
GradedElement first_slot_form(const InvariantPolynomial& p, const LieElement& x, const LieElement& y);

/// Tensor-level forms of the above; no invariance is assumed.
GradedElement multilinear(const SymmetricTensor& p, const Scale& scale, const std::vector<LieElement>& slots);
GradedElement power_form(const SymmetricTensor& p, const Scale& scale, const LieElement& y);
GradedElement first_slot_form(const SymmetricTensor& p, const Scale& scale, const LieElement& x, const LieElement& y);

}  // namespace cw
