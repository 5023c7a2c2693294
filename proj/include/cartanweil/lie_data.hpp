#pragma once

#include "cartanweil/errors.hpp"
#include "cartanweil/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cw {

/// One-parameter subgroup used to produce exact rational adjoint points.
/// The square of ad(basis[direction]) has spectrum {0} ∪ {-(m·√q)^2 : m ∈ multiples}.
struct RotationGenerator {
  int direction = 0;
  Rational q;
  std::vector<int> multiples;
};

/// Structure constants c^i_{jk} ([ξ_j, ξ_k] = c^i_{jk} ξ_i) and the metric
/// ⟨ξ_i, ξ_j⟩ of a finite-dimensional Lie algebra. Immutable.
class LieAlgebraData {
 public:
  struct Entry {
    int i, j, k;
    Rational value;
  };

  /// `structure` is indexed [i][j][k]; throws DimensionMismatch on shape errors.
  LieAlgebraData(std::string name, int dim, const std::vector<std::vector<std::vector<Rational>>>& structure,
                 RationalMatrix metric, std::vector<RotationGenerator> rotations = {});

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  const Rational& c(int i, int j, int k) const { return c_[index(i, j, k)]; }
  const RationalMatrix& metric() const { return metric_; }
  /// All (i,j,k) with c^i_{jk} != 0.
  const std::vector<Entry>& nonzero() const { return nonzero_; }
  /// Entries c^i_{jk} with fixed lower index j, as (i, k, value).
  const std::vector<Entry>& with_first_lower(int j) const { return by_j_[static_cast<std::size_t>(j)]; }
  const std::vector<RotationGenerator>& rotations() const { return rotations_; }
  bool is_abelian() const { return nonzero_.empty(); }
  bool metric_is_identity() const { return is_identity(metric_); }

  /// Matrix of ad(ξ_x): (ad ξ_x)^a_b = c^a_{xb}.
  RationalMatrix ad(int x) const;

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
  }

  std::string name_;
  int dim_;
  std::vector<Rational> c_;
  RationalMatrix metric_;
  std::vector<Entry> nonzero_;
  std::vector<std::vector<Entry>> by_j_;
  std::vector<RotationGenerator> rotations_;
};

struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  bool passed() const;
  const AxiomCheck& check(std::string_view axiom) const;
};

/// Checks antisymmetry, Jacobi, metric symmetry/invertibility and metric ad-invariance.
ValidationReport validate_algebra(const LieAlgebraData& data);

/// "abelian(n)" / "abelian:n", "su2", "su3". Throws UnknownAlgebra.
LieAlgebraData builtin_algebra(std::string_view name);

/// Parses the JSON algebra file format. Indices in "c" are 1-based; only j<k
/// entries are listed and antisymmetry is completed automatically.
LieAlgebraData parse_algebra_json(std::string_view text);
std::string algebra_to_json(const LieAlgebraData& data);

/// Symmetric rank-k tensor stored on sorted index multisets.
class SymmetricTensor {
 public:
  SymmetricTensor(int dim, int degree);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  /// Sets the value for every permutation of `indices`.
  void set(std::vector<int> indices, const Rational& value);
  Rational value(std::span<const int> indices) const;
  const std::map<std::vector<int>, Rational>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

 private:
  int dim_;
  int degree_;
  std::map<std::vector<int>, Rational> entries_;
};

/// A rational times a non-negative power of the formal symbol π⁻¹.
struct Scale {
  Rational coefficient{1};
  unsigned pi_inv_power = 0;
};

struct InvarianceViolation {
  int x;
  std::vector<int> indices;
  Rational residual;
};

/// First tuple on which Σ_j Σ_m c^m_{x i_j} p_{i_1..m..i_k} != 0, if any. Exhaustive
/// over sorted tuples up to `exhaustive_limit` checks, seeded random tuples beyond.
std::optional<InvarianceViolation> find_invariance_violation(const LieAlgebraData& data, const SymmetricTensor& p,
                                                             std::size_t exhaustive_limit = 2'000'000,
                                                             std::uint64_t seed = 1);

/// Ad-invariant symmetric multilinear form with a symbolic scale.
class InvariantPolynomial {
 public:
  /// Throws NotInvariant when the tensor fails ad-invariance, DimensionMismatch
  /// when dimensions disagree.
  InvariantPolynomial(const LieAlgebraData& data, SymmetricTensor components, Scale scale = {},
                      std::string label = "p");

  int degree() const { return components_.degree(); }
  int dim() const { return components_.dim(); }
  const SymmetricTensor& components() const { return components_; }
  const Scale& scale() const { return scale_; }
  const std::string& label() const { return label_; }

  InvariantPolynomial scaled(const Scale& extra, std::string label) const;

 private:
  SymmetricTensor components_;
  Scale scale_;
  std::string label_;
};

InvariantPolynomial metric_polynomial(const LieAlgebraData& data, Scale scale = {});
/// Symmetrization of ⟨·,·⟩^{k/2}; k even and >= 2.
InvariantPolynomial sym_power_polynomial(const LieAlgebraData& data, int k);
/// Cubic invariant d_{abc} of the builtin su3 basis (scaled to integer entries).
InvariantPolynomial su3_cubic_polynomial(const LieAlgebraData& data);
/// Symmetrized product p·q, of degree deg p + deg q.
InvariantPolynomial symmetrized_product(const LieAlgebraData& data, const InvariantPolynomial& p,
                                        const InvariantPolynomial& q);
/// The zero polynomial of degree k (invariant for every algebra).
InvariantPolynomial zero_polynomial(const LieAlgebraData& data, int k);

/// Symmetric but not necessarily invariant tensor with small random entries;
/// used as a negative control and for purely algebraic identities.
SymmetricTensor random_symmetric_tensor(int dim, int degree, std::uint64_t seed);

}  // namespace cw
