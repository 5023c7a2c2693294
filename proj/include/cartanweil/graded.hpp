#pragma once

#include "cartanweil/errors.hpp"
#include "cartanweil/rational.hpp"

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cw {

/// Generator kinds, in the canonical order used for odd words.
enum class Kind : std::uint8_t {
  Theta,      ///< left Maurer-Cartan components Θ^i (odd, degree 1)
  HatTheta,   ///< right Maurer-Cartan components Θ̂^i = A^i_j Θ^j (odd, degree 1)
  WeilTheta,  ///< Weil connection generators θ^i (odd, degree 1)
  Mu,         ///< Weil curvature generators μ^i (even, degree 2)
  LoopDTheta, ///< loop coordinate differential dθ (odd, degree 1)
  Dt,         ///< transgression parameter differential dt (odd, degree 1)
  A,          ///< Ad(g) matrix entries A^i_j (even, degree 0)
  Abar,       ///< Ad(g^-1) matrix entries Ā^i_j (even, degree 0)
  Chi,        ///< Cartan-model variables χ^i (even, degree 2)
  Alpha,      ///< loop parameter α (even, degree 0)
  T,          ///< transgression parameter t (even, degree 0)
  PiInv,      ///< formal symbol π⁻¹ (even, degree 0)
};

inline constexpr int kMaxDim = 16;

struct Generator {
  Kind kind;
  int i = 0;  ///< 0-based
  int j = 0;  ///< 0-based second index for A / Abar

  bool odd() const {
    return kind == Kind::Theta || kind == Kind::HatTheta || kind == Kind::WeilTheta || kind == Kind::LoopDTheta ||
           kind == Kind::Dt;
  }
  int degree() const {
    if (odd()) return 1;
    return (kind == Kind::Mu || kind == Kind::Chi) ? 2 : 0;
  }
  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

namespace gen {
inline Generator Theta(int i) { return {Kind::Theta, i, 0}; }
inline Generator HatTheta(int i) { return {Kind::HatTheta, i, 0}; }
inline Generator theta(int i) { return {Kind::WeilTheta, i, 0}; }
inline Generator mu(int i) { return {Kind::Mu, i, 0}; }
inline Generator chi(int i) { return {Kind::Chi, i, 0}; }
inline Generator A(int i, int j) { return {Kind::A, i, j}; }
inline Generator Abar(int i, int j) { return {Kind::Abar, i, j}; }
inline constexpr Generator dtheta{Kind::LoopDTheta, 0, 0};
inline constexpr Generator dt{Kind::Dt, 0, 0};
inline constexpr Generator alpha{Kind::Alpha, 0, 0};
inline constexpr Generator t{Kind::T, 0, 0};
inline constexpr Generator pi_inv{Kind::PiInv, 0, 0};
}  // namespace gen

/// Bit position of an odd generator inside a word mask.
int odd_bit(const Generator& g);
Generator odd_generator_at(int bit);
/// Packed identifier of an even generator.
std::uint32_t even_id(const Generator& g);
Generator even_generator(std::uint32_t id);

/// Canonical names: Theta_1, HatTheta_1, theta_1, mu_1, dtheta, dt, A_12 (A_1_12 when an
/// index exceeds 9), Abar_12, chi_1, alpha, t, pi_inv. Indices in names are 1-based.
std::string generator_name(const Generator& g);
Generator parse_generator(std::string_view name);

/// Product of even generators (sorted multiset) times an ordered odd word.
struct Monomial {
  std::uint64_t odd = 0;
  boost::container::small_vector<std::uint32_t, 6> even;

  int degree() const;
  bool operator==(const Monomial& o) const { return odd == o.odd && even == o.even; }
  bool operator<(const Monomial& o) const {
    if (odd != o.odd) return odd < o.odd;
    return std::lexicographical_compare(even.begin(), even.end(), o.even.begin(), o.even.end());
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Sign of the reordering that turns the concatenation (word a)(word b) into the sorted
/// word a|b; 0 when the words share a generator.
int odd_product_sign(std::uint64_t a, std::uint64_t b);

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Exact-rational linear combination of monomials, kept in normal form.
class GradedElement {
 public:
  GradedElement() = default;
  GradedElement(const Rational& scalar);  // NOLINT: scalars embed implicitly
  GradedElement(int scalar) : GradedElement(Rational(scalar)) {}  // NOLINT
  explicit GradedElement(const Generator& g);

  /// Builds the normal form of Σ coeff·(word), with words given in arbitrary order.
  static GradedElement normalize(const std::vector<std::pair<Rational, std::vector<Generator>>>& raw);
  /// Adopts terms that are already sorted, merged and nonzero.
  static GradedElement from_sorted_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of the empty monomial.
  Rational constant() const;
  Rational coefficient(const Monomial& m) const;

  GradedElement& operator+=(const GradedElement& o);
  GradedElement& operator-=(const GradedElement& o);
  GradedElement& operator*=(const Rational& s);
  GradedElement operator-() const;

  friend bool operator==(const GradedElement& a, const GradedElement& b);

 private:
  std::vector<Term> terms_;
};

GradedElement operator+(GradedElement a, const GradedElement& b);
GradedElement operator-(GradedElement a, const GradedElement& b);
GradedElement operator*(const GradedElement& a, const GradedElement& b);
GradedElement operator*(GradedElement a, const Rational& s);
GradedElement operator*(const Rational& s, GradedElement a);

GradedElement multiply(const GradedElement& a, const GradedElement& b);

/// Hash-map accumulator for building large elements term by term.
class Accumulator {
 public:
  void add(const Monomial& m, const Rational& c);
  void add(Monomial&& m, const Rational& c);
  void add(const GradedElement& x, const Rational& scale = Rational(1));
  /// Adds scale·(x·y).
  void add_product(const GradedElement& x, const GradedElement& y, const Rational& scale = Rational(1));
  GradedElement finish();
  std::size_t size() const { return map_.size(); }

 private:
  std::unordered_map<Monomial, Rational, MonomialHash> map_;
};

/// Parity and degree data.
bool has_odd_parity(const Monomial& m);
/// Terms grouped by total degree.
std::map<int, GradedElement> degree_decomposition(const GradedElement& x);
/// Total degree if homogeneous.
std::optional<int> homogeneous_degree(const GradedElement& x);
/// Every generator occurring in x, sorted.
std::vector<Generator> generators_of(const GradedElement& x);
bool uses_kind(const GradedElement& x, Kind k);
/// Throws ForeignGenerator naming the first generator whose kind is not allowed.
void require_kinds(const GradedElement& x, std::initializer_list<Kind> allowed, std::string_view context);

enum class Parity { Even, Odd };

/// A derivation given on generators and extended by the graded Leibniz rule.
/// `action` returns nullopt for generators outside its domain.
struct Derivation {
  Parity parity = Parity::Odd;
  std::function<std::optional<GradedElement>(const Generator&)> action;
  std::string name;
};

/// Throws MissingAction when D has no rule for a generator occurring in x.
GradedElement apply_derivation(const Derivation& D, const GradedElement& x);

/// Sum of derivations of equal parity; defined on a generator if any summand is.
Derivation derivation_sum(std::string name, const std::vector<Derivation>& parts);

/// Algebra homomorphism that replaces generators according to `rule` (nullopt keeps the
/// generator). Replacements of odd generators must be odd.
GradedElement substitute(const GradedElement& x,
                         const std::function<std::optional<GradedElement>(const Generator&)>& rule);
/// Single-generator replacement.
GradedElement substitute(const GradedElement& x, const Generator& g, const GradedElement& value);

/// ∫_lower^upper dx of an element polynomial in the even degree-0 generator var.
GradedElement integrate_parameter(const GradedElement& x, const Generator& var, const Rational& lower,
                                  const Rational& upper);

/// y with x = y·g + (terms free of g), for an odd generator g.
GradedElement right_coefficient(const GradedElement& x, const Generator& g);
/// Terms free of the odd generator g.
GradedElement without_odd(const GradedElement& x, const Generator& g);

enum class OddPolicy { reject, coefficient_extraction };

/// Substitution values for even generators.
using Assignment = std::map<Generator, Rational>;
/// Odd word mask to coefficient.
using CoefficientTable = std::map<std::uint64_t, Rational>;

/// Substitutes all even generators. Throws UnassignedGenerator, and OddGeneratorError under
/// OddPolicy::reject when x contains odd generators.
CoefficientTable evaluate(const GradedElement& x, const Assignment& assignment, OddPolicy policy);
Rational evaluate_scalar(const GradedElement& x, const Assignment& assignment);
std::string odd_word_name(std::uint64_t mask);

/// Canonical JSON serialization and its inverse.
std::string to_json(const GradedElement& x);
GradedElement element_from_json(std::string_view text);
std::string to_text(const GradedElement& x);
std::string to_latex(const GradedElement& x);
std::string generator_text(const Generator& g);
std::string generator_latex(const Generator& g);

}  // namespace cw
