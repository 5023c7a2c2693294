#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <string_view>

namespace cw {

/// Exact arbitrary-precision rational. Expression templates are disabled so
/// that `auto` bindings and Eigen interop behave like an ordinary value type.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = MatrixX<Rational>;
using RationalVector = VectorX<Rational>;

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" form; integers are written without a denominator.
std::string to_string(const Rational& q);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(num) / Rational(den);
}

inline bool is_zero(const Rational& q) { return q.is_zero(); }

/// Exact integer power, exponent >= 0.
Rational pow(const Rational& base, unsigned exponent);

template <typename Derived>
bool is_identity(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

/// Exact inverse by Gauss-Jordan elimination; returns false when singular.
bool invert(const RationalMatrix& m, RationalMatrix& inverse);

}  // namespace cw
