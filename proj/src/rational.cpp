#include "cartanweil/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cw {

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto valid_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = trim(text.substr(0, slash));
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(text.substr(slash + 1));
  if (!valid_integer(num) || !valid_integer(den))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  auto strip_plus = [](std::string_view s) { return (!s.empty() && s.front() == '+') ? s.substr(1) : s; };
  const Rational n(std::string(strip_plus(num)));
  const Rational d(std::string(strip_plus(den)));
  if (is_zero(d)) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return n / d;
}

std::string to_string(const Rational& q) { return q.str(); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

bool invert(const RationalMatrix& m, RationalMatrix& inverse) {
  if (m.rows() != m.cols()) return false;
  const Eigen::Index n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && is_zero(a(pivot, col))) ++pivot;
    if (pivot == n) return false;
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    const Rational scale = Rational(1) / a(col, col);
    a.row(col) *= scale;
    inv.row(col) *= scale;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || is_zero(a(r, col))) continue;
      const Rational f = a(r, col);
      a.row(r) -= f * a.row(col);
      inv.row(r) -= f * inv.row(col);
    }
  }
  inverse = inv;
  return true;
}

}  // namespace cw
