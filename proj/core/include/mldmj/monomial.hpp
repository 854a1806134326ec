#pragma once

#include <numeric>
#include <vector>

namespace mldmj {

/// Exponent vector of fixed length (the ambient variable count).
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

/// Total, multiplicative term order; the graded kinds refine total degree.
struct MonomialOrder {
  enum class Kind { GrevLex, GrLex, Lex };

  Kind kind = Kind::GrevLex;
  std::vector<int> perm;  // empty = identity; perm[i] = underlying variable

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder grlex() { return {Kind::GrLex, {}}; }
  static MonomialOrder lex() { return {Kind::Lex, {}}; }

  /// a < b in the order.
  bool less(const Monomial& a, const Monomial& b) const;
};

}  // namespace mldmj
