#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mldmj/coeff.hpp"
#include "mldmj/monomial.hpp"

namespace mldmj {

/// Ambient polynomial ring: a characteristic and an ordered variable list.
struct Ring {
  unsigned long characteristic = 0;  // 0 or prime
  std::vector<std::string> vars;

  std::size_t nvars() const { return vars.size(); }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars, unsigned long characteristic = 0);

/// Sparse multivariate polynomial with exact coefficients. Immutable in
/// spirit: all operations return new values.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly zero(const RingPtr& ring) { return Poly(ring); }
  static Poly constant(const RingPtr& ring, const Coeff& c);
  static Poly variable(const RingPtr& ring, std::size_t index);
  static Poly term(const RingPtr& ring, Monomial m, const Coeff& c);

  const RingPtr& ring() const { return ring_; }
  unsigned long characteristic() const { return ring_->characteristic; }
  std::size_t nvars() const { return ring_->nvars(); }
  const std::map<Monomial, Coeff>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Minimum total degree over the support; nullopt (= +infinity) for 0.
  std::optional<int> multiplicity() const;
  /// Sum of the terms of minimal total degree. Errors on 0.
  Poly initial_form() const;
  /// Homogeneous parts of degree <= m.
  Poly truncate_degree(int m) const;
  /// Homogeneous part of exact degree k.
  Poly homogeneous_part(int k) const;
  bool is_homogeneous() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Coeff& c) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }

  Poly pow(int e, int trunc = -1) const;
  /// Product truncated at total degree `trunc` (-1 = exact).
  Poly mul_trunc(const Poly& o, int trunc) const;

  Poly derivative(std::size_t var) const;
  Coeff evaluate(const std::vector<Coeff>& point) const;
  /// Compose with one Poly per variable; truncate at total degree `trunc`
  /// when >= 0. The assignments live in a common target ring.
  Poly substitute(const std::vector<Poly>& assignment, int trunc = -1) const;
  /// Shift x_i -> x_i + a_i.
  Poly translate(const std::vector<Coeff>& a) const;

  Coeff coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Coeff& c);  // merges, drops zeros

  /// Leading monomial/term under an order. Errors on 0.
  const Monomial& leading_monomial(const MonomialOrder& ord) const;
  Coeff leading_coeff(const MonomialOrder& ord) const;

  std::string str() const;

 private:
  void check_ring(const Poly& o) const;

  RingPtr ring_;
  std::map<Monomial, Coeff> terms_;
};

/// Parse the shared polynomial grammar: identifiers, + - * ^, integer and
/// a/b rational literals, parentheses; whitespace insignificant.
Poly parse_poly(const std::string& text, const RingPtr& ring);
/// Variant that infers the variable list (order of first appearance).
Poly parse_poly_infer(const std::string& text, unsigned long characteristic);

}  // namespace mldmj
