#pragma once

#include <vector>

#include "mldmj/poly.hpp"

namespace mldmj {

struct GroebnerOptions {
  MonomialOrder order;
  /// Upper bound on elementary monomial operations (each reduction is
  /// charged by the term count of the reducer) before giving up with
  /// ResourceLimit. Negative disables the budget.
  long step_budget = -1;
};

/// Remainder of f on division by the basis (full reduction of every term).
Poly normal_form(const Poly& f, const std::vector<Poly>& basis,
                 const MonomialOrder& order);

/// Reduced Groebner basis via Buchberger's algorithm with the normal pair
/// selection strategy and the coprime-lcm criterion. Leading coefficients
/// are normalized to 1; the result is sorted by leading monomial, so it is
/// a deterministic function of the generated ideal.
std::vector<Poly> groebner_basis(std::vector<Poly> gens,
                                 const GroebnerOptions& opts = {});

/// Whether the ideal generated by a *Groebner basis* is the unit ideal.
bool basis_contains_one(const std::vector<Poly>& gb);

/// Whether f lies in the ideal with the given Groebner basis.
bool ideal_member(const Poly& f, const std::vector<Poly>& gb,
                  const MonomialOrder& order);

/// Krull dimension of R/I from a Groebner basis: the largest set of
/// variables independent modulo the leading-term ideal. Returns -1 for the
/// unit ideal.
int ideal_dimension(const std::vector<Poly>& gb, const MonomialOrder& order);

/// Whether V(gens) meets the torus (all coordinates invertible): Rabinowitsch
/// on the product of the variables.
bool torus_has_zero(const std::vector<Poly>& gens, const GroebnerOptions& opts = {});

}  // namespace mldmj
