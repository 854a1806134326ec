#pragma once

#include <utility>
#include <vector>

#include "mldmj/poly.hpp"

namespace mldmj {

/// Dense univariate polynomial, ascending coefficients.
using UPoly = std::vector<Coeff>;

int udeg(const UPoly& f);
UPoly utrim(UPoly f);
UPoly umul(const UPoly& a, const UPoly& b);
/// Field-coefficient division with remainder.
std::pair<UPoly, UPoly> udivmod(const UPoly& a, const UPoly& b);
UPoly udivexact(const UPoly& a, const UPoly& b);
UPoly uderiv(const UPoly& f, unsigned long characteristic);
/// Monic gcd.
UPoly ugcd(UPoly a, UPoly b);
UPoly umonic(UPoly f);

/// Squarefree decomposition f = c * prod fac_i^{mult_i} with the fac_i monic,
/// squarefree and pairwise coprime; Musser's iteration with an explicit
/// p-th-power extraction branch when the derivative vanishes.
std::vector<std::pair<UPoly, int>> squarefree_decompose(const UPoly& f,
                                                        unsigned long characteristic);

/// Root-multiplicity partition of a binary form over the algebraic closure,
/// as a descending multiset. h must be homogeneous, nonzero, in 2 variables.
std::vector<int> squarefree_pattern(const Poly& h);

/// Squarefree factors of a binary form as binary forms (the factor at
/// infinity included), with multiplicities.
std::vector<std::pair<Poly, int>> binary_squarefree_factors(const Poly& h);

/// Exact multivariate division; throws if b does not divide a.
Poly poly_divexact(const Poly& a, const Poly& b);

/// Gcd of two polynomials in exactly 2 variables (primitive PRS).
Poly bivariate_gcd(const Poly& a, const Poly& b);

/// If f = g^p for the ring characteristic p, return g.
bool pth_power_root(const Poly& f, Poly* root);

}  // namespace mldmj
