#pragma once

#include <string>
#include <vector>

#include "mldmj/poly.hpp"
#include "mldmj/result.hpp"

namespace mldmj {

/// Equations of the m-jet scheme of V(gens): for each generator f the
/// coefficients f^(0..m) of f(sum_j x^(j) t^j) mod t^(m+1). The jet ring has
/// one variable per (base index i, weight j); see jet_var_index.
struct JetSystem {
  std::size_t N = 0;
  int m = 0;
  bool local = false;  // x^(0) already sent to 0
  RingPtr ring;
  /// equations[g][j] = f_g^(j), homogeneous of weight j. After
  /// localization, identically-zero equations are dropped and the list is
  /// flattened per generator (weights no longer indexed by position).
  std::vector<std::vector<Poly>> equations;
};

/// Index of x_i^(j) in the jet ring of level m (weights 0..m per variable).
inline std::size_t jet_var_index(std::size_t i, int j, int m) {
  return i * static_cast<std::size_t>(m + 1) + static_cast<std::size_t>(j);
}

/// Weight of a jet-ring monomial under weight(x_i^(j)) = j.
int jet_weight(const Monomial& mono, std::size_t N, int m);

JetSystem jet_equations(const std::vector<Poly>& gens, int m);
JetSystem localize_at_origin(JetSystem system);

/// The local jet ideal of X_m(0) as polynomials in the N*m variables
/// x_i^(j), 1 <= j <= m (weight-0 variables eliminated). Generators must
/// vanish at the origin.
std::vector<Poly> local_jet_ideal(const std::vector<Poly>& gens, int m);

struct SmEntry {
  int m = 0;
  long s = 0;
  std::string status;  // "computed" or "budget-exceeded"
};

struct SmProfile {
  int d = 0;
  std::vector<SmEntry> entries;
};

/// s_m(X, x) = (m+1)d - dim X_m(x), with dim X_m(x) computed at the
/// translated origin from the local jet ideal. Throws PointNotOnVariety and
/// ResourceLimit.
long s_m_at(const std::vector<Poly>& gens, int d, const std::vector<Coeff>& point,
            int m, long budget = -1);

/// dim X_1(x) = N - rank of the Jacobian at x.
int embedding_dimension(const std::vector<Poly>& gens, const std::vector<Coeff>& point);

/// Minimum multiplicity at x over the given generators.
int order_of_ideal(const std::vector<Poly>& gens, const std::vector<Coeff>& point);

/// s_m(Y, 0) for Y cut out by the initial forms of the generators of
/// minimal multiplicity.
long initial_ideal_jets(const std::vector<Poly>& gens, int d, int m, long budget = -1);

/// Default level bound per dimension (see mld_via_jets).
int default_jet_bound(int d);

/// Scan s_m for 1 <= m <= bound. Any negative s_m certifies -infinity at
/// that level; otherwise the minimum is an upper bound for mld_MJ,
/// certified only when (d = 1, bound >= 5) or (d = 2, char != 2,
/// bound >= 41). Per-level budget failures are recorded in the profile and
/// skipped; if no level computes, ResourceLimit propagates.
MldResult mld_via_jets(const std::vector<Poly>& gens, int d,
                       const std::vector<Coeff>& point, int bound,
                       long budget = -1, SmProfile* profile = nullptr);

void to_json(nlohmann::json& j, const SmEntry& e);
void to_json(nlohmann::json& j, const SmProfile& p);

}  // namespace mldmj
