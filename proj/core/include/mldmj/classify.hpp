#pragma once

#include <utility>
#include <vector>

#include "mldmj/jets.hpp"
#include "mldmj/poly.hpp"
#include "mldmj/result.hpp"

namespace mldmj {

/// Plane curve singularities at the origin, any characteristic. Always
/// certified: the value depends only on the multiplicity and the root
/// pattern of the initial form.
MldResult classify_curve(const Poly& f);

/// Bring a double point f in 3 variables (char != 2) to the form
/// x^2 + h(y,z) modulo a unit and degree > trunc; returns h in a 2-variable
/// ring. Throws CharacteristicUnsupported and NormalizationFailed.
Poly tschirnhausen_normalize(const Poly& f, int trunc);

struct SurfaceClass {
  std::string label;
  Poly h;  // the normalized h the label was decided on
};

struct SurfaceOutcome {
  MldResult result;
  SurfaceClass cls;
};

inline constexpr int kDefaultTrunc = 12;

/// The double-point class table for f of multiplicity 2 and embedding
/// dimension 3 (char != 2). Decisions are re-run at trunc+2; a changed
/// verdict raises PrecisionInsufficient.
SurfaceOutcome classify_surface_double(const Poly& f, int trunc = kDefaultTrunc);

struct MaximalType {
  bool maximal = false;
  int c = 0;      // codimension emb - d
  int alpha = 0;  // order of the ideal
};

MaximalType is_maximal_type(const std::vector<Poly>& gens, int d,
                            const std::vector<Coeff>& point);

/// Surface dispatch by embedding dimension and order. The maximal-type
/// cases delegate to mld_via_jets and are certified only on a -infinity
/// verdict; everything else is closed-form.
MldResult dispatch_surface(const std::vector<Poly>& gens,
                           const std::vector<Coeff>& point, long budget = -1,
                           SmProfile* profile = nullptr,
                           SurfaceClass* cls = nullptr,
                           int trunc = kDefaultTrunc);

}  // namespace mldmj
