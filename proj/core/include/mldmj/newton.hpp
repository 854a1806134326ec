#pragma once

#include <vector>

#include "mldmj/poly.hpp"

namespace mldmj {

/// Integer linear functional on exponent space.
using Covector = std::vector<long>;

long pairing(const Covector& p, const Monomial& v);
Covector primitive_covector(Covector p);

struct Facet {
  Covector normal;  // primitive, componentwise >= 0
  long offset;      // facet hyperplane <normal, x> = offset
};

struct Face {
  Covector covector;            // primitive relative-interior covector
  long value;                   // <covector, polygon>
  bool compact;                 // iff the covector is strictly positive
  std::vector<Monomial> points;  // generating points lying on the face
};

/// Newton polygon Gamma_+ of a finite point set in the nonnegative orthant:
/// the convex hull of the union of the translated orthants point + R^n_{>=0}.
class NewtonPolygon {
 public:
  explicit NewtonPolygon(std::vector<Monomial> points);
  static NewtonPolygon of(const Poly& f);

  std::size_t ambient_dim() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  const std::vector<Monomial>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

  bool contains(const Monomial& x) const;
  /// Whether (1,...,1) lies in the polygon.
  bool contains_one() const;
  /// min over the polygon of <p, .>; requires p componentwise >= 0.
  long min_pairing(const Covector& p) const;

  /// All proper faces, or only the compact ones (those carrying a strictly
  /// positive covector).
  std::vector<Face> faces(bool compact_only) const;
  std::vector<Face> compact_faces() const { return faces(true); }

 private:
  std::size_t n_;
  std::vector<Monomial> gens_;
  std::vector<Monomial> vertices_;
  std::vector<Facet> facets_;
};

/// Restriction of f to a face: the terms whose exponents lie on it.
Poly face_restriction(const Poly& f, const Face& face);

/// Log discrepancy data of the monomial valuation with covector p:
/// k = <p, (1,...,1)>, val = <p, polygon>; the contribution to the minimal
/// log discrepancy is k - val.
struct CovectorDiscrepancy {
  Covector p;
  long k;
  long val;
};

struct PolygonMld {
  bool finite;
  long value = 0;               // meaningful when finite
  CovectorDiscrepancy witness;  // attains the value, or certifies -infinity
};

/// Minimal log discrepancy of the polygon: inf over strictly positive
/// integer covectors of <p,1> - <p,polygon>. Finite iff 1 is in the polygon.
PolygonMld mld_polygon(const NewtonPolygon& polygon);

}  // namespace mldmj
