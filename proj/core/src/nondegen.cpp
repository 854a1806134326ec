#include "mldmj/nondegen.hpp"

#include <algorithm>

#include "mldmj/errors.hpp"
#include "mldmj/groebner.hpp"

namespace mldmj {

NondegenReport is_nondegenerate(const Poly& f, FaceMode mode, long budget) {
  if (f.is_zero()) throw ZeroPolynomial("non-degeneracy of 0");
  if (f.nvars() > 4) throw DimensionTooLarge("ambient dimension above 4");
  NewtonPolygon polygon = NewtonPolygon::of(f);
  std::vector<Face> faces = polygon.faces(mode == FaceMode::CompactFaces);
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    return a.covector < b.covector;
  });

  GroebnerOptions opts;
  opts.step_budget = budget;
  for (const Face& face : faces) {
    Poly fg = face_restriction(f, face);
    std::vector<Poly> partials;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      Poly d = fg.derivative(i);
      if (!d.is_zero()) partials.push_back(std::move(d));
    }
    // With every partial identically zero the common-zero condition is all
    // of the torus.
    bool fails = partials.empty() || torus_has_zero(partials, opts);
    if (fails) {
      NondegenReport r;
      r.nondegenerate = false;
      r.failing_face = face;
      // Cheap witness: the all-ones point, when it actually vanishes.
      std::vector<Coeff> ones(f.nvars(), Coeff::one(f.characteristic()));
      if (std::all_of(partials.begin(), partials.end(), [&](const Poly& g) {
            return g.evaluate(ones).is_zero();
          }))
        r.note = "witness (1,...,1)";
      return r;
    }
  }
  return {};
}

}  // namespace mldmj
