#pragma once

#include <optional>

#include "mldmj/newton.hpp"

namespace mldmj {

enum class FaceMode { AllFaces, CompactFaces };

struct NondegenReport {
  bool nondegenerate = true;
  std::optional<Face> failing_face;
  std::string note;  // set when a torus witness was cheaply found
};

/// Non-degeneracy of f with respect to the faces of its Newton polygon: for
/// every face gamma in scope, the partials of the restriction f_gamma have
/// no common zero on the torus over the algebraic closure.
NondegenReport is_nondegenerate(const Poly& f, FaceMode mode, long budget = -1);

}  // namespace mldmj
