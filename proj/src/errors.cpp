#include "cyclic/errors.hpp"

namespace cyclic {

const char* infeasibility_code(Infeasibility reason) {
  switch (reason) {
    case Infeasibility::kPolygonEquality:
      return "polygon_inequality_equality";
    case Infeasibility::kPolygonViolated:
      return "polygon_inequality_violated";
    case Infeasibility::kPerimeterBound:
      return "perimeter_bound";
    case Infeasibility::kNoDominantSide:
      return "reverse_inequality_missing";
    case Infeasibility::kNearDegenerate:
      return "near_degenerate";
  }
  return "unknown";
}

}  // namespace cyclic
