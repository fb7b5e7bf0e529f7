#pragma once

#include <cstddef>
#include <vector>

#include "cyclic/euclidean.hpp"
#include "cyclic/types.hpp"

// Cyclic polygons on the unit sphere, reduced to the Euclidean problem
// for the chordal polygon (straight segments through the ball).
namespace cyclic::spherical {

// Arc length on the unit sphere to chord length: 2 sin(l / 2).
// Throws DomainError unless 0 < l < 2 pi.
double chord_from_arc(double ell);

struct Feasibility {
  enum class Status { kFeasible, kPolygonEquality, kPolygonViolated, kPerimeterBound };
  Status status = Status::kFeasible;
  std::size_t side = 0;  // offending side for the polygon conditions
  bool side_at_fault = false;  // side breaks the polygon inequalities
  double perimeter = 0.0;

  bool feasible() const { return status == Status::kFeasible; }
};

// Perimeters at or above 2 pi - kPerimeterSlack are rejected: such
// polygons degenerate to great circles.
inline constexpr double kPerimeterSlack = 1e-12;

Feasibility check_spherical_feasibility(const SideLengths& lengths);

struct SphericalSolution {
  double chordal_radius = 0.0;         // circumradius of the chordal polygon, < 1
  double spherical_circumradius = 0.0; // geodesic radius asin(chordal_radius)
  CentralAngles angles;                // shared by the chordal polygon
  // Unit vectors; the circle axis is +z, vertex 0 lies in the xz-plane
  // with positive x, order is counterclockwise seen from +z.
  std::vector<Vec3> vertices;
};

// Throws NoPolygon when infeasible and InvariantViolation if the chordal
// circumradius is not below 1.
SphericalSolution solve_spherical(const SideLengths& lengths);

// Great-circle distance between unit vectors, via atan2(|u x v|, u . v).
double geodesic_distance(const Vec3& u, const Vec3& v);

}  // namespace cyclic::spherical
