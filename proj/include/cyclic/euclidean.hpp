#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cyclic/types.hpp"

namespace cyclic::euclidean {

struct PolygonInequality {
  enum class Status { kStrict, kEquality, kViolated };
  Status status = Status::kStrict;
  // The unique side with l_k >= sum of the others, when status != kStrict.
  std::size_t side = 0;
  // l_k - sum_{i != k} l_i at the longest side; negative iff strict.
  double margin = 0.0;

  bool strict() const { return status == Status::kStrict; }
};

// Exact comparison: equality means l_k == sum of the others in floating
// point.
PolygonInequality check_polygon_inequalities(const SideLengths& lengths);

// Throws NoPolygon naming the offending side unless `check` is strict.
void require_strict(const PolygonInequality& check, const char* geometry);

struct EuclideanSolution {
  double radius = 0.0;
  CentralAngles angles;
  // Counterclockwise, circumcenter at the origin, first vertex on the
  // positive x axis. Side k joins vertex k to vertex k+1 (mod n).
  std::vector<Vec2> vertices;
  bool center_inside = true;
  int iterations = 0;
};

// Largest radius the solver will chase, relative to the longest side.
inline constexpr double kMaxRadiusRatio = 1e15;

// Root-finds the circumradius and recovers the central angles.
//
// With m the longest side the circumcenter lies inside (or on) the
// polygon iff sum_{k != m} asin(l_k / l_m) >= pi/2. Then R solves
//   sum_k asin(l_k / 2R) = pi,
// otherwise alpha_m > pi and R solves
//   sum_{k != m} asin(l_k / 2R) = asin(l_m / 2R).
// Both are bracketed on [l_m / 2, inf) and solved by bisection plus a
// short Newton polish.
//
// Throws NoPolygon if the polygon inequalities are not strict, or if the
// input is so close to degenerate that R exceeds kMaxRadiusRatio * l_m.
EuclideanSolution solve_euclidean(const SideLengths& lengths);

// Vertex j sits at angle alpha_1 + ... + alpha_j; vertex 0 at angle 0.
// Vertices past the largest angle are placed backward from vertex 0, so
// rounding in the angle sum only touches the longest side.
std::vector<Vec2> vertices_on_circle(double radius, const CentralAngles& angles);

// Shoelace area of a counterclockwise simple polygon. Throws DomainError
// for fewer than 3 vertices.
double polygon_area(std::span<const Vec2> vertices);

// Distances between consecutive vertices, closing the loop.
std::vector<double> chord_lengths(std::span<const Vec2> vertices);

}  // namespace cyclic::euclidean
