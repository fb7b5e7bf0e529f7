#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cyclic/hyperbolic.hpp"
#include "cyclic/types.hpp"

// Polygons with spacelike sides in 1+1 spacetime, <x, y> = x1 y1 - x2 y2,
// inscribed in the future branch of the hyperbola <x, x> = -R^2.
//
// Uniqueness is up to boosts, translations and reflections; the solver
// returns the representative with vertex j at (R sinh t_j, R cosh t_j),
// where t runs from -a_d/2 at the vertex after the dominant side d up to
// a_d/2 at the vertex before it.
namespace cyclic::minkowski {

struct Feasibility {
  bool feasible = false;
  std::size_t dominant = 0;  // longest side
  double margin = 0.0;       // l_dominant - sum of the others
};

// Feasible iff some (necessarily the longest) side is strictly longer
// than the sum of the others.
Feasibility check_minkowski_feasibility(const SideLengths& lengths);

struct MinkowskiSolution {
  double radius = 0.0;
  hyperbolic::FootDistances rapidities;  // a_k, caller side order
  std::vector<double> positions;         // rapidity t_j of vertex j
  std::vector<Vec2> vertices;            // (R sinh t_j, R cosh t_j)
  int iterations = 0;
};

// Finds R as the unique positive zero of Phi with the side lengths used
// directly as chords. Throws NoPolygon when infeasible.
MinkowskiSolution solve_minkowski(const SideLengths& lengths);

double spacetime_dot(const Vec2& a, const Vec2& b);

// sqrt(<q - p, q - p>) for a spacelike separation; NaN otherwise.
double spacelike_length(const Vec2& p, const Vec2& q);

// phi_l(a) = sum_{k != d} (Clh2(a_k) + log(l_k) a_k) - (Clh2(a_d) + log(l_d) a_d)
// with d the dominant side (longest, the last one on ties). Throws DimensionMismatch.
double phi_ell(const SideLengths& lengths, std::span<const double> a);

// Unconstrained partial derivatives of phi_ell.
std::vector<double> grad_phi_ell(const SideLengths& lengths, std::span<const double> a);

// Central second difference of phi_ell along `direction` restricted to the
// constraint a_d = sum of the others: the dominant component of the
// direction is replaced by the sum of the rest.
double constrained_second_difference(const SideLengths& lengths, std::span<const double> a,
                                     std::span<const double> direction, double step = 1e-4);

}  // namespace cyclic::minkowski
