#pragma once

#include <optional>
#include <vector>

#include "cyclic/types.hpp"

// The variational formulation for Euclidean cyclic polygons: central
// angles are the variables, and the polygon is the unique maximizer of
//
//   f(alpha) = sum_k Cl2(alpha_k) + log(l_k) alpha_k
//
// over the simplex sum alpha_k = 2 pi. At the maximizer the gradient is
// the constant vector log(R), R being the circumradius.
namespace cyclic::variational {

double f_ell(const SideLengths& lengths, const CentralAngles& alpha);

// sum_k Cl2(alpha_k); f_ell without the linear term.
double v_n(const CentralAngles& alpha);

// Component k is log(l_k) - log(2 sin(alpha_k / 2)). Throws
// SingularGradient if some angle sits on the boundary (0 or 2 pi).
std::vector<double> grad_f_ell(const SideLengths& lengths, const CentralAngles& alpha);

struct MaximizerOptions {
  double spread_tolerance = 1e-10;  // max - min of the gradient components
  int max_iterations = 10000;
  double boundary_guard = 1e-14;    // no angle is stepped below this
};

struct SimplexMaximum {
  CentralAngles angles;
  int iterations = 0;
  double gradient_spread = 0.0;
};

// Maximizes f_ell over the open simplex with safeguarded Newton steps on
// the constraint plane, starting from the barycenter. The lengths must
// satisfy the strict polygon inequalities; otherwise the supremum sits on
// a simplex vertex and ConvergenceError is thrown carrying the best
// iterate.
SimplexMaximum maximize_on_simplex(const SideLengths& lengths,
                                   const MaximizerOptions& options = {});

struct CriticalPointCheck {
  // Set when all ratios l_k / (2 sin(alpha_k / 2)) agree.
  std::optional<double> radius;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  // (max - min) / min over the ratios.
  double relative_spread = 0.0;
};

// Tests the Lagrange condition at an interior point. A mismatch is a
// result, not an error.
CriticalPointCheck check_critical_point(const SideLengths& lengths,
                                        const CentralAngles& alpha,
                                        double relative_tolerance = 1e-9);

}  // namespace cyclic::variational
