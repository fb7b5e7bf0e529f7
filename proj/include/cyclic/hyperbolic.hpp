#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cyclic/types.hpp"

// Cyclic polygons in the hyperbolic plane, realized on the hyperboloid
//   { x in R^{2,1} : <x, x> = -1, x_3 > 0 },  <x, y> = x1 y1 + x2 y2 - x3 y3.
//
// Vertices of a cyclic polygon lie on a circle, a horocycle or a
// hypercycle. Which one is decided by the chordal lengths 2 sinh(l/2):
// the largest chord is shorter than, equal to, or longer than the sum of
// the others.
namespace cyclic::hyperbolic {

// Chordal length 2 sinh(l / 2) in the ambient R^{2,1}. Throws DomainError
// unless l is positive and finite.
double hyp_chord(double ell);

inline constexpr double kDefaultHorocycleBand = 1e-9;

struct CurveClass {
  enum class Kind { kCircle, kHorocycle, kHypercycle };
  Kind kind = Kind::kCircle;
  std::size_t dominant = 0;  // index of the longest side
  // chord_dominant - sum of the other chords.
  double margin = 0.0;
};

const char* kind_name(CurveClass::Kind kind);

// Chordal margins within band * (sum of chords) of zero classify as a
// horocycle. band = 0 gives the exact trichotomy. Throws NoPolygon if
// the polygon inequalities are not strict.
CurveClass classify(const SideLengths& lengths, double band = kDefaultHorocycleBand);

// Phi(x) = asinh(c_n / 2x) - sum_{k<n} asinh(c_k / 2x), with the dominant
// chord c_n stored last. Throws DomainError for x <= 0.
double phi(double x, std::span<const double> chords);

// Phi'(x) = (-tanh a_n + sum_{k<n} tanh a_k) / x, a_k = asinh(c_k / 2x).
double phi_prime(double x, std::span<const double> chords);

struct DefectRoot {
  double x = 0.0;
  int iterations = 0;
};

// Finds the zero of Phi above `lower`, where Phi(lower) < 0 is required.
// The upper bracket is doubled from max(2 lower, max chord) until Phi > 0;
// then bisection to relative 1e-15 and a Newton polish. Throws
// InvariantViolation if Phi(lower) >= 0 or no upper bracket is found.
DefectRoot find_defect_root(std::span<const double> chords, double lower);

// The unique x > 1 with Phi(x) = 0, i.e. cosh of the hypercycle distance.
double solve_hypercycle_radius(std::span<const double> chords);

// Foot distances along the axis geodesic, in caller side order. The
// dominant entry equals the sum of the others.
struct FootDistances {
  std::vector<double> values;
  std::size_t dominant = 0;

  // |a_dominant - sum of the others|.
  double additivity_residual() const;
};

struct CircleParams {
  double radius = 0.0;          // hyperbolic circumradius r
  double chordal_radius = 0.0;  // sinh r, circumradius of the chordal polygon
  std::vector<double> angles;   // central angles
};

// Vertex j is (s^2/2, s, 1 + s^2/2) with s = offsets[j]; the curve is
// x3 - x1 = 1.
struct HorocycleParams {
  std::vector<double> offsets;
};

// With u_j = t_j - c, c the midpoint of the positions and h = sinh(u_j/2),
// vertex j is (cosh R sinh u_j, -2 cosh R sinh R h^2, 1 + 2 cosh^2 R h^2):
// the curve sinh R x3 + cosh R x2 = sinh R, at distance R from its axis.
struct HypercycleParams {
  double distance = 0.0;       // R
  double cosh_distance = 0.0;  // cosh R, the root of Phi
  FootDistances feet;
  std::vector<double> positions;  // t_j
};

struct HyperbolicSolution {
  CurveClass curve;
  std::vector<Vec3> vertices;  // caller order; side k joins vertex k and k+1
  std::variant<CircleParams, HorocycleParams, HypercycleParams> params;
  int iterations = 0;
  std::vector<std::string> warnings;
};

// Hypercycle roots beyond this are reported as a horocycle with a warning.
inline constexpr double kHorocycleDrift = 1e12;

// Placement: circle centered on (0, 0, 1) with vertex 0 in the x1x3-plane;
// horocycle x3 - x1 = 1 with the vertex following the dominant side at
// (0, 0, 1); hypercycle as described at HypercycleParams.
HyperbolicSolution solve_hyperbolic(const SideLengths& lengths,
                                    double band = kDefaultHorocycleBand);

double lorentz_dot(const Vec3& a, const Vec3& b);

// Hyperbolic distance of two hyperboloid points through the chord,
// 2 asinh(|p - q| / 2). Equivalent to acosh(-<p, q>) and better
// conditioned for short sides.
double distance(const Vec3& p, const Vec3& q);

// Largest deviation of the vertices from the defining affine equation of
// the solution's curve.
double curve_residual(const HyperbolicSolution& solution);

}  // namespace cyclic::hyperbolic
