#include "cyclic/minkowski.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cyclic/errors.hpp"
#include "cyclic/specfun.hpp"

namespace cyclic::minkowski {

namespace {

// The longest side, the last one on ties, so equal lengths read as
// "dominant last".
std::size_t dominant_index(const SideLengths& lengths) {
  std::size_t d = 0;
  for (std::size_t k = 1; k < lengths.size(); ++k) {
    if (lengths[k] >= lengths[d]) d = k;
  }
  return d;
}

}  // namespace

Feasibility check_minkowski_feasibility(const SideLengths& lengths) {
  Feasibility out;
  out.dominant = lengths.longest();
  double rest = 0.0;
  for (std::size_t k = 0; k < lengths.size(); ++k) {
    if (k != out.dominant) rest += lengths[k];
  }
  out.margin = lengths[out.dominant] - rest;
  out.feasible = out.margin > 0.0;
  return out;
}

MinkowskiSolution solve_minkowski(const SideLengths& lengths) {
  const auto feas = check_minkowski_feasibility(lengths);
  if (!feas.feasible) {
    throw NoPolygon(Infeasibility::kNoDominantSide, feas.dominant,
                    "minkowski: no side is longer than the sum of the others (side " +
                        std::to_string(feas.dominant + 1) +
                        " is the longest); a polygon inscribed in a hyperbola branch needs one");
  }
  const std::size_t n = lengths.size();
  const std::size_t d = feas.dominant;
  std::vector<double> ordered(n);
  for (std::size_t j = 0; j < n; ++j) ordered[j] = lengths[(d + 1 + j) % n];

  // Phi -> -inf as x -> 0 for n >= 3.
  double lower = 1.0;
  int shrink = 0;
  while (!(hyperbolic::phi(lower, ordered) < 0.0)) {
    lower *= 0.5;
    if (++shrink > 2000 || lower == 0.0) {
      throw InvariantViolation("minkowski: Phi stays non-negative near 0");
    }
  }
  const auto root = hyperbolic::find_defect_root(ordered, lower);

  MinkowskiSolution out;
  out.radius = root.x;
  out.iterations = root.iterations + shrink;
  out.rapidities.dominant = d;
  out.rapidities.values.assign(n, 0.0);
  double rest = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == d) continue;
    out.rapidities.values[k] = 2.0 * std::asinh(lengths[k] / (2.0 * out.radius));
    rest += out.rapidities.values[k];
  }
  out.rapidities.values[d] = rest;

  out.positions.assign(n, 0.0);
  out.vertices.resize(n);
  // Parameters run from -a_d/2 to a_d/2: the symmetric frame keeps the
  // coordinates as small as the polygon allows.
  double t = -0.5 * rest;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t v = (d + 1 + j) % n;
    out.positions[v] = t;
    out.vertices[v] = Vec2{out.radius * std::sinh(t), out.radius * std::cosh(t)};
    t += out.rapidities.values[v];
  }
  return out;
}

double spacetime_dot(const Vec2& a, const Vec2& b) {
  return a.x * b.x - a.y * b.y;
}

double spacelike_length(const Vec2& p, const Vec2& q) {
  const double dx = q.x - p.x;
  const double dt = q.y - p.y;
  const double sq = (dx - dt) * (dx + dt);
  return sq > 0.0 ? std::sqrt(sq) : std::numeric_limits<double>::quiet_NaN();
}

double phi_ell(const SideLengths& lengths, std::span<const double> a) {
  if (a.size() != lengths.size()) {
    throw DimensionMismatch("phi_ell: side lengths and rapidities differ in count");
  }
  const std::size_t d = dominant_index(lengths);
  double value = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double term = specfun::clh2(a[k]) + std::log(lengths[k]) * a[k];
    value += (k == d) ? -term : term;
  }
  return value;
}

std::vector<double> grad_phi_ell(const SideLengths& lengths, std::span<const double> a) {
  if (a.size() != lengths.size()) {
    throw DimensionMismatch("grad_phi_ell: side lengths and rapidities differ in count");
  }
  const std::size_t d = dominant_index(lengths);
  std::vector<double> g(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double partial =
        -std::log(std::abs(2.0 * std::sinh(0.5 * a[k]))) + std::log(lengths[k]);
    g[k] = (k == d) ? -partial : partial;
  }
  return g;
}

double constrained_second_difference(const SideLengths& lengths, std::span<const double> a,
                                     std::span<const double> direction, double step) {
  if (a.size() != lengths.size() || direction.size() != lengths.size()) {
    throw DimensionMismatch("constrained_second_difference: size mismatch");
  }
  const std::size_t d = dominant_index(lengths);
  std::vector<double> v(direction.begin(), direction.end());
  double rest = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k != d) rest += v[k];
  }
  v[d] = rest;
  std::vector<double> plus(a.begin(), a.end()), minus(a.begin(), a.end());
  for (std::size_t k = 0; k < v.size(); ++k) {
    plus[k] += step * v[k];
    minus[k] -= step * v[k];
  }
  return (phi_ell(lengths, plus) - 2.0 * phi_ell(lengths, a) + phi_ell(lengths, minus)) /
         (step * step);
}

}  // namespace cyclic::minkowski
