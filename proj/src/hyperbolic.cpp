#include "cyclic/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cyclic/errors.hpp"
#include "cyclic/euclidean.hpp"

namespace cyclic::hyperbolic {

namespace {

// Chords in caller order, rotated so that the dominant one is last.
std::vector<double> dominant_last(const std::vector<double>& chords, std::size_t dominant) {
  const std::size_t n = chords.size();
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = chords[(dominant + 1 + j) % n];
  return out;
}

std::vector<double> chords_of(const SideLengths& lengths) {
  std::vector<double> c(lengths.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = hyp_chord(lengths[k]);
  return c;
}

HorocycleParams horocycle_from(const std::vector<double>& chords, std::size_t dominant,
                               std::vector<Vec3>& vertices) {
  const std::size_t n = chords.size();
  HorocycleParams p;
  p.offsets.assign(n, 0.0);
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t v = (dominant + 1 + j) % n;
    p.offsets[v] = s;
    s += chords[v];
  }
  vertices.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    const double t = p.offsets[v];
    const double h = 0.5 * t * t;
    vertices[v] = Vec3{h, t, 1.0 + h};
  }
  return p;
}

}  // namespace

const char* kind_name(CurveClass::Kind kind) {
  switch (kind) {
    case CurveClass::Kind::kCircle:
      return "circle";
    case CurveClass::Kind::kHorocycle:
      return "horocycle";
    case CurveClass::Kind::kHypercycle:
      return "hypercycle";
  }
  return "unknown";
}

double hyp_chord(double ell) {
  if (!(ell > 0.0) || !std::isfinite(ell)) {
    throw DomainError("hyp_chord: length must be positive and finite");
  }
  const double c = 2.0 * std::sinh(0.5 * ell);
  if (!std::isfinite(c)) throw DomainError("hyp_chord: chordal length overflows");
  return c;
}

CurveClass classify(const SideLengths& lengths, double band) {
  euclidean::require_strict(euclidean::check_polygon_inequalities(lengths), "hyperbolic");
  const auto chords = chords_of(lengths);
  CurveClass out;
  out.dominant = lengths.longest();
  double rest = 0.0;
  double total = 0.0;
  for (std::size_t k = 0; k < chords.size(); ++k) {
    total += chords[k];
    if (k != out.dominant) rest += chords[k];
  }
  out.margin = chords[out.dominant] - rest;
  const double tau = band * total;
  if (std::abs(out.margin) <= tau) {
    out.kind = CurveClass::Kind::kHorocycle;
  } else if (out.margin < 0.0) {
    out.kind = CurveClass::Kind::kCircle;
  } else {
    out.kind = CurveClass::Kind::kHypercycle;
  }
  return out;
}

double phi(double x, std::span<const double> chords) {
  if (!(x > 0.0)) throw DomainError("phi: argument must be positive");
  const std::size_t n = chords.size();
  double value = std::asinh(chords[n - 1] / (2.0 * x));
  for (std::size_t k = 0; k + 1 < n; ++k) value -= std::asinh(chords[k] / (2.0 * x));
  return value;
}

double phi_prime(double x, std::span<const double> chords) {
  if (!(x > 0.0)) throw DomainError("phi_prime: argument must be positive");
  auto tanh_a = [x](double c) {
    const double y = c / (2.0 * x);
    return y / std::sqrt(1.0 + y * y);
  };
  const std::size_t n = chords.size();
  double s = -tanh_a(chords[n - 1]);
  for (std::size_t k = 0; k + 1 < n; ++k) s += tanh_a(chords[k]);
  return s / x;
}

DefectRoot find_defect_root(std::span<const double> chords, double lower) {
  if (!(phi(lower, chords) < 0.0)) {
    throw InvariantViolation("find_defect_root: Phi is not negative at the lower bracket");
  }
  DefectRoot out;
  double lo = lower;
  double hi = std::max(2.0 * lower, *std::max_element(chords.begin(), chords.end()));
  while (phi(hi, chords) <= 0.0) {
    lo = hi;
    hi *= 2.0;
    ++out.iterations;
    if (hi > 1e200) {
      throw InvariantViolation("find_defect_root: no sign change of Phi below 1e200");
    }
  }
  while (hi - lo > 1e-15 * hi && out.iterations < 4000) {
    const double mid = 0.5 * (lo + hi);
    (phi(mid, chords) <= 0.0 ? lo : hi) = mid;
    ++out.iterations;
  }
  double x = 0.5 * (lo + hi);
  double residual = std::abs(phi(x, chords));
  for (int polish = 0; polish < 3 && residual > 0.0; ++polish) {
    const double next = x - phi(x, chords) / phi_prime(x, chords);
    if (!(next >= lo && next <= hi)) break;
    const double r = std::abs(phi(next, chords));
    if (!(r < residual)) break;
    x = next;
    residual = r;
    ++out.iterations;
  }
  out.x = x;
  return out;
}

double solve_hypercycle_radius(std::span<const double> chords) {
  return find_defect_root(chords, 1.0).x;
}

double FootDistances::additivity_residual() const {
  double rest = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k != dominant) rest += values[k];
  }
  return std::abs(values[dominant] - rest);
}

HyperbolicSolution solve_hyperbolic(const SideLengths& lengths, double band) {
  HyperbolicSolution out;
  out.curve = classify(lengths, band);
  const auto chords = chords_of(lengths);
  const std::size_t n = chords.size();
  const std::size_t d = out.curve.dominant;

  switch (out.curve.kind) {
    case CurveClass::Kind::kCircle: {
      const auto flat = euclidean::solve_euclidean(SideLengths(chords));
      CircleParams p;
      p.chordal_radius = flat.radius;
      p.radius = std::asinh(flat.radius);
      p.angles.assign(flat.angles.values().begin(), flat.angles.values().end());
      const double height = std::sqrt(1.0 + flat.radius * flat.radius);
      out.vertices.reserve(n);
      for (const Vec2& v : flat.vertices) out.vertices.push_back(Vec3{v.x, v.y, height});
      out.iterations = flat.iterations;
      out.params = std::move(p);
      break;
    }
    case CurveClass::Kind::kHorocycle:
      out.params = horocycle_from(chords, d, out.vertices);
      break;
    case CurveClass::Kind::kHypercycle: {
      const auto ordered = dominant_last(chords, d);
      const auto root = find_defect_root(ordered, 1.0);
      out.iterations = root.iterations;
      const double rbar = root.x;
      if (rbar > kHorocycleDrift) {
        out.warnings.push_back(
            "hypercycle distance overflows (cosh R > 1e12); reporting the limiting horocycle");
        out.params = horocycle_from(chords, d, out.vertices);
        break;
      }
      HypercycleParams p;
      p.cosh_distance = rbar;
      p.distance = std::acosh(rbar);
      const double sinh_r = std::sqrt((rbar - 1.0) * (rbar + 1.0));
      p.feet.dominant = d;
      p.feet.values.assign(n, 0.0);
      double rest = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == d) continue;
        p.feet.values[k] = 2.0 * std::asinh(chords[k] / (2.0 * rbar));
        rest += p.feet.values[k];
      }
      p.feet.values[d] = rest;
      p.positions.assign(n, 0.0);
      double t = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t v = (d + 1 + j) % n;
        p.positions[v] = t;
        t += p.feet.values[v];
      }
      // Boosting the axis foot of the middle parameter to the origin keeps
      // coordinates small when cosh R is huge; sides stay recoverable.
      const double centre = 0.5 * rest;
      out.vertices.resize(n);
      for (std::size_t v = 0; v < n; ++v) {
        const double u = p.positions[v] - centre;
        const double h = std::sinh(0.5 * u);
        out.vertices[v] =
            Vec3{rbar * std::sinh(u), -2.0 * rbar * sinh_r * h * h, 1.0 + 2.0 * rbar * rbar * h * h};
      }
      out.params = std::move(p);
      break;
    }
  }
  return out;
}

double lorentz_dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y - a.z * b.z;
}

double distance(const Vec3& p, const Vec3& q) {
  const Vec3 d{p.x - q.x, p.y - q.y, p.z - q.z};
  // <d, d> = d1^2 + d2^2 - d3^2, factored to limit cancellation.
  const double sq = (d.x - d.z) * (d.x + d.z) + d.y * d.y;
  return 2.0 * std::asinh(0.5 * std::sqrt(std::max(sq, 0.0)));
}

double curve_residual(const HyperbolicSolution& solution) {
  double worst = 0.0;
  for (const Vec3& v : solution.vertices) {
    const double r = std::visit(
        [&v](const auto& p) -> double {
          using P = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<P, CircleParams>) {
            return v.z - std::sqrt(1.0 + p.chordal_radius * p.chordal_radius);
          } else if constexpr (std::is_same_v<P, HorocycleParams>) {
            return v.z - v.x - 1.0;
          } else {
            // Distance to the axis plane orthogonal to (0, cosh R, -sinh R),
            // relative to the size of the terms.
            const double sinh_r = std::sqrt((p.cosh_distance - 1.0) * (p.cosh_distance + 1.0));
            const double a = p.cosh_distance * v.y;
            const double b = sinh_r * v.z;
            return (a + b - sinh_r) / std::max(1.0, std::abs(a) + std::abs(b));
          }
        },
        solution.params);
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

}  // namespace cyclic::hyperbolic
