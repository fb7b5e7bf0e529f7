#include "cyclic/spherical.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cyclic/errors.hpp"

namespace cyclic::spherical {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double chord_from_arc(double ell) {
  if (!(ell > 0.0 && ell < kTwoPi)) {
    throw DomainError("chord_from_arc: arc length must lie in (0, 2*pi)");
  }
  return 2.0 * std::sin(0.5 * ell);
}

Feasibility check_spherical_feasibility(const SideLengths& lengths) {
  Feasibility out;
  out.perimeter = lengths.sum();
  const auto ineq = euclidean::check_polygon_inequalities(lengths);
  out.side = ineq.side;
  using Status = euclidean::PolygonInequality::Status;
  // The perimeter bound is reported first: it rules out every arrangement.
  // A side breaking the polygon inequalities is still named.
  out.side_at_fault = ineq.status != Status::kStrict;
  if (out.perimeter >= kTwoPi - kPerimeterSlack) {
    out.status = Feasibility::Status::kPerimeterBound;
  } else if (ineq.status == Status::kEquality) {
    out.status = Feasibility::Status::kPolygonEquality;
  } else if (ineq.status == Status::kViolated) {
    out.status = Feasibility::Status::kPolygonViolated;
  }
  return out;
}

SphericalSolution solve_spherical(const SideLengths& lengths) {
  const auto feas = check_spherical_feasibility(lengths);
  switch (feas.status) {
    case Feasibility::Status::kFeasible:
      break;
    case Feasibility::Status::kPolygonEquality:
    case Feasibility::Status::kPolygonViolated:
      euclidean::require_strict(euclidean::check_polygon_inequalities(lengths), "spherical");
      break;
    case Feasibility::Status::kPerimeterBound:
      throw NoPolygon(Infeasibility::kPerimeterBound,
                      feas.side_at_fault ? std::optional<std::size_t>(feas.side) : std::nullopt,
                      "spherical: perimeter " + std::to_string(feas.perimeter) +
                          " is not below 2*pi; the polygon would degenerate to a great circle");
  }

  std::vector<double> chords(lengths.size());
  for (std::size_t k = 0; k < chords.size(); ++k) chords[k] = chord_from_arc(lengths[k]);

  // Feasible spherical lengths always give strict chordal inequalities.
  const auto flat = [&] {
    try {
      return euclidean::solve_euclidean(SideLengths(std::move(chords)));
    } catch (const NoPolygon& e) {
      if (e.reason() == Infeasibility::kNearDegenerate) throw;
      throw InvariantViolation(std::string("spherical: chordal polygon rejected: ") + e.what());
    }
  }();
  if (!(flat.radius < 1.0)) {
    throw InvariantViolation("spherical: chordal circumradius " + std::to_string(flat.radius) +
                             " is not below 1");
  }

  SphericalSolution out{flat.radius, std::asin(flat.radius), flat.angles, {}};
  const double height = std::sqrt((1.0 - flat.radius) * (1.0 + flat.radius));
  out.vertices.reserve(flat.vertices.size());
  for (const Vec2& p : flat.vertices) out.vertices.push_back(Vec3{p.x, p.y, height});
  return out;
}

double geodesic_distance(const Vec3& u, const Vec3& v) {
  const double cx = u.y * v.z - u.z * v.y;
  const double cy = u.z * v.x - u.x * v.z;
  const double cz = u.x * v.y - u.y * v.x;
  const double dot = u.x * v.x + u.y * v.y + u.z * v.z;
  return std::atan2(std::sqrt(cx * cx + cy * cy + cz * cz), dot);
}

}  // namespace cyclic::spherical
