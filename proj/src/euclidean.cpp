#include "cyclic/euclidean.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cyclic/errors.hpp"

namespace cyclic::euclidean {

namespace {

constexpr double kPi = std::numbers::pi;

struct RadiusEquation {
  std::span<const double> lengths;
  std::size_t longest;
  bool center_inside;

  // Normalized so that value(l_m / 2) <= 0 and value(R) > 0 for large R.
  double value(double r) const {
    double others = 0.0;
    for (std::size_t k = 0; k < lengths.size(); ++k) {
      if (k != longest) others += std::asin(std::min(1.0, lengths[k] / (2.0 * r)));
    }
    const double top = std::asin(std::min(1.0, lengths[longest] / (2.0 * r)));
    return center_inside ? kPi - others - top : others - top;
  }

  double derivative(double r) const {
    auto rate = [r](double l) {
      const double x = l / (2.0 * r);
      return x / (r * std::sqrt((1.0 - x) * (1.0 + x)));
    };
    double others = 0.0;
    for (std::size_t k = 0; k < lengths.size(); ++k) {
      if (k != longest) others += rate(lengths[k]);
    }
    const double top = rate(lengths[longest]);
    return center_inside ? others + top : -others + top;
  }
};

std::string side_name(std::size_t k) {
  return "side " + std::to_string(k + 1);
}

}  // namespace

PolygonInequality check_polygon_inequalities(const SideLengths& lengths) {
  const std::size_t m = lengths.longest();
  double rest = 0.0;
  for (std::size_t k = 0; k < lengths.size(); ++k) {
    if (k != m) rest += lengths[k];
  }
  PolygonInequality out;
  out.side = m;
  out.margin = lengths[m] - rest;
  if (out.margin < 0.0) {
    out.status = PolygonInequality::Status::kStrict;
  } else if (out.margin == 0.0) {
    out.status = PolygonInequality::Status::kEquality;
  } else {
    out.status = PolygonInequality::Status::kViolated;
  }
  return out;
}

void require_strict(const PolygonInequality& check, const char* geometry) {
  using Status = PolygonInequality::Status;
  if (check.status == Status::kStrict) return;
  std::ostringstream msg;
  msg << geometry << ": " << side_name(check.side);
  if (check.status == Status::kEquality) {
    msg << " equals the sum of the other sides; the polygon is flat (degenerate)";
    throw NoPolygon(Infeasibility::kPolygonEquality, check.side, msg.str());
  }
  msg << " exceeds the sum of the other sides; the polygon inequality fails";
  throw NoPolygon(Infeasibility::kPolygonViolated, check.side, msg.str());
}

EuclideanSolution solve_euclidean(const SideLengths& lengths) {
  require_strict(check_polygon_inequalities(lengths), "euclidean");

  const std::size_t n = lengths.size();
  const std::size_t m = lengths.longest();
  const double lm = lengths[m];

  double subtended = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k != m) subtended += std::asin(lengths[k] / lm);
  }
  const RadiusEquation eq{lengths.values(), m, subtended >= kPi / 2.0};

  int iterations = 0;
  double lo = lm / 2.0;
  double radius = lo;
  if (eq.value(lo) < 0.0) {
    double hi = 2.0 * lo;
    while (eq.value(hi) <= 0.0) {
      hi *= 2.0;
      ++iterations;
      if (hi > kMaxRadiusRatio * lm) {
        throw NoPolygon(Infeasibility::kNearDegenerate, m,
                        "euclidean: " + side_name(m) +
                            " is within rounding of the sum of the other sides; the "
                            "circumradius exceeds 1e15 times the longest side");
      }
    }
    while (hi - lo > 1e-14 * hi && iterations < 400) {
      const double mid = 0.5 * (lo + hi);
      (eq.value(mid) <= 0.0 ? lo : hi) = mid;
      ++iterations;
    }
    radius = 0.5 * (lo + hi);
    double residual = std::abs(eq.value(radius));
    for (int polish = 0; polish < 3 && residual > 0.0; ++polish) {
      const double next = radius - eq.value(radius) / eq.derivative(radius);
      if (!(next >= lo && next <= hi)) break;
      const double next_residual = std::abs(eq.value(next));
      if (!(next_residual < residual)) break;
      radius = next;
      residual = next_residual;
      ++iterations;
    }
  }

  std::vector<double> alpha(n);
  double rest = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == m) continue;
    alpha[k] = 2.0 * std::asin(lengths[k] / (2.0 * radius));
    rest += alpha[k];
  }
  alpha[m] = 2.0 * kPi - rest;

  // A longest chord through the center (alpha_m == pi up to rounding)
  // counts as inside.
  const bool inside = alpha[m] <= kPi * (1.0 + 1e-12);

  CentralAngles angles(std::move(alpha));
  auto vertices = vertices_on_circle(radius, angles);
  return EuclideanSolution{radius, std::move(angles), std::move(vertices), inside, iterations};
}

std::vector<Vec2> vertices_on_circle(double radius, const CentralAngles& angles) {
  if (!(radius > 0.0)) throw DomainError("vertices_on_circle: radius must be positive");
  const std::size_t n = angles.size();
  std::vector<Vec2> out(n);
  // Compensated running angle (theta + carry) so short sides survive the
  // rounding of theta near 2 pi.
  const auto place = [&](std::size_t j, double theta, double carry) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    out[j] = Vec2{radius * (c - s * carry), radius * (s + c * carry)};
  };
  const auto advance = [](double& theta, double& carry, double step) {
    const double y = step + carry;
    const double t = theta + y;
    carry = y - (t - theta);
    theta = t;
  };
  // Walk forward to the longest side and backward for the rest, so the
  // few-ulp closure error of the angle sum lands on the longest side.
  std::size_t m = 0;
  for (std::size_t k = 1; k < n; ++k) {
    if (angles[k] > angles[m]) m = k;
  }
  double theta = 0.0, carry = 0.0;
  for (std::size_t j = 0; j <= m; ++j) {
    place(j, theta, carry);
    advance(theta, carry, angles[j]);
  }
  theta = 0.0;
  carry = 0.0;
  for (std::size_t j = n - 1; j > m; --j) {
    advance(theta, carry, -angles[j]);
    place(j, theta, carry);
  }
  return out;
}

double polygon_area(std::span<const Vec2> vertices) {
  if (vertices.size() < 3) throw DomainError("polygon_area: need at least 3 vertices");
  double twice = 0.0;
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    const Vec2& p = vertices[j];
    const Vec2& q = vertices[(j + 1) % vertices.size()];
    twice += p.x * q.y - q.x * p.y;
  }
  return 0.5 * std::abs(twice);
}

std::vector<double> chord_lengths(std::span<const Vec2> vertices) {
  std::vector<double> out(vertices.size());
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    const Vec2& p = vertices[j];
    const Vec2& q = vertices[(j + 1) % vertices.size()];
    out[j] = std::hypot(q.x - p.x, q.y - p.y);
  }
  return out;
}

}  // namespace cyclic::euclidean
