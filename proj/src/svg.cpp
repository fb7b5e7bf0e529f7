#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "cyclic/hyperbolic.hpp"
#include "cyclic/polyio.hpp"
#include "cyclic/spherical.hpp"

namespace cyclic::polyio {

namespace {

constexpr double kPi = std::numbers::pi;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

// SVG y grows downwards; every emitted point is (x, -y).
class Canvas {
 public:
  Canvas(double min_x, double min_y, double max_x, double max_y) {
    const double pad = 0.08 * std::max(max_x - min_x, max_y - min_y);
    x0_ = min_x - pad;
    y0_ = -(max_y + pad);
    w_ = max_x - min_x + 2.0 * pad;
    h_ = max_y - min_y + 2.0 * pad;
    stroke_ = 0.004 * std::max(w_, h_);
  }

  void circle(double cx, double cy, double r, const char* stroke, const char* fill = "none") {
    body_ += "  <circle cx=\"" + num(cx) + "\" cy=\"" + num(-cy) + "\" r=\"" + num(r) +
             "\" fill=\"" + fill + "\" stroke=\"" + stroke + "\" stroke-width=\"" + num(stroke_) +
             "\"/>\n";
  }

  void dot(double x, double y) {
    body_ += "  <circle cx=\"" + num(x) + "\" cy=\"" + num(-y) + "\" r=\"" + num(2.0 * stroke_) +
             "\" fill=\"black\"/>\n";
  }

  void polyline(const std::vector<std::pair<double, double>>& pts, const char* stroke,
                bool closed = false) {
    body_ += std::string("  <") + (closed ? "polygon" : "polyline") + " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i > 0) body_ += ' ';
      body_ += num(pts[i].first) + "," + num(-pts[i].second);
    }
    body_ += "\" fill=\"none\" stroke=\"" + std::string(stroke) + "\" stroke-width=\"" +
             num(stroke_) + "\"/>\n";
  }

  void line(double x1, double y1, double x2, double y2, const char* stroke) {
    body_ += "  <line x1=\"" + num(x1) + "\" y1=\"" + num(-y1) + "\" x2=\"" + num(x2) +
             "\" y2=\"" + num(-y2) + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
             num(0.5 * stroke_) + "\"/>\n";
  }

  std::string finish(const std::string& title) const {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" +
           num(x0_) + " " + num(y0_) + " " + num(w_) + " " + num(h_) +
           "\" width=\"600\" height=\"" + num(600.0 * h_ / w_) + "\">\n  <title>" + title +
           "</title>\n" + body_ + "</svg>\n";
  }

 private:
  double x0_, y0_, w_, h_, stroke_;
  std::string body_;
};

std::vector<std::vector<double>> coords(const json& vertices) {
  std::vector<std::vector<double>> out;
  for (const auto& v : vertices) out.push_back(v.get<std::vector<double>>());
  return out;
}

std::string render_euclidean(const json& sol) {
  const double r = sol.at("radius").get<double>();
  const auto vs = coords(sol.at("vertices"));
  Canvas c(-r, -r, r, r);
  c.circle(0.0, 0.0, r, "steelblue");
  std::vector<std::pair<double, double>> pts;
  for (const auto& v : vs) pts.emplace_back(v[0], v[1]);
  c.polyline(pts, "black", true);
  for (const auto& p : pts) c.dot(p.first, p.second);
  return c.finish("euclidean cyclic polygon");
}

// Orthographic projection along the circle axis (+z).
std::string render_spherical(const json& sol) {
  const double rbar = sol.at("chordal_radius").get<double>();
  const auto vs = coords(sol.at("vertices"));
  Canvas c(-1.0, -1.0, 1.0, 1.0);
  c.circle(0.0, 0.0, 1.0, "lightgray");
  c.circle(0.0, 0.0, rbar, "steelblue");
  const std::size_t n = vs.size();
  for (std::size_t j = 0; j < n; ++j) {
    const Vec3 u{vs[j][0], vs[j][1], vs[j][2]};
    const auto& w = vs[(j + 1) % n];
    const Vec3 v{w[0], w[1], w[2]};
    const double d = spherical::geodesic_distance(u, v);
    std::vector<std::pair<double, double>> arc;
    for (int i = 0; i <= 32; ++i) {
      const double t = i / 32.0;
      const double a = std::sin((1.0 - t) * d) / std::sin(d);
      const double b = std::sin(t * d) / std::sin(d);
      arc.emplace_back(a * u.x + b * v.x, a * u.y + b * v.y);
    }
    c.polyline(arc, "black");
  }
  for (const auto& v : vs) c.dot(v[0], v[1]);
  return c.finish("spherical cyclic polygon, orthographic view along the circle axis");
}

std::pair<double, double> to_disk(const Vec3& p) {
  return {p.x / (1.0 + p.z), p.y / (1.0 + p.z)};
}

// Poincare disk image of the hyperboloid solution.
std::string render_hyperbolic(const json& sol) {
  const auto vs = coords(sol.at("vertices"));
  const std::string curve = sol.at("curve").get<std::string>();
  Canvas c(-1.0, -1.0, 1.0, 1.0);
  c.circle(0.0, 0.0, 1.0, "lightgray");

  std::vector<std::pair<double, double>> path;
  if (curve == "circle") {
    const double rbar = sol.at("chordal_radius").get<double>();
    const double h = std::sqrt(1.0 + rbar * rbar);
    for (int i = 0; i <= 256; ++i) {
      const double t = 2.0 * kPi * i / 256.0;
      path.push_back(to_disk(Vec3{rbar * std::cos(t), rbar * std::sin(t), h}));
    }
  } else if (curve == "horocycle") {
    for (int i = 0; i <= 256; ++i) {
      const double s = std::sinh(-8.0 + 16.0 * i / 256.0);
      path.push_back(to_disk(Vec3{0.5 * s * s, s, 1.0 + 0.5 * s * s}));
    }
  } else {
    const double ch = sol.at("cosh_distance").get<double>();
    const double sh = std::sqrt((ch - 1.0) * (ch + 1.0));
    for (int i = 0; i <= 256; ++i) {
      const double t = -12.0 + 24.0 * i / 256.0;
      const double h = std::sinh(0.5 * t);
      path.push_back(to_disk(Vec3{ch * std::sinh(t), -2.0 * ch * sh * h * h, 1.0 + 2.0 * ch * ch * h * h}));
    }
  }
  c.polyline(path, "steelblue");

  const std::size_t n = vs.size();
  for (std::size_t j = 0; j < n; ++j) {
    const Vec3 p{vs[j][0], vs[j][1], vs[j][2]};
    const auto& w = vs[(j + 1) % n];
    const Vec3 q{w[0], w[1], w[2]};
    const double d = hyperbolic::distance(p, q);
    std::vector<std::pair<double, double>> seg;
    for (int i = 0; i <= 32; ++i) {
      const double t = i / 32.0;
      const double a = std::sinh((1.0 - t) * d) / std::sinh(d);
      const double b = std::sinh(t * d) / std::sinh(d);
      seg.push_back(to_disk(Vec3{a * p.x + b * q.x, a * p.y + b * q.y, a * p.z + b * q.z}));
    }
    c.polyline(seg, "black");
  }
  for (const auto& v : vs) {
    const auto d = to_disk(Vec3{v[0], v[1], v[2]});
    c.dot(d.first, d.second);
  }
  return c.finish("hyperbolic cyclic polygon (" + curve + "), Poincare disk");
}

// Coordinates (x1, x2) with time x2 upwards; the branch x2 > 0 of
// x1^2 - x2^2 = -R^2.
std::string render_minkowski(const json& sol) {
  const double r = sol.at("radius").get<double>();
  const auto vs = coords(sol.at("vertices"));
  const auto ts = sol.at("positions").get<std::vector<double>>();
  const auto [tmin, tmax] = std::minmax_element(ts.begin(), ts.end());
  const double t0 = *tmin - 0.5;
  const double t1 = *tmax + 0.5;
  double min_x = r * std::sinh(t0), max_x = r * std::sinh(t1);
  const double max_y = r * std::max(std::cosh(t0), std::cosh(t1));
  Canvas c(std::min(min_x, -r), 0.0, std::max(max_x, r), max_y);
  c.line(std::min(min_x, -r), 0.0, std::max(max_x, r), 0.0, "gray");
  c.line(0.0, 0.0, 0.0, max_y, "gray");
  std::vector<std::pair<double, double>> branch;
  for (int i = 0; i <= 256; ++i) {
    const double t = t0 + (t1 - t0) * i / 256.0;
    branch.emplace_back(r * std::sinh(t), r * std::cosh(t));
  }
  c.polyline(branch, "steelblue");
  std::vector<std::pair<double, double>> pts;
  for (const auto& v : vs) pts.emplace_back(v[0], v[1]);
  c.polyline(pts, "black", true);
  for (const auto& p : pts) c.dot(p.first, p.second);
  return c.finish("spacetime polygon inscribed in a hyperbola branch");
}

}  // namespace

std::string render_svg(const json& report) {
  if (!report.is_object() || report.value("status", "") != "ok") {
    throw RequestError("render needs an ok report");
  }
  if (!report.contains("solution") || !report.contains("geometry")) {
    throw RequestError("report has no solution to render");
  }
  const auto geometry = parse_geometry(report["geometry"].get<std::string>());
  if (!geometry) throw RequestError("report names an unknown geometry");
  try {
    const json& sol = report["solution"];
    switch (*geometry) {
      case Geometry::kEuclidean:
        return render_euclidean(sol);
      case Geometry::kSpherical:
        return render_spherical(sol);
      case Geometry::kHyperbolic:
        return render_hyperbolic(sol);
      case Geometry::kMinkowski:
        return render_minkowski(sol);
    }
  } catch (const json::exception& e) {
    throw RequestError(std::string("report solution is incomplete: ") + e.what());
  }
  throw RequestError("unknown geometry");
}

}  // namespace cyclic::polyio
