#include "cyclic/polyio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "cyclic/euclidean.hpp"
#include "cyclic/minkowski.hpp"
#include "cyclic/spherical.hpp"
#include "cyclic/variational.hpp"

namespace cyclic::polyio {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Tolerances an ok report must meet besides the side-length tolerance.
constexpr double kAngleSumTolerance = 1e-11;
constexpr double kResidencyTolerance = 1e-10;
constexpr double kCrossCheckTolerance = 1e-8;

json point(const Vec2& p) { return json::array({p.x, p.y}); }
json point(const Vec3& p) { return json::array({p.x, p.y, p.z}); }

template <typename P>
json points(const std::vector<P>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(point(p));
  return out;
}

double max_relative_error(const std::vector<double>& got, std::span<const double> want) {
  double worst = 0.0;
  for (std::size_t k = 0; k < want.size(); ++k) {
    const double e = std::abs(got[k] - want[k]) / want[k];
    worst = std::max(worst, std::isnan(e) ? std::numeric_limits<double>::infinity() : e);
  }
  return worst;
}

double angle_sum_error(std::span<const double> angles) {
  double s = 0.0;
  for (double a : angles) s += a;
  return std::abs(s - kTwoPi);
}

// Accumulates named residuals and whether each meets its tolerance.
class Residuals {
 public:
  void add(const std::string& name, double value, double tolerance) {
    entries_[name] = json{{"value", value}, {"tolerance", tolerance}};
    if (!(value <= tolerance)) failures_.push_back(name);
  }
  json to_json() const { return entries_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  json entries_ = json::object();
  std::vector<std::string> failures_;
};

struct Solved {
  json solution;
  Residuals residuals;
  int iterations = 0;
  std::vector<std::string> warnings;
  std::string convention;
  // Chordal Euclidean polygon, when the geometry has one.
  std::optional<std::vector<double>> chords;
  double chordal_radius = 0.0;
};

Solved solve_euclidean_geometry(const SolveRequest& req) {
  const SideLengths lengths(req.lengths);
  const auto sol = euclidean::solve_euclidean(lengths);
  Solved s;
  s.convention = "circumcenter at the origin, vertex 0 on the +x axis, counterclockwise";
  s.solution = {{"radius", sol.radius},
                {"angles", sol.angles.values()},
                {"center_inside", sol.center_inside},
                {"vertices", points(sol.vertices)}};
  s.iterations = sol.iterations;
  s.residuals.add("side_length", max_relative_error(euclidean::chord_lengths(sol.vertices), lengths.values()),
                  req.options.tolerance);
  s.residuals.add("angle_sum", angle_sum_error(sol.angles.values()), kAngleSumTolerance);
  double circle = 0.0;
  for (const Vec2& v : sol.vertices) {
    circle = std::max(circle, std::abs(std::hypot(v.x, v.y) - sol.radius) / sol.radius);
  }
  s.residuals.add("circle_residency", circle, kResidencyTolerance);
  s.chords = req.lengths;
  s.chordal_radius = sol.radius;
  return s;
}

Solved solve_spherical_geometry(const SolveRequest& req) {
  const SideLengths lengths(req.lengths);
  const auto sol = spherical::solve_spherical(lengths);
  Solved s;
  s.convention =
      "unit sphere, circle axis +z, vertex 0 in the xz-plane with x > 0, counterclockwise from +z";
  s.solution = {{"chordal_radius", sol.chordal_radius},
                {"spherical_circumradius", sol.spherical_circumradius},
                {"angles", sol.angles.values()},
                {"vertices", points(sol.vertices)}};
  const std::size_t n = sol.vertices.size();
  std::vector<double> sides(n);
  double norm = 0.0;
  double cap = 0.0;
  const double height = sol.vertices.front().z;
  for (std::size_t j = 0; j < n; ++j) {
    const Vec3& v = sol.vertices[j];
    sides[j] = spherical::geodesic_distance(v, sol.vertices[(j + 1) % n]);
    norm = std::max(norm, std::abs(std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z) - 1.0));
    cap = std::max(cap, std::abs(v.z - height));
  }
  s.residuals.add("side_length", max_relative_error(sides, lengths.values()), req.options.tolerance);
  s.residuals.add("angle_sum", angle_sum_error(sol.angles.values()), kAngleSumTolerance);
  s.residuals.add("sphere_residency", norm, kResidencyTolerance);
  s.residuals.add("circle_residency", cap, kResidencyTolerance);
  std::vector<double> chords(n);
  for (std::size_t k = 0; k < n; ++k) chords[k] = spherical::chord_from_arc(lengths[k]);
  s.chords = std::move(chords);
  s.chordal_radius = sol.chordal_radius;
  return s;
}

Solved solve_hyperbolic_geometry(const SolveRequest& req) {
  const SideLengths lengths(req.lengths);
  const auto sol = hyperbolic::solve_hyperbolic(lengths, req.options.horocycle_band);
  Solved s;
  s.iterations = sol.iterations;
  s.warnings = sol.warnings;
  s.solution = {{"class", hyperbolic::kind_name(sol.curve.kind)},
                {"dominant_side", sol.curve.dominant},
                {"margin", sol.curve.margin},
                {"vertices", points(sol.vertices)}};
  std::visit(
      [&s](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, hyperbolic::CircleParams>) {
          s.convention = "hyperboloid; circle centered at (0,0,1), vertex 0 in the x1x3-plane";
          s.solution["curve"] = "circle";
          s.solution["radius"] = p.radius;
          s.solution["chordal_radius"] = p.chordal_radius;
          s.solution["angles"] = p.angles;
          s.residuals.add("angle_sum", angle_sum_error(p.angles), kAngleSumTolerance);
          s.chordal_radius = p.chordal_radius;
        } else if constexpr (std::is_same_v<P, hyperbolic::HorocycleParams>) {
          s.convention = "hyperboloid; horocycle x3 - x1 = 1, vertex after the dominant side at (0,0,1)";
          s.solution["curve"] = "horocycle";
          s.solution["offsets"] = p.offsets;
        } else {
          s.convention =
              "hyperboloid; hypercycle sinh R x3 + cosh R x2 = sinh R, vertex j at "
              "(cosh R sinh u, -2 cosh R sinh R sinh^2(u/2), 1 + 2 cosh^2 R sinh^2(u/2)) with "
              "u = positions[j] - (max position)/2";
          s.solution["curve"] = "hypercycle";
          s.solution["distance"] = p.distance;
          s.solution["cosh_distance"] = p.cosh_distance;
          s.solution["foot_distances"] = p.feet.values;
          s.solution["positions"] = p.positions;
        }
      },
      sol.params);

  const std::size_t n = sol.vertices.size();
  std::vector<double> sides(n);
  double residency = 0.0;
  double scale = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    const Vec3& v = sol.vertices[j];
    sides[j] = hyperbolic::distance(v, sol.vertices[(j + 1) % n]);
    const double mag = std::max(1.0, v.z * v.z);
    residency = std::max(residency, std::abs(hyperbolic::lorentz_dot(v, v) + 1.0) / mag);
    if (!(v.z > 0.0)) residency = std::numeric_limits<double>::infinity();
    scale = std::max(scale, v.z);
  }
  if (sol.curve.kind != hyperbolic::CurveClass::Kind::kHorocycle && sol.warnings.empty()) {
    s.residuals.add("side_length", max_relative_error(sides, lengths.values()),
                    req.options.tolerance);
  } else {
    // Within the band the dominant side is fixed by the others.
    std::vector<double> others, want;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == sol.curve.dominant) continue;
      others.push_back(sides[k]);
      want.push_back(lengths[k]);
    }
    s.residuals.add("side_length", max_relative_error(others, want), req.options.tolerance);
    s.solution["dominant_side_recovered"] = sides[sol.curve.dominant];
  }
  s.residuals.add("hyperboloid_residency", residency, kResidencyTolerance);
  s.residuals.add("curve_residency", hyperbolic::curve_residual(sol) / scale, kResidencyTolerance);
  if (sol.curve.kind == hyperbolic::CurveClass::Kind::kCircle) {
    std::vector<double> chords(n);
    for (std::size_t k = 0; k < n; ++k) chords[k] = hyperbolic::hyp_chord(lengths[k]);
    s.chords = std::move(chords);
  }
  return s;
}

Solved solve_minkowski_geometry(const SolveRequest& req) {
  const SideLengths lengths(req.lengths);
  const auto sol = minkowski::solve_minkowski(lengths);
  Solved s;
  s.convention = "R^{1,1} (x1, x2), future branch x2 > 0, vertex j at (R sinh t, R cosh t) with "
      "t = positions[j] symmetric about 0";
  s.iterations = sol.iterations;
  s.solution = {{"radius", sol.radius},
                {"dominant_side", sol.rapidities.dominant},
                {"rapidities", sol.rapidities.values},
                {"positions", sol.positions},
                {"vertices", points(sol.vertices)}};
  const std::size_t n = sol.vertices.size();
  std::vector<double> sides(n);
  double branch = 0.0;
  const double r2 = sol.radius * sol.radius;
  for (std::size_t j = 0; j < n; ++j) {
    const Vec2& v = sol.vertices[j];
    sides[j] = minkowski::spacelike_length(v, sol.vertices[(j + 1) % n]);
    const double mag = std::max(r2, v.y * v.y);
    branch = std::max(branch, std::abs(minkowski::spacetime_dot(v, v) + r2) / mag);
    if (!(v.y > 0.0)) branch = std::numeric_limits<double>::infinity();
  }
  s.residuals.add("side_length", max_relative_error(sides, lengths.values()), req.options.tolerance);
  s.residuals.add("branch_residency", branch, kResidencyTolerance);
  s.residuals.add("rapidity_additivity", sol.rapidities.additivity_residual(), kResidencyTolerance);
  return s;
}

Solved dispatch(const SolveRequest& req) {
  switch (req.geometry) {
    case Geometry::kEuclidean:
      return solve_euclidean_geometry(req);
    case Geometry::kSpherical:
      return solve_spherical_geometry(req);
    case Geometry::kHyperbolic:
      return solve_hyperbolic_geometry(req);
    case Geometry::kMinkowski:
      return solve_minkowski_geometry(req);
  }
  throw RequestError("unknown geometry");
}

const char* condition_of(Infeasibility reason) {
  switch (reason) {
    case Infeasibility::kPolygonEquality:
    case Infeasibility::kPolygonViolated:
      return "every side must be shorter than the sum of the others";
    case Infeasibility::kPerimeterBound:
      return "the spherical perimeter must be below 2*pi";
    case Infeasibility::kNoDominantSide:
      return "one side must be longer than the sum of the others";
    case Infeasibility::kNearDegenerate:
      return "every side must be shorter than the sum of the others by more than rounding";
  }
  return "";
}

json error_report(const SolveRequest* req, const std::string& kind, const std::string& code,
                  const std::string& message) {
  json r = {{"status", "error"},
            {"error", {{"kind", kind}, {"code", code}, {"message", message}}}};
  if (req != nullptr) {
    r["geometry"] = geometry_name(req->geometry);
    r["lengths"] = req->lengths;
  }
  return r;
}

json infeasible_report(const SolveRequest& req, const NoPolygon& e) {
  json r = error_report(&req, "infeasible", infeasibility_code(e.reason()), e.what());
  r["error"]["condition"] = condition_of(e.reason());
  if (e.side()) r["error"]["side_index"] = *e.side();
  return r;
}

// Runs `body` and turns library exceptions into error reports.
template <typename Body>
json guarded(const SolveRequest& req, Body&& body) {
  try {
    return body();
  } catch (const NoPolygon& e) {
    return infeasible_report(req, e);
  } catch (const ConvergenceError& e) {
    return error_report(&req, "numerical", "convergence_failure", e.what());
  } catch (const InvariantViolation& e) {
    return error_report(&req, "numerical", "invariant_violation", e.what());
  } catch (const DomainError& e) {
    return error_report(&req, "malformed", "invalid_lengths", e.what());
  }
}

double number_field(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number()) throw RequestError(std::string("\"") + key + "\" must be a number");
  return v.get<double>();
}

}  // namespace

const char* geometry_name(Geometry geometry) {
  switch (geometry) {
    case Geometry::kEuclidean:
      return "euclidean";
    case Geometry::kSpherical:
      return "spherical";
    case Geometry::kHyperbolic:
      return "hyperbolic";
    case Geometry::kMinkowski:
      return "minkowski";
  }
  return "unknown";
}

std::optional<Geometry> parse_geometry(std::string_view name) {
  for (auto g : {Geometry::kEuclidean, Geometry::kSpherical, Geometry::kHyperbolic,
                 Geometry::kMinkowski}) {
    if (name == geometry_name(g)) return g;
  }
  return std::nullopt;
}

SolveRequest parse_request(const json& j, std::optional<Geometry> fallback) {
  if (!j.is_object()) throw RequestError("request must be a JSON object");
  SolveRequest req;
  if (j.contains("geometry")) {
    if (!j["geometry"].is_string()) throw RequestError("\"geometry\" must be a string");
    const auto name = j["geometry"].get<std::string>();
    const auto g = parse_geometry(name);
    if (!g) throw RequestError("unknown geometry \"" + name + "\"");
    req.geometry = *g;
  } else if (fallback) {
    req.geometry = *fallback;
  } else {
    throw RequestError("request has no \"geometry\"");
  }
  if (!j.contains("lengths") || !j["lengths"].is_array()) {
    throw RequestError("request needs a \"lengths\" array");
  }
  for (const auto& v : j["lengths"]) {
    if (!v.is_number()) throw RequestError("\"lengths\" entries must be numbers");
    req.lengths.push_back(v.get<double>());
  }
  try {
    SideLengths check(req.lengths);
  } catch (const DomainError& e) {
    throw RequestError(e.what());
  }
  if (j.contains("options")) {
    const auto& o = j["options"];
    if (!o.is_object()) throw RequestError("\"options\" must be an object");
    if (o.contains("tolerance")) req.options.tolerance = number_field(o, "tolerance");
    if (o.contains("horocycle_band")) req.options.horocycle_band = number_field(o, "horocycle_band");
    if (!(req.options.tolerance > 0.0)) throw RequestError("tolerance must be positive");
    if (!(req.options.horocycle_band >= 0.0)) throw RequestError("horocycle_band must be >= 0");
  }
  return req;
}

json to_json(const SolveRequest& request) {
  return {{"geometry", geometry_name(request.geometry)},
          {"lengths", request.lengths},
          {"options",
           {{"tolerance", request.options.tolerance},
            {"horocycle_band", request.options.horocycle_band}}}};
}

json solve(const SolveRequest& request) {
  return guarded(request, [&] {
    Solved s = dispatch(request);
    json r = {{"status", "ok"},
              {"geometry", geometry_name(request.geometry)},
              {"lengths", request.lengths},
              {"convention", s.convention},
              {"solution", s.solution},
              {"diagnostics", {{"residuals", s.residuals.to_json()}, {"iterations", s.iterations}}},
              {"warnings", s.warnings}};
    if (!s.residuals.failures().empty()) {
      std::string names;
      for (const auto& f : s.residuals.failures()) names += (names.empty() ? "" : ", ") + f;
      json e = error_report(&request, "numerical", "residual_exceeded",
                            "residuals above tolerance: " + names);
      e["diagnostics"] = r["diagnostics"];
      return e;
    }
    return r;
  });
}

json classify(const SolveRequest& request) {
  return guarded(request, [&]() -> json {
    if (request.geometry != Geometry::kHyperbolic) {
      throw RequestError("classify is defined for hyperbolic geometry only");
    }
    const auto c = hyperbolic::classify(SideLengths(request.lengths), request.options.horocycle_band);
    return {{"status", "ok"},
            {"geometry", "hyperbolic"},
            {"lengths", request.lengths},
            {"class", hyperbolic::kind_name(c.kind)},
            {"dominant_side", c.dominant},
            {"margin", c.margin},
            {"band", request.options.horocycle_band}};
  });
}

json verify(const SolveRequest& request) {
  json report = solve(request);
  if (report["status"] != "ok") return report;
  return guarded(request, [&] {
    Solved s = dispatch(request);
    json checks = json::object();
    bool pass = s.residuals.failures().empty();
    double side = report["diagnostics"]["residuals"]["side_length"]["value"].get<double>();
    checks["max_side_residual"] = {{"value", side}, {"tolerance", request.options.tolerance}};
    if (s.chords && s.chordal_radius > 0.0) {
      const SideLengths chords(*s.chords);
      const auto max = variational::maximize_on_simplex(chords);
      const auto crit = variational::check_critical_point(chords, max.angles);
      const double r_var = crit.radius.value_or(std::numeric_limits<double>::quiet_NaN());
      const double delta = std::abs(r_var - s.chordal_radius) / s.chordal_radius;
      checks["variational_radius"] = r_var;
      checks["root_finding_radius"] = s.chordal_radius;
      checks["radius_delta"] = {{"value", delta}, {"tolerance", kCrossCheckTolerance}};
      checks["variational_iterations"] = max.iterations;
      pass = pass && delta <= kCrossCheckTolerance;
    }
    report["cross_checks"] = checks;
    report["verified"] = pass;
    if (!pass) {
      report["status"] = "error";
      report["error"] = {{"kind", "numerical"},
                         {"code", "verification_failed"},
                         {"message", "cross-checks exceeded their tolerance"}};
    }
    return report;
  });
}

ExitCode exit_code(const json& report) {
  if (report.is_array()) {
    ExitCode worst = ExitCode::kOk;
    for (const auto& r : report) worst = std::max(worst, exit_code(r));
    return worst;
  }
  if (report.value("status", "") == "ok") return ExitCode::kOk;
  const auto kind = report.contains("error") ? report["error"].value("kind", "") : "";
  if (kind == "infeasible") return ExitCode::kInfeasible;
  if (kind == "numerical") return ExitCode::kNumericalFailure;
  return ExitCode::kMalformed;
}

namespace {

struct CliOptions {
  std::string input = "-";
  std::string geometry;
  std::optional<double> tolerance;
  std::optional<double> band;
  std::string out;
};

json read_input(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw RequestError("cannot open input file " + path);
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw RequestError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

SolveRequest request_from(const json& j, const CliOptions& opts, std::optional<Geometry> fallback) {
  std::optional<Geometry> forced;
  if (!opts.geometry.empty()) {
    forced = parse_geometry(opts.geometry);
    if (!forced) throw RequestError("unknown geometry \"" + opts.geometry + "\"");
  }
  json copy = j;
  if (forced && copy.is_object()) copy["geometry"] = geometry_name(*forced);
  SolveRequest req = parse_request(copy, fallback);
  if (opts.tolerance) {
    if (!(*opts.tolerance > 0.0)) throw RequestError("--tolerance must be positive");
    req.options.tolerance = *opts.tolerance;
  }
  if (opts.band) {
    if (!(*opts.band >= 0.0)) throw RequestError("--horocycle-band must be >= 0");
    req.options.horocycle_band = *opts.band;
  }
  return req;
}

// Applies `op` to one request or to each request of a batch.
template <typename Op>
json for_each_request(const json& input, const CliOptions& opts, std::optional<Geometry> fallback,
                      Op&& op) {
  auto one = [&](const json& j) -> json {
    try {
      return op(request_from(j, opts, fallback));
    } catch (const RequestError& e) {
      return error_report(nullptr, "malformed", "malformed_request", e.what());
    }
  };
  if (!input.is_array()) return one(input);
  json out = json::array();
  for (const auto& j : input) out.push_back(one(j));
  return out;
}

void write_atomically(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw RequestError("cannot write " + tmp);
    f << content;
    f.close();
    if (!f) {
      std::remove(tmp.c_str());
      throw RequestError("cannot write " + tmp);
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw RequestError("cannot move output into place at " + path);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Cyclic polygons with prescribed side lengths", "cyclicpoly"};
  app.require_subcommand(1);
  CliOptions opts;
  auto add_common = [&opts](CLI::App* cmd) {
    cmd->add_option("input", opts.input, "request JSON file, or - for standard input");
    cmd->add_option("--geometry", opts.geometry,
                    "euclidean, spherical, hyperbolic or minkowski (overrides the request)");
    cmd->add_option("--tolerance", opts.tolerance, "side-length recovery tolerance");
    cmd->add_option("--horocycle-band", opts.band, "relative horocycle classification band");
  };
  auto* solve_cmd = app.add_subcommand("solve", "solve for the cyclic polygon");
  auto* classify_cmd = app.add_subcommand("classify", "hyperbolic circle/horocycle/hypercycle");
  auto* render_cmd = app.add_subcommand("render", "draw a request or an ok report as SVG");
  auto* verify_cmd = app.add_subcommand("verify", "solve and cross-check");
  for (auto* cmd : {solve_cmd, classify_cmd, render_cmd, verify_cmd}) add_common(cmd);
  render_cmd->add_option("--out", opts.out, "SVG output path (default: standard output)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "cyclicpoly: " << e.what() << "\n";
    return static_cast<int>(ExitCode::kMalformed);
  }

  try {
    const json input = read_input(opts.input, in);
    if (*render_cmd) {
      if (!input.is_object()) throw RequestError("render takes a single request or report");
      json report =
          input.contains("status") ? input : solve(request_from(input, opts, std::nullopt));
      if (report.value("status", "") != "ok") {
        err << "cyclicpoly: refusing to render: "
            << (report.contains("error") ? report["error"].value("message", "error report")
                                         : std::string("error report"))
            << "\n";
        const auto code = exit_code(report);
        return static_cast<int>(code == ExitCode::kOk ? ExitCode::kMalformed : code);
      }
      const std::string svg = render_svg(report);
      if (opts.out.empty()) {
        out << svg;
      } else {
        write_atomically(opts.out, svg);
      }
      return 0;
    }

    json result;
    if (*solve_cmd) {
      result = for_each_request(input, opts, std::nullopt, [](const SolveRequest& r) { return solve(r); });
    } else if (*classify_cmd) {
      result = for_each_request(input, opts, Geometry::kHyperbolic,
                                [](const SolveRequest& r) { return classify(r); });
    } else {
      result = for_each_request(input, opts, std::nullopt, [](const SolveRequest& r) { return verify(r); });
    }
    out << result.dump(2) << "\n";
    return static_cast<int>(exit_code(result));
  } catch (const RequestError& e) {
    json r = error_report(nullptr, "malformed", "malformed_request", e.what());
    out << r.dump(2) << "\n";
    err << "cyclicpoly: " << e.what() << "\n";
    return static_cast<int>(ExitCode::kMalformed);
  }
}

}  // namespace cyclic::polyio
