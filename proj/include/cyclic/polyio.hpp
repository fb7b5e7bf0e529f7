#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cyclic/errors.hpp"
#include "cyclic/hyperbolic.hpp"

// JSON requests and reports, SVG output and the command-line driver.
//
// Request:
//   {"geometry": "euclidean" | "spherical" | "hyperbolic" | "minkowski",
//    "lengths": [l_1, ..., l_n],
//    "options": {"tolerance": 1e-9, "horocycle_band": 1e-9}}
//
// A JSON array of requests is processed as a batch and answered with an
// array of reports.
namespace cyclic::polyio {

using nlohmann::json;

enum class Geometry { kEuclidean, kSpherical, kHyperbolic, kMinkowski };

const char* geometry_name(Geometry geometry);
std::optional<Geometry> parse_geometry(std::string_view name);

struct SolveOptions {
  // Bound on the relative side-length recovery error of an ok report.
  double tolerance = 1e-9;
  double horocycle_band = hyperbolic::kDefaultHorocycleBand;
};

struct SolveRequest {
  Geometry geometry = Geometry::kEuclidean;
  std::vector<double> lengths;
  SolveOptions options;
};

// Malformed request or report. Maps to exit code 1.
class RequestError : public Error {
 public:
  using Error::Error;
};

// Throws RequestError on missing fields, wrong types, unknown geometry or
// invalid lengths. When `fallback` is given it is used if the request has
// no "geometry" member.
SolveRequest parse_request(const json& j, std::optional<Geometry> fallback = std::nullopt);
json to_json(const SolveRequest& request);

enum class ExitCode : int {
  kOk = 0,
  kMalformed = 1,
  kInfeasible = 2,
  kNumericalFailure = 3,
};

// Reports are JSON objects with "status": "ok" or "error". Geometric
// infeasibility and numerical failures are reported, not thrown.
json solve(const SolveRequest& request);
json classify(const SolveRequest& request);
// solve() plus independent re-derivation of the side lengths and, for
// geometries with a Euclidean (chordal) polygon, the variational solver.
json verify(const SolveRequest& request);

ExitCode exit_code(const json& report);

// SVG for an ok report; throws RequestError on an error report or a
// report without a solution. Identical reports give identical bytes.
std::string render_svg(const json& report);

// The command-line driver behind the cyclicpoly tool.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace cyclic::polyio
