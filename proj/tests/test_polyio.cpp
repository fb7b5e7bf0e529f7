#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "cyclic/polyio.hpp"
#include "generators.hpp"

using namespace cyclic;
using namespace cyclic::polyio;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

json request(const char* geometry, std::vector<double> lengths) {
  return {{"geometry", geometry}, {"lengths", lengths}};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "cyclicpoly_tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("geometry names") {
  for (auto g : {Geometry::kEuclidean, Geometry::kSpherical, Geometry::kHyperbolic,
                 Geometry::kMinkowski}) {
    CHECK(parse_geometry(geometry_name(g)) == g);
  }
  CHECK_FALSE(parse_geometry("elliptic"));
}

TEST_CASE("parse_request validation") {
  const auto r = parse_request(request("euclidean", {3, 4, 5}));
  CHECK(r.geometry == Geometry::kEuclidean);
  CHECK(r.lengths == std::vector<double>{3, 4, 5});
  CHECK(r.options.tolerance == 1e-9);

  CHECK_THROWS_AS(parse_request(json::array()), RequestError);
  CHECK_THROWS_AS(parse_request(json{{"lengths", {1, 1, 1}}}), RequestError);
  CHECK(parse_request(json{{"lengths", {1, 1, 1}}}, Geometry::kHyperbolic).geometry ==
        Geometry::kHyperbolic);
  CHECK_THROWS_AS(parse_request(request("elliptic", {1, 1, 1})), RequestError);
  CHECK_THROWS_AS(parse_request(json{{"geometry", "euclidean"}}), RequestError);
  CHECK_THROWS_AS(parse_request(json{{"geometry", "euclidean"}, {"lengths", {1, "a", 1}}}),
                  RequestError);
  CHECK_THROWS_AS(parse_request(request("euclidean", {1, 1})), RequestError);
  CHECK_THROWS_AS(parse_request(request("euclidean", {1, -1, 1})), RequestError);
  CHECK_THROWS_AS(parse_request(request("euclidean", {1, 0, 1})), RequestError);
  json bad_tol = request("euclidean", {1, 1, 1});
  bad_tol["options"] = {{"tolerance", -1.0}};
  CHECK_THROWS_AS(parse_request(bad_tol), RequestError);
}

TEST_CASE("request JSON round trip is idempotent") {
  gen::Rng rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    json j = request("spherical", gen::strict_lengths(rng, 3, 10));
    j["options"] = {{"tolerance", gen::log_uniform(rng, 1e-12, 1e-3)}};
    const json once = to_json(parse_request(j));
    const json twice = to_json(parse_request(once));
    CHECK(once == twice);
    CHECK(once.dump() == twice.dump());
    // Shortest round-trip formatting reproduces every double exactly.
    CHECK(json::parse(once.dump()) == once);
  }
}

TEST_CASE("solve examples") {
  const auto e = solve(parse_request(request("euclidean", {3, 4, 5})));
  CHECK(e["status"] == "ok");
  CHECK(std::abs(e["solution"]["radius"].get<double>() - 2.5) <= 1e-12);
  CHECK(exit_code(e) == ExitCode::kOk);

  const auto s = solve(parse_request(request("spherical", {1, 1, 1, 4})));
  CHECK(s["status"] == "error");
  CHECK(s["error"]["kind"] == "infeasible");
  CHECK(s["error"]["code"] == "perimeter_bound");
  // Side 3 also exceeds the other three together.
  CHECK(s["error"]["side_index"] == 3);
  CHECK(exit_code(s) == ExitCode::kInfeasible);
  const auto p = solve(parse_request(request("spherical", {2.5, 2.5, 2.5})));
  CHECK(p["error"]["code"] == "perimeter_bound");
  CHECK_FALSE(p["error"].contains("side_index"));

  const auto h = solve(parse_request(request("hyperbolic", {1, 1, 1.9})));
  CHECK(h["status"] == "ok");
  CHECK(h["solution"]["class"] == "hypercycle");
  // Three exceeds 1 + 1, so no hyperbolic triangle exists.
  const auto x = solve(parse_request(request("hyperbolic", {1, 1, 3})));
  CHECK(x["error"]["code"] == "polygon_inequality_violated");

  const auto m = solve(parse_request(request("minkowski", {1, 1, 3})));
  CHECK(m["status"] == "ok");
}

TEST_CASE("ok reports keep every residual under its tolerance") {
  gen::Rng rng(72);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<json> reqs{request("euclidean", gen::strict_lengths(rng, 3, 30)),
                           request("spherical", gen::spherical_lengths(rng, 3, 20)),
                           request("hyperbolic", gen::circle_lengths(rng, 3, 10)),
                           request("hyperbolic", gen::hypercycle_lengths(rng, 3, 10)),
                           request("minkowski", gen::minkowski_lengths(rng, 3, 10))};
    for (const auto& r : reqs) {
      const auto rep = solve(parse_request(r));
      REQUIRE(rep["status"] == "ok");
      for (const auto& [name, v] : rep["diagnostics"]["residuals"].items()) {
        CHECK_MESSAGE(v["value"].get<double>() <= v["tolerance"].get<double>(), name);
      }
    }
  }
}

TEST_CASE("infeasible reports name the offending side") {
  const auto e = solve(parse_request(request("euclidean", {1, 5, 1})));
  CHECK(e["error"]["code"] == "polygon_inequality_violated");
  CHECK(e["error"]["side_index"] == 1);
  const auto q = solve(parse_request(request("hyperbolic", {1, 1, 2})));
  CHECK(q["error"]["code"] == "polygon_inequality_equality");
  CHECK(q["error"]["side_index"] == 2);
  const auto m = solve(parse_request(request("minkowski", {1, 1, 1})));
  CHECK(m["error"]["code"] == "reverse_inequality_missing");
}

TEST_CASE("classify examples") {
  CHECK(classify(parse_request(request("hyperbolic", {1, 1, 1})))["class"] == "circle");
  CHECK(classify(parse_request(request("hyperbolic", {1, 1, 1.8217888580681216})))["class"] == "horocycle");
  CHECK(classify(parse_request(request("hyperbolic", {1, 1, 1.9})))["class"] == "hypercycle");
  CHECK_THROWS_AS(classify(parse_request(request("euclidean", {1, 1, 1}))), RequestError);
}

TEST_CASE("verify examples") {
  const auto t = verify(parse_request(request("euclidean", {3, 4, 5})));
  CHECK(t["verified"] == true);
  CHECK(t["cross_checks"]["radius_delta"]["value"].get<double>() <= 1e-8);

  gen::Rng rng(73);
  std::vector<double> l(12);
  do {
    for (double& x : l) x = gen::uniform(rng, 0.5, 2.0);
  } while (!gen::strict_polygon(l));
  const auto twelve = verify(parse_request(request("euclidean", l)));
  CHECK(twelve["verified"] == true);
  CHECK(twelve["cross_checks"]["max_side_residual"]["value"].get<double>() <= 1e-9);

  const auto bad = verify(parse_request(request("euclidean", {1, 1, 3})));
  CHECK(bad["status"] == "error");
  CHECK(exit_code(bad) == ExitCode::kInfeasible);

  for (const char* g : {"spherical", "hyperbolic", "minkowski"}) {
    const auto r = verify(parse_request(request(g, std::string(g) == "minkowski"
                                                       ? std::vector<double>{1, 1, 3}
                                                       : std::vector<double>{1, 1, 1})));
    CHECK(r["verified"] == true);
  }
}

TEST_CASE("exit code contract through the CLI") {
  CHECK(cli({"solve"}, request("euclidean", {3, 4, 5}).dump()).code == 0);
  CHECK(cli({"solve"}, request("euclidean", {1, 1, 3}).dump()).code == 2);
  CHECK(cli({"solve"}, request("spherical", {1, 1, 1}).dump()).code == 0);
  CHECK(cli({"solve"}, request("spherical", {1, 1, 1, 4}).dump()).code == 2);
  CHECK(cli({"solve"}, request("hyperbolic", {1, 1, 1.9}).dump()).code == 0);
  CHECK(cli({"solve"}, request("hyperbolic", {1, 1, 5, 1, 1, 9}).dump()).code == 2);
  CHECK(cli({"solve"}, request("minkowski", {1, 1, 3}).dump()).code == 0);
  CHECK(cli({"solve"}, request("minkowski", {1, 1, 1}).dump()).code == 2);

  const auto broken = cli({"solve"}, "{\"geometry\": \"euclidean\", \"lengths\": [1, 2,");
  CHECK(broken.code == 1);
  CHECK(broken.err.find("byte") != std::string::npos);
  CHECK(cli({"solve"}, "{\"geometry\":\"euclidean\",\"lengths\":[1,1]}").code == 1);
  CHECK(cli({"solve"}, "{\"geometry\":\"nope\",\"lengths\":[1,1,1]}").code == 1);
  CHECK(cli({"frobnicate"}, "{}").code == 1);
  CHECK(cli({}, "{}").code == 1);
  CHECK(cli({"solve", "/nonexistent/request.json"}, "").code == 1);
}

TEST_CASE("CLI flags") {
  const auto forced = cli({"solve", "--geometry", "hyperbolic"}, request("euclidean", {1, 1, 1.9}).dump());
  CHECK(forced.code == 0);
  CHECK(json::parse(forced.out)["geometry"] == "hyperbolic");

  // One part in 1e10 above the threshold: inside the default band only.
  const json near = json{{"lengths", {1, 1, 1.8217888581681216}}};
  const auto cls = cli({"classify"}, near.dump());
  CHECK(cls.code == 0);
  CHECK(json::parse(cls.out)["class"] == "horocycle");
  const auto strict = cli({"classify", "--horocycle-band", "0"}, near.dump());
  CHECK(json::parse(strict.out)["class"] == "hypercycle");

  CHECK(cli({"solve", "--tolerance", "-1"}, request("euclidean", {3, 4, 5}).dump()).code == 1);
}

TEST_CASE("batch requests report the worst exit code") {
  json batch = json::array({request("euclidean", {3, 4, 5}), request("euclidean", {1, 1, 3})});
  const auto r = cli({"solve"}, batch.dump());
  CHECK(r.code == 2);
  const auto out = json::parse(r.out);
  REQUIRE(out.is_array());
  CHECK(out[0]["status"] == "ok");
  CHECK(out[1]["status"] == "error");
}

TEST_CASE("input from a file") {
  const auto path = scratch("req.json");
  std::ofstream(path) << request("euclidean", {3, 4, 5}).dump();
  const auto r = cli({"solve", path.string()}, "");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["solution"]["radius"].get<double>() == doctest::Approx(2.5));
}

TEST_CASE("render is deterministic for every geometry") {
  const std::vector<json> reqs{request("euclidean", {3, 4, 5}), request("spherical", {1, 1, 1}),
                               request("hyperbolic", {1, 1, 1}),
                               request("hyperbolic", {1, 1, 1.8217888580681216}),
                               request("hyperbolic", {1, 1, 1.9}), request("minkowski", {1, 1, 3})};
  for (const auto& r : reqs) {
    const auto a = cli({"render"}, r.dump());
    const auto b = cli({"render"}, r.dump());
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("<?xml", 0) == 0);
    CHECK(a.out.find("</svg>") != std::string::npos);
    // Rendering the solved report gives the same bytes as rendering the request.
    const auto rep = solve(parse_request(r));
    CHECK(render_svg(rep) == a.out);
  }
}

TEST_CASE("render examples") {
  const auto svg = render_svg(solve(parse_request(request("euclidean", {3, 4, 5}))));
  CHECK(svg.find("r=\"2.500000\"") != std::string::npos);

  // Disk-model vertices of the hyperbolic triangle lie inside the unit disk.
  const auto rep = solve(parse_request(request("hyperbolic", {1, 1, 1})));
  for (const auto& v : rep["solution"]["vertices"]) {
    const double x = v[0].get<double>(), y = v[1].get<double>(), z = v[2].get<double>();
    CHECK(std::hypot(x / (1.0 + z), y / (1.0 + z)) < 1.0);
  }
}

TEST_CASE("render refuses error reports and leaves no file") {
  const auto path = scratch("bad.svg");
  fs::remove(path);
  const auto r = cli({"render", "--out", path.string()}, request("euclidean", {1, 1, 2}).dump());
  CHECK(r.code != 0);
  CHECK_FALSE(fs::exists(path));
  CHECK_FALSE(fs::exists(path.string() + ".tmp"));
  CHECK_THROWS_AS(render_svg(solve(parse_request(request("euclidean", {1, 1, 2})))), RequestError);
  CHECK_THROWS_AS(render_svg(json{{"status", "ok"}}), RequestError);

  const auto good = scratch("good.svg");
  fs::remove(good);
  CHECK(cli({"render", "--out", good.string()}, request("euclidean", {3, 4, 5}).dump()).code == 0);
  CHECK(fs::exists(good));
  std::ifstream f(good);
  const std::string body((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(body == cli({"render"}, request("euclidean", {3, 4, 5}).dump()).out);
}
