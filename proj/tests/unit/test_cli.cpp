#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "urbanveg/app/cli.hpp"
#include "urbanveg/coverage/coverage_map.hpp"
#include "urbanveg/io/json_common.hpp"
#include "urbanveg/io/placement_io.hpp"

using namespace urbanveg;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "urbanveg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = app::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "urbanveg_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string layout_file() {
  const std::string path = (scratch() / "layout.json").string();
  io::write_file(path, R"({"type": "FeatureCollection", "features": [
    {"type": "Feature", "properties": {"id": "L1", "zone": "residential", "role": "lot"},
     "geometry": {"type": "Polygon", "coordinates": [[[0,0],[40,0],[40,30],[0,30],[0,0]]]}},
    {"type": "Feature", "properties": {"role": "building", "parent_lot": "L1"},
     "geometry": {"type": "Polygon", "coordinates": [[[15,10],[25,10],[25,20],[15,20],[15,10]]]}},
    {"type": "Feature", "properties": {"id": "L2", "zone": "other", "role": "lot"},
     "geometry": {"type": "Polygon", "coordinates": [[[50,0],[90,0],[90,30],[50,30],[50,0]]]}}
  ]})");
  return path;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("place is byte-identical for a fixed seed") {
    const std::string layout = layout_file();
    const Run a = cli({"place", layout, "--seed", "42"});
    const Run b = cli({"place", layout, "--seed", "42"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto e = io::load_placement(a.out);
    CHECK(e.seed == 42);
    CHECK_FALSE(e.records.empty());
    CHECK(cli({"place", layout, "--seed", "43"}).out != a.out);
  }

  TEST_CASE("eval of a placement against itself is zero") {
    const std::string p = (scratch() / "p.json").string();
    REQUIRE(cli({"place", layout_file(), "--seed", "1", "-o", p}).code == 0);
    const Run r = cli({"eval", p, p});
    REQUIRE(r.code == 0);
    const auto report = io::json::parse(r.out);
    CHECK(report["mean_chamfer"] == 0.0);
    CHECK(report["lots_compared"] == 2);
  }

  TEST_CASE("exit codes") {
    const std::string bad = (scratch() / "bad.json").string();
    io::write_file(bad, "{ not json");
    const Run malformed = cli({"place", bad});
    CHECK(malformed.code == 1);
    CHECK_FALSE(malformed.err.empty());

    const Run missing = cli({"place", (scratch() / "missing.json").string()});
    CHECK(missing.code == 2);

    const Run flag = cli({"place", layout_file(), "--bogus"});
    CHECK(flag.code == 1);
    CHECK(flag.err.find("Usage") != std::string::npos);

    CHECK(cli({}).code == 1);
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({"place", layout_file(), "--threshold", "2"}).code == 1);
    CHECK(cli({"place", layout_file(), "--context-xi", "-5"}).code == 1);
  }

  TEST_CASE("out-of-range config is rejected, not clamped") {
    const std::string cfg = (scratch() / "cfg.json").string();
    io::write_file(cfg, R"({"zones": {"residential": {"positional": {"mu": 50}}}})");
    const Run r = cli({"place", layout_file(), "--ppm-config", cfg});
    CHECK(r.code == 1);
    CHECK(r.err.find("[1, 10]") != std::string::npos);
  }

  TEST_CASE("context diffusion changes placements deterministically") {
    const std::string layout = layout_file();
    const Run a = cli({"place", layout, "--seed", "5", "--context-xi", "180"});
    const Run b = cli({"place", layout, "--seed", "5", "--context-xi", "180"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
  }

  TEST_CASE("grow writes skeletons and OBJ") {
    const std::string p = (scratch() / "pg.json").string();
    const std::string obj = (scratch() / "pg.obj").string();
    REQUIRE(cli({"place", layout_file(), "--seed", "2", "-o", p}).code == 0);
    const Run g = cli({"grow", p, "--layout", layout_file(), "--years", "4", "--obj", obj});
    REQUIRE(g.code == 0);
    const auto doc = io::json::parse(g.out);
    CHECK(doc["trees"].size() == io::load_placement(io::read_file(p)).records.size());
    CHECK(io::read_file(obj).find("\nv ") != std::string::npos);
    CHECK(cli({"grow", p, "--attractor-density", "0"}).code == 1);
  }

  TEST_CASE("polygonize and coverage-driven place") {
    const std::string img = (scratch() / "cov.pgm").string();
    const std::string wf = (scratch() / "cov.pgw").string();
    coverage::Raster r{200, 140, std::vector<double>(200 * 140, 1.0)};
    io::write_file(img, coverage::encode_pgm(r));
    io::write_file(wf, coverage::format_worldfile({0.5, 0, 0, -0.5, 0.25, 69.75}));
    const Run poly = cli({"polygonize", "--coverage", img, "--worldfile", wf, "--layout", layout_file()});
    REQUIRE(poly.code == 0);
    CHECK(io::json::parse(poly.out)["features"].size() == 2);

    const Run placed = cli({"place", layout_file(), "--coverage", img, "--worldfile", wf, "--seed", "3"});
    REQUIRE(placed.code == 0);
    CHECK_FALSE(io::load_placement(placed.out).records.empty());
    CHECK(cli({"place", layout_file(), "--coverage", img}).code == 1);
  }
}
