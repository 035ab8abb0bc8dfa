#include "urbanveg/app/cli.hpp"

#include <CLI11.hpp>

#include <csignal>
#include <iostream>
#include <optional>
#include <string>

#include "urbanveg/app/pipeline.hpp"
#include "urbanveg/app/service.hpp"
#include "urbanveg/coverage/polygonize.hpp"
#include "urbanveg/errors.hpp"

namespace urbanveg::app {

namespace {

struct Options {
  // place
  std::string layout;
  std::string ppm_config;
  std::uint64_t seed = 0;
  std::string coverage;
  std::string worldfile;
  double threshold = 0.5;
  std::optional<double> context_xi;
  std::string output;
  // grow
  std::string placement;
  int years = 0;
  double attractor_density = growth::GrowthOptions{}.attractor_density;
  std::string obj;
  // eval
  std::string a;
  std::string b;
  // serve
  std::string host = "127.0.0.1";
  int port = 8080;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-")
    out << text;
  else
    io::write_file(path, text);
}

io::EngineConfig config_of(const Options& o) {
  if (o.ppm_config.empty()) return {};
  return io::load_config(io::read_file(o.ppm_config));
}

void check_threshold(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw ParameterRangeError("threshold", t, 0.0, 1.0);
}

coverage::CoverageMap coverage_of(const Options& o) {
  if (o.worldfile.empty()) throw ValidationError("worldfile", "--coverage requires --worldfile");
  return coverage::load_coverage(io::read_file(o.coverage), io::read_file(o.worldfile));
}

int cmd_place(const Options& o, std::ostream& out) {
  check_threshold(o.threshold);
  const io::LayoutDocument layout = io::load_layout(io::read_file(o.layout));
  const io::EngineConfig config = config_of(o);
  std::optional<coverage::CoverageMap> map;
  if (!o.coverage.empty()) map = coverage_of(o);
  PlaceRequest request;
  request.seed = o.seed;
  request.context_xi = o.context_xi;
  request.coverage = map ? &*map : nullptr;
  request.threshold = o.threshold;
  emit(io::dump_placement(place_layout(layout, config, request)), o.output, out);
  return kExitOk;
}

int cmd_grow(const Options& o, std::ostream& out) {
  if (o.years < 0 || o.years > 100) throw ParameterRangeError("years", o.years, 0, 100);
  if (!(o.attractor_density > 0.0 && o.attractor_density <= 5.0))
    throw ParameterRangeError("attractor_density", o.attractor_density, 0.0, 5.0);
  const io::PlacementExport placement = io::load_placement(io::read_file(o.placement));
  std::optional<io::LayoutDocument> layout;
  if (!o.layout.empty()) layout = io::load_layout(io::read_file(o.layout));
  const io::EngineConfig config = config_of(o);
  growth::GrowthOptions options;
  options.years = o.years;
  options.attractor_density = o.attractor_density;
  const std::vector<io::LotSkeleton> trees =
      grow_placement(placement, layout ? &*layout : nullptr, config.species, options, o.seed);
  emit(io::export_skeletons(trees), o.output, out);
  if (!o.obj.empty()) io::write_file(o.obj, io::export_obj(trees));
  return kExitOk;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const io::PlacementExport a = io::load_placement(io::read_file(o.a));
  const io::PlacementExport b = io::load_placement(io::read_file(o.b));
  std::optional<io::LayoutDocument> layout;
  if (!o.layout.empty()) layout = io::load_layout(io::read_file(o.layout));
  emit(evaluate(a, b, layout ? &*layout : nullptr).dump(2) + "\n", o.output, out);
  return kExitOk;
}

int cmd_polygonize(const Options& o, std::ostream& out) {
  check_threshold(o.threshold);
  const coverage::CoverageMap map = coverage_of(o);
  const io::LayoutDocument layout = io::load_layout(io::read_file(o.layout));
  emit(polygonize_layout(map, layout, o.threshold).dump(2) + "\n", o.output, out);
  return kExitOk;
}

Service* g_service = nullptr;

extern "C" void on_signal(int) {
  if (g_service) g_service->stop();
}

int cmd_serve(const Options& o, std::ostream& err) {
  if (o.port < 0 || o.port > 65535) throw ParameterRangeError("port", o.port, 0, 65535);
  Service service;
  const int port = service.bind(o.host, o.port);
  if (port < 0) throw IoError(o.host + ":" + std::to_string(o.port), "cannot bind " + o.host + ":" + std::to_string(o.port));
  err << "listening on http://" << o.host << ":" << port << std::endl;
  g_service = &service;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  service.listen();
  g_service = nullptr;
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Procedural vegetation placement and growth for urban lot layouts", "urbanveg"};
  app.set_version_flag("--version", std::string(io::kEngineVersion));
  app.require_subcommand(1);
  Options o;

  auto* place = app.add_subcommand("place", "Place plant seeds into the lots of a layout");
  place->add_option("layout", o.layout, "Layout FeatureCollection (JSON)")->required();
  place->add_option("--ppm-config", o.ppm_config, "Engine config: zone models, species, envelope");
  place->add_option("--seed", o.seed, "Random seed recorded in the output");
  place->add_option("--coverage", o.coverage, "Coverage raster (PNG or PGM) driving the placement");
  place->add_option("--worldfile", o.worldfile, "Six-line world file georeferencing the coverage raster");
  place->add_option("--threshold", o.threshold, "Coverage threshold in [0, 1]");
  place->add_option("--context-xi", o.context_xi, "Blend lot models with neighbours within this radius (m)");
  place->add_option("-o,--output", o.output, "Output file (default stdout)");

  auto* grow = app.add_subcommand("grow", "Grow the seeds of a placement into branch skeletons");
  grow->add_option("placement", o.placement, "Placement JSON")->required();
  grow->add_option("--layout", o.layout, "Layout providing building obstacles");
  grow->add_option("--ppm-config", o.ppm_config, "Engine config with the species library");
  grow->add_option("--years", o.years, "Growth cycles (0 grows each tree to its age)");
  grow->add_option("--attractor-density", o.attractor_density, "Attraction points per cubic meter");
  grow->add_option("--seed", o.seed, "Random seed");
  grow->add_option("-o,--output", o.output, "Skeleton JSON output (default stdout)");
  grow->add_option("--obj", o.obj, "Also write an OBJ line set");

  auto* eval = app.add_subcommand("eval", "Per-lot Chamfer distance between two placements");
  eval->add_option("a", o.a, "First placement")->required();
  eval->add_option("b", o.b, "Second placement")->required();
  eval->add_option("--layout", o.layout, "Layout used to normalize each lot");
  eval->add_option("-o,--output", o.output, "Report output (default stdout)");

  auto* poly = app.add_subcommand("polygonize", "Vegetated regions of a coverage raster per lot");
  poly->add_option("--coverage", o.coverage, "Coverage raster (PNG or PGM)")->required();
  poly->add_option("--worldfile", o.worldfile, "World file")->required();
  poly->add_option("--layout", o.layout, "Layout whose lots stencil the raster")->required();
  poly->add_option("--threshold", o.threshold, "Coverage threshold in [0, 1]");
  poly->add_option("-o,--output", o.output, "Output file (default stdout)");

  auto* serve = app.add_subcommand("serve", "Run the HTTP placement service");
  serve->add_option("--port", o.port, "Port (0 picks a free one)");
  serve->add_option("--host", o.host, "Bind address");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << io::kEngineVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    // Help of the subcommand in use, if one was recognised.
    const auto used = app.get_subcommands();
    err << (used.empty() ? app.help() : used.front()->help());
    return kExitValidation;
  }

  try {
    if (place->parsed()) return cmd_place(o, out);
    if (grow->parsed()) return cmd_grow(o, out);
    if (eval->parsed()) return cmd_eval(o, out);
    if (poly->parsed()) return cmd_polygonize(o, out);
    return cmd_serve(o, err);
  } catch (const IoError& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace urbanveg::app
