#include "delisle/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "delisle/distortion.hpp"
#include "delisle/error.hpp"
#include "delisle/graticule.hpp"
#include "delisle/params.hpp"
#include "delisle/projection.hpp"

namespace delisle::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string bounds;
  std::string parallels;
  bool russia = false;
  std::string solver = "refined";
  double delta = 1.0;
  std::string lambda0 = "0";
  double miles_per_degree = kDefaultMilesPerDegree;
  bool json_output = false;

  // project
  std::string input = "-";
  std::string output = "-";
  std::string direction = "fwd";

  // error-table
  std::string step = "1";
  bool csv = false;

  // graticule
  std::string lat_min, lat_max, lon_min, lon_max;
  double lon_span = 60.0;
  std::string lat_step = "1", lon_step = "5";
  int segments_per_degree = kDefaultArcSegmentsPerDegree;
  std::string svg_path, geojson_path;
  std::string mode = "geographic";

  // oracle
  int grid = OracleGrid::kMinPointsPerAxis;
  double oracle_lat_step = OracleGrid::kMaxLatStep;
};

Angle angle_flag(const std::string& text, const char* flag) {
  try {
    return dms_parse(text);
  } catch (const Error& e) {
    throw UsageError(fmt::format("{}: {}", flag, e.what()));
  }
}

std::pair<Angle, Angle> angle_pair_flag(const std::string& text, const char* flag) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
    throw UsageError(fmt::format("{} expects two comma-separated angles, got '{}'", flag, text));
  return {angle_flag(text.substr(0, comma), flag), angle_flag(text.substr(comma + 1), flag)};
}

// Everything derived from the shared flags.
struct Setup {
  ConicParams params;
  RegionBounds region;  ///< bounds, or the standard parallels themselves
  bool from_parallels;
  Solver solver;
  bool fell_back = false;
};

Setup make_setup(const Options& o) {
  const int chosen = int(!o.bounds.empty()) + int(!o.parallels.empty()) + int(o.russia);
  if (chosen != 1)
    throw UsageError("give exactly one of --bounds, --parallels or --russia");
  if (o.solver != "refined" && o.solver != "midpoint")
    throw UsageError("--solver must be 'refined' or 'midpoint'");
  if (!(o.delta > 0.0)) throw UsageError("--degree-length must be positive");
  if (!(o.miles_per_degree > 0.0)) throw UsageError("--miles-per-degree must be positive");
  const Angle lambda0 = angle_flag(o.lambda0, "--lambda0");
  const Solver solver = o.russia || o.solver == "refined" ? Solver::refined : Solver::midpoint;

  try {
    if (!o.parallels.empty()) {
      const auto [p, q] = angle_pair_flag(o.parallels, "--parallels");
      const StandardParallels sp(p, q);
      return {params_from_parallels(sp, o.delta, lambda0), RegionBounds(p, q), true, solver};
    }
    const auto [a, b] = o.russia ? std::pair{Angle::degrees(40), Angle::degrees(70)}
                                 : angle_pair_flag(o.bounds, "--bounds");
    const RegionBounds rb(a, b);
    const auto d = params_from_bounds(rb, solver, o.delta, lambda0);
    return {d.params, rb, false, d.solver_used, d.fell_back};
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::invalid_argument || e.kind() == ErrorKind::degenerate_region ||
        e.kind() == ErrorKind::degenerate_cone)
      throw UsageError(e.what());
    throw;
  }
}

std::filesystem::path output_path(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("DELISLE_OUTPUT_DIR"); dir && *dir)
      return std::filesystem::path(dir) / p;
  }
  return p;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  const auto p = output_path(path);
  std::ofstream f(p, std::ios::binary);
  if (!f) throw Error(ErrorKind::io, fmt::format("cannot open '{}' for writing", p.string()));
  f << text;
  if (!f) throw Error(ErrorKind::io, fmt::format("failed writing '{}'", p.string()));
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::io, fmt::format("cannot open '{}'", path));
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

json error_entry(Angle lat, const Setup& s, double miles_per_degree) {
  const double e = error_at(lat, s.params);
  return {{"lat_deg", lat.deg()},
          {"lat_dms", dms_format(lat)},
          {"e_meridian_deg", e},
          {"e_miles", error_in_miles(e, miles_per_degree)}};
}

int cmd_params(const Options& o, std::ostream& out) {
  const Setup s = make_setup(o);
  const Angle south = s.region.south(), north = s.region.north();
  // Distance from the apex to the southern reference parallel.
  const Angle apex_distance = Angle::degrees(parallel_radius(south, s.params) / s.params.delta);
  const Angle omega_per_degree = Angle::degrees(s.params.omega);

  json j;
  j["mode"] = s.from_parallels ? "parallels" : "bounds";
  if (!s.from_parallels) j["solver"] = s.solver == Solver::refined ? "refined" : "midpoint";
  j["south_deg"] = south.deg();
  j["north_deg"] = north.deg();
  j["omega"] = s.params.omega;
  j["omega_dms_per_degree"] = dms_format(omega_per_degree);
  j["z_deg"] = s.params.z.deg();
  j["z_dms"] = dms_format(s.params.z);
  j["apex_distance_deg"] = apex_distance.deg();
  j["apex_distance_dms"] = dms_format(apex_distance);
  j["delta"] = s.params.delta;
  j["lambda0_deg"] = s.params.lambda0.deg();
  j["hemisphere"] = s.params.hemisphere == Hemisphere::north ? "north" : "south";
  j["miles_per_degree"] = o.miles_per_degree;
  std::optional<Angle> x_star;
  if (s.params.omega <= 1.0) x_star = max_error_latitude(s.params);
  j["x_star_deg"] = x_star ? json(x_star->deg()) : json(nullptr);
  j["x_star_dms"] = x_star ? json(dms_format(*x_star)) : json(nullptr);
  j["errors"] = {{"south", error_entry(south, s, o.miles_per_degree)},
                 {"north", error_entry(north, s, o.miles_per_degree)}};
  if (x_star) j["errors"]["extremum"] = error_entry(*x_star, s, o.miles_per_degree);
  json roots = json::array();
  for (Angle r : standard_parallel_roots(s.params, s.region)) roots.push_back(r.deg());
  j["roots_deg"] = roots;
  j["fell_back_to_midpoint"] = s.fell_back;

  if (o.json_output) {
    out << j.dump(2) << "\n";
    return kExitOk;
  }

  if (s.from_parallels)
    out << fmt::format("standard parallels  {} .. {}\n", dms_format(south), dms_format(north));
  else
    out << fmt::format("region bounds       {} .. {}  ({} solver{})\n", dms_format(south),
                       dms_format(north), j["solver"].get<std::string>(),
                       s.fell_back ? ", refined unavailable" : "");
  out << fmt::format("omega               {:.9f}  ({} per degree of longitude)\n", s.params.omega,
                     dms_format(omega_per_degree));
  out << fmt::format("z                   {:.9f} deg  ({})\n", s.params.z.deg(),
                     dms_format(s.params.z));
  out << fmt::format("apex distance       {:.9f} deg  ({}) from the {} parallel\n",
                     apex_distance.deg(), dms_format(apex_distance), dms_format(south));
  if (x_star)
    out << fmt::format("x_star              {:.9f} deg  ({})\n", x_star->deg(), dms_format(*x_star));
  out << fmt::format("delta               {}\nlambda0             {} deg\n", s.params.delta,
                     s.params.lambda0.deg());
  for (const char* key : {"south", "north", "extremum"}) {
    if (!j["errors"].contains(key)) continue;
    const auto& e = j["errors"][key];
    out << fmt::format("error at {:<8}    {:+.9f} meridian deg  {:+.9f} miles  ({})\n", key,
                       e["e_meridian_deg"].get<double>(), e["e_miles"].get<double>(),
                       e["lat_dms"].get<std::string>());
  }
  out << "roots              ";
  if (roots.empty()) out << " none";
  for (const auto& r : roots) out << fmt::format(" {:.9f} ({})", r.get<double>(),
                                                 dms_format(Angle::degrees(r.get<double>())));
  out << "\n";
  return kExitOk;
}

int cmd_project(const Options& o, std::istream& in, std::ostream& out) {
  if (o.direction != "fwd" && o.direction != "inv")
    throw UsageError("--direction must be 'fwd' or 'inv'");
  const Setup s = make_setup(o);
  const std::string text = read_input(o.input, in);
  if (o.direction == "fwd") {
    std::vector<PlanePoint> result;
    for (const auto& g : read_points_csv(text)) result.push_back(forward(g, s.params));
    write_output(o.output, write_plane_csv(result), out);
  } else {
    std::vector<GeoPoint> result;
    for (const auto& p : read_plane_csv(text)) result.push_back(inverse(p, s.params));
    write_output(o.output, write_points_csv(result), out);
  }
  return kExitOk;
}

int cmd_error_table(const Options& o, std::ostream& out) {
  const Setup s = make_setup(o);
  const Angle step = angle_flag(o.step, "--step");
  if (!(step.deg() > 0.0)) throw UsageError("--step must be positive");
  const auto report = build_report(s.params, s.region, step, o.miles_per_degree);

  std::string text;
  if (o.json_output) {
    json rows = json::array();
    for (const auto& r : report.samples)
      rows.push_back({{"lat_deg", r.lat.deg()},
                      {"e_meridian_deg", r.error},
                      {"scale_factor", r.scale_factor},
                      {"e_miles", r.error_miles}});
    json roots = json::array();
    for (Angle r : report.roots) roots.push_back(r.deg());
    json j = {{"omega", s.params.omega},
              {"z_deg", s.params.z.deg()},
              {"max_error", report.max_error},
              {"max_error_lat_deg",
               report.max_error_lat ? json(report.max_error_lat->deg()) : json(nullptr)},
              {"roots_deg", roots},
              {"miles_per_degree", report.miles_per_degree},
              {"samples", rows}};
    text = j.dump(2) + "\n";
  } else {
    text = o.csv ? report_to_csv(report) : report_to_table(report);
  }
  write_output(o.output, text, out);
  return kExitOk;
}

int cmd_graticule(const Options& o, std::ostream& out) {
  if (o.mode != "geographic" && o.mode != "projected")
    throw UsageError("--mode must be 'geographic' or 'projected'");
  if (o.segments_per_degree < 1) throw UsageError("--segments-per-degree must be >= 1");
  if (!(o.lon_span > 0.0)) throw UsageError("--lon-span must be positive");
  const Setup s = make_setup(o);

  RegionWindow win;
  win.lat_min = o.lat_min.empty() ? s.region.south() : angle_flag(o.lat_min, "--lat-min");
  win.lat_max = o.lat_max.empty() ? s.region.north() : angle_flag(o.lat_max, "--lat-max");
  win.lon_min = o.lon_min.empty() ? s.params.lambda0 - Angle::degrees(o.lon_span / 2)
                                  : angle_flag(o.lon_min, "--lon-min");
  win.lon_max = o.lon_max.empty() ? s.params.lambda0 + Angle::degrees(o.lon_span / 2)
                                  : angle_flag(o.lon_max, "--lon-max");
  win.lat_step = angle_flag(o.lat_step, "--lat-step");
  win.lon_step = angle_flag(o.lon_step, "--lon-step");
  try {
    win.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }

  const Graticule g = build_graticule(s.params, win, o.segments_per_degree);
  const auto mode = o.mode == "geographic" ? GeoJsonMode::geographic : GeoJsonMode::projected;
  if (o.svg_path.empty() && o.geojson_path.empty()) {
    out << write_svg(g);
    return kExitOk;
  }
  if (!o.svg_path.empty()) write_output(o.svg_path, write_svg(g), out);
  if (!o.geojson_path.empty()) write_output(o.geojson_path, write_geojson(g, s.params, mode), out);
  return kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.grid < 2) throw UsageError("--grid must be at least 2");
  if (!(o.oracle_lat_step > 0.0)) throw UsageError("--oracle-lat-step must be positive");
  const Setup s = make_setup(o);
  OracleGrid grid;
  grid.omega_points = grid.z_points = o.grid;
  grid.lat_step_deg = o.oracle_lat_step;
  if (!grid.meets_contract())
    err << fmt::format(
        "warning: grid {}x{} with latitude step {} is below the contract minimum "
        "({} points per axis, step <= {}); results are indicative only\n",
        o.grid, o.grid, o.oracle_lat_step, OracleGrid::kMinPointsPerAxis, OracleGrid::kMaxLatStep);

  const auto ref = params_from_bounds(s.region, Solver::refined, s.params.delta, s.params.lambda0);
  const double closed_form_sup = sup_error(ref.params, s.region, grid.lat_step_deg);
  const auto best = minimax_oracle(s.region, grid);
  const double gap = (closed_form_sup - best.sup_error) / best.sup_error;
  auto sign = [](double v) { return v > 0 ? '+' : (v < 0 ? '-' : '0'); };
  const std::string pattern = {sign(best.error_south), sign(best.error_interior),
                               sign(best.error_north)};

  if (o.json_output) {
    json j = {{"south_deg", s.region.south().deg()},
              {"north_deg", s.region.north().deg()},
              {"grid_points_per_axis", o.grid},
              {"lat_step_deg", grid.lat_step_deg},
              {"meets_contract", grid.meets_contract()},
              {"closed_form", {{"omega", ref.params.omega},
                               {"z_deg", ref.params.z.deg()},
                               {"sup_error", closed_form_sup}}},
              {"oracle", {{"omega", best.omega},
                          {"z_deg", best.z.deg()},
                          {"sup_error", best.sup_error},
                          {"error_south", best.error_south},
                          {"error_interior", best.error_interior},
                          {"interior_lat_deg", best.interior_lat.deg()},
                          {"error_north", best.error_north}}},
              {"relative_gap", gap},
              {"sign_pattern", pattern}};
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << fmt::format("region              {} .. {}\n", dms_format(s.region.south()),
                     dms_format(s.region.north()));
  out << fmt::format("closed form         omega {:.9f}  z {:.9f} deg  sup|e| {:.9f}\n",
                     ref.params.omega, ref.params.z.deg(), closed_form_sup);
  out << fmt::format("grid oracle         omega {:.9f}  z {:.9f} deg  sup|e| {:.9f}\n", best.omega,
                     best.z.deg(), best.sup_error);
  out << fmt::format("relative gap        {:+.6f}%\n", 100.0 * gap);
  out << fmt::format("oracle error curve  e(south) {:+.9f}  e({}) {:+.9f}  e(north) {:+.9f}  "
                     "pattern ({},{},{})\n",
                     best.error_south, dms_format(best.interior_lat), best.error_interior,
                     best.error_north, pattern[0], pattern[1], pattern[2]);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Equidistant conic (Delisle) projection: parameters, projection, distortion "
               "and graticule export",
               "delisle"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "Read 'key = value' options from a file; flags override it");

  auto* bounds = app.add_option("--bounds", o.bounds, "Southern,northern bounding latitudes");
  auto* parallels = app.add_option("--parallels", o.parallels, "Two standard parallels p,q");
  auto* russia = app.add_flag("--russia", o.russia, "Preset: bounds 40,70, refined solver");
  bounds->excludes(parallels)->excludes(russia);
  parallels->excludes(russia);
  app.add_option("--solver", o.solver, "midpoint | refined")->capture_default_str();
  app.add_option("--degree-length", o.delta, "Map length of one meridian degree")
      ->capture_default_str();
  app.add_option("--lambda0", o.lambda0, "Central meridian (decimal or DMS)")
      ->capture_default_str();
  app.add_option("--miles-per-degree", o.miles_per_degree, "Miles per meridian degree")
      ->capture_default_str();
  app.add_flag("--json", o.json_output, "Machine-readable output");

  auto* params_cmd = app.add_subcommand("params", "Derive and print the projection parameters");

  auto* project_cmd = app.add_subcommand("project", "Project a CSV of points");
  project_cmd->add_option("--input,-i", o.input, "Input CSV ('-' for stdin)")->capture_default_str();
  project_cmd->add_option("--output,-o", o.output, "Output CSV ('-' for stdout)")
      ->capture_default_str();
  project_cmd->add_option("--direction", o.direction, "fwd (lat,lon -> x,y) | inv")
      ->capture_default_str();

  auto* table_cmd = app.add_subcommand("error-table", "Tabulate the parallel error");
  table_cmd->add_option("--step", o.step, "Latitude step")->capture_default_str();
  table_cmd->add_flag("--csv", o.csv, "CSV instead of an aligned table");
  table_cmd->add_option("--output,-o", o.output, "Output file ('-' for stdout)");

  auto* grat_cmd = app.add_subcommand("graticule", "Export the graticule as SVG and/or GeoJSON");
  grat_cmd->add_option("--lat-min", o.lat_min, "Southern edge (default: region)");
  grat_cmd->add_option("--lat-max", o.lat_max, "Northern edge (default: region)");
  grat_cmd->add_option("--lon-min", o.lon_min, "Western edge (default: lambda0 - span/2)");
  grat_cmd->add_option("--lon-max", o.lon_max, "Eastern edge (default: lambda0 + span/2)");
  grat_cmd->add_option("--lon-span", o.lon_span, "Longitude span centred on lambda0")
      ->capture_default_str();
  grat_cmd->add_option("--lat-step", o.lat_step, "Parallel spacing")->capture_default_str();
  grat_cmd->add_option("--lon-step", o.lon_step, "Meridian spacing")->capture_default_str();
  grat_cmd->add_option("--segments-per-degree", o.segments_per_degree,
                       "Arc segments per degree of longitude")
      ->capture_default_str();
  grat_cmd->add_option("--svg", o.svg_path, "SVG output path");
  grat_cmd->add_option("--geojson", o.geojson_path, "GeoJSON output path");
  grat_cmd->add_option("--mode", o.mode, "GeoJSON coordinates: geographic | projected")
      ->capture_default_str();

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force minimax check of the parameters");
  oracle_cmd->add_option("--grid", o.grid, "Grid points per axis")->capture_default_str();
  oracle_cmd->add_option("--oracle-lat-step", o.oracle_lat_step, "Latitude sampling step")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (params_cmd->parsed()) return cmd_params(o, out);
    if (project_cmd->parsed()) return cmd_project(o, in, out);
    if (table_cmd->parsed()) return cmd_error_table(o, out);
    if (grat_cmd->parsed()) return cmd_graticule(o, out);
    if (oracle_cmd->parsed()) return cmd_oracle(o, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace delisle::cli
