#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "delisle/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = delisle::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

fs::path scratch_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("delisle_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::size_t lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST_CASE("params --russia") {
  const auto r = run({"params", "--russia", "--json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["omega"].get<double>() == doctest::Approx(0.80983).epsilon(1e-5));
  CHECK(j["z_deg"].get<double>() >= 4.8);
  CHECK(j["z_deg"].get<double>() <= 5.1);
  CHECK(j["x_star_deg"].get<double>() == doctest::Approx(54.079).epsilon(1e-4));
  CHECK(std::abs(j["errors"]["south"]["e_meridian_deg"].get<double>()) ==
        doctest::Approx(0.0098).epsilon(0.01));
  CHECK(j["solver"] == "refined");
  CHECK(j["roots_deg"].size() == 2);

  const auto text = run({"params", "--russia"});
  CHECK(text.code == 0);
  // Every JSON scalar of interest also appears in the text report.
  for (const char* needle : {"omega", "z ", "apex distance", "x_star", "error at south",
                             "error at north", "error at extremum", "roots", "54°4′44″"})
    CHECK_MESSAGE(text.out.find(needle) != std::string::npos, needle);
}

TEST_CASE("params --parallels 50,60") {
  const auto r = run({"params", "--parallels", "50,60", "--json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["mode"] == "parallels");
  CHECK(j["apex_distance_dms"].get<std::string>().starts_with("45°1′"));
  CHECK(j["z_dms"].get<std::string>().starts_with("5°1′"));
  CHECK(std::abs(j["errors"]["south"]["e_meridian_deg"].get<double>()) < 1e-12);

  // DMS on the command line.
  const auto dms = json::parse(run({"params", "--parallels", "50°,60°0′", "--json"}).out);
  CHECK(dms["omega"] == j["omega"]);
}

TEST_CASE("params flag validation") {
  CHECK(run({"params", "--bounds", "40,70", "--parallels", "50,60"}).code == 2);
  CHECK(run({"params", "--russia", "--bounds", "40,70"}).code == 2);
  CHECK(run({"params"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"params", "--bounds", "70,40"}).code == 2);
  CHECK(run({"params", "--bounds", "40"}).code == 2);
  CHECK(run({"params", "--bounds", "40,7x"}).code == 2);
  CHECK(run({"params", "--bounds", "-10,30"}).code == 2);
  CHECK(run({"params", "--russia", "--solver", "newton"}).code == 2);
  CHECK(run({"params", "--russia", "--degree-length", "0"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  const auto mid = json::parse(run({"params", "--bounds", "40,70", "--solver", "midpoint", "--json"}).out);
  CHECK(mid["solver"] == "midpoint");
  CHECK(mid["z_deg"].get<double>() == doctest::Approx(4.8895321608816699).epsilon(1e-12));
}

TEST_CASE("project") {
  auto fwd = run({"project", "--russia"}, "lat,lon\n40,0\n54°4′,30\n");
  REQUIRE(fwd.code == 0);
  std::istringstream rows(fwd.out);
  std::string header, first;
  std::getline(rows, header);
  std::getline(rows, first);
  CHECK(header == "x,y");
  const double y = std::stod(first.substr(first.find(',') + 1));
  CHECK(first.starts_with("0.000000000,"));
  CHECK(std::abs(y + 55.0) <= 0.15);
  CHECK(first.substr(first.find(',') + 1).find('.') + 10 == first.size() - first.find(',') - 1);

  const auto inv = run({"project", "--russia", "--direction", "inv"}, fwd.out);
  REQUIRE(inv.code == 0);
  std::istringstream back(inv.out);
  std::getline(back, header);
  CHECK(header == "lat,lon");
  const double expected[2][2] = {{40.0, 0.0}, {54.0 + 4.0 / 60, 30.0}};
  for (const auto& e : expected) {
    std::string row;
    std::getline(back, row);
    CHECK(std::abs(std::stod(row) - e[0]) < 1e-7);
    CHECK(std::abs(std::stod(row.substr(row.find(',') + 1)) - e[1]) < 1e-7);
  }

  const auto empty = run({"project", "--russia"}, "lat,lon\n");
  CHECK(empty.code == 0);
  CHECK(empty.out == "x,y\n");

  const auto bad = run({"project", "--russia"}, "lat,lon\n40\n");
  CHECK(bad.code == 1);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(run({"project", "--russia", "--input", "/nonexistent/points.csv"}).code == 1);
  CHECK(run({"project", "--russia", "--direction", "sideways"}, "lat,lon\n").code == 2);
  CHECK(run({"project", "--russia", "--direction", "inv"}, "x,y\n0,0\n").code == 1);
}

TEST_CASE("error-table") {
  const auto table = run({"error-table", "--russia", "--step", "1", "--csv"});
  REQUIRE(table.code == 0);
  CHECK(lines(table.out) == 32);
  CHECK(table.out.find("\n40.000000000,0.009809687,") != std::string::npos);

  CHECK(lines(run({"error-table", "--bounds", "40,70", "--step", "100", "--csv"}).out) == 3);

  const auto text = run({"error-table", "--russia"});
  CHECK(text.code == 0);
  CHECK(text.out.find("# roots: 43.98") != std::string::npos);

  const auto j = json::parse(run({"error-table", "--russia", "--json"}).out);
  CHECK(j["samples"].size() == 31);
  CHECK(j["roots_deg"].size() == 2);

  CHECK(run({"error-table", "--russia", "--step", "0"}).code == 2);
}

TEST_CASE("graticule") {
  const auto dir = scratch_dir("graticule");
  const auto svg = (dir / "out.svg").string(), geo = (dir / "out.json").string();
  REQUIRE(run({"graticule", "--russia", "--lon-span", "60", "--svg", svg, "--geojson", geo}).code == 0);
  const auto svg1 = slurp(svg), geo1 = slurp(geo);
  CHECK(std::count(svg1.begin(), svg1.end(), '\n') > 10);
  std::size_t parallels = 0;
  for (auto pos = svg1.find("class=\"parallel\""); pos != std::string::npos;
       pos = svg1.find("class=\"parallel\"", pos + 1))
    ++parallels;
  CHECK(parallels == 31);

  const auto j = json::parse(geo1);
  CHECK(j["type"] == "FeatureCollection");
  for (const auto& f : j["features"])
    for (const auto& c : f["geometry"]["coordinates"]) {
      CHECK(c.size() == 2);
      CHECK(std::abs(c[0].get<double>()) <= 180.0);
      CHECK(std::abs(c[1].get<double>()) <= 90.0);
    }

  REQUIRE(run({"graticule", "--russia", "--lon-span", "60", "--svg", svg, "--geojson", geo}).code == 0);
  CHECK(slurp(svg) == svg1);
  CHECK(slurp(geo) == geo1);

  const auto projected = run({"graticule", "--russia", "--geojson", geo, "--mode", "projected"});
  CHECK(projected.code == 0);
  CHECK(json::parse(slurp(geo)).contains("projection"));

  // Relative paths land in DELISLE_OUTPUT_DIR.
  setenv("DELISLE_OUTPUT_DIR", dir.c_str(), 1);
  CHECK(run({"graticule", "--russia", "--svg", "relative.svg"}).code == 0);
  unsetenv("DELISLE_OUTPUT_DIR");
  CHECK(fs::exists(dir / "relative.svg"));

  const auto to_stdout = run({"graticule", "--parallels", "50,60", "--lon-span", "2"});
  CHECK(to_stdout.code == 0);
  CHECK(to_stdout.out.starts_with("<?xml"));

  CHECK(run({"graticule", "--russia", "--lon-span", "500"}).code == 1);
  CHECK(run({"graticule", "--russia", "--mode", "mercator"}).code == 2);
  CHECK(run({"graticule", "--russia", "--svg", (dir / "missing" / "x.svg").string()}).code == 1);
}

TEST_CASE("oracle") {
  const auto r = run({"oracle", "--russia", "--json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["relative_gap"].get<double>() <= 0.02);
  CHECK(j["sign_pattern"] == "+-+");
  CHECK(j["meets_contract"] == true);
  CHECK(r.err.empty());

  const auto thin = json::parse(run({"oracle", "--bounds", "54,55", "--json"}).out);
  CHECK(thin["oracle"]["sup_error"].get<double>() < 1e-4);

  const auto coarse = run({"oracle", "--russia", "--grid", "10"});
  CHECK(coarse.code == 0);
  CHECK(coarse.err.find("warning") != std::string::npos);

  CHECK(run({"oracle", "--bounds", "-10,20"}).code == 2);
}

TEST_CASE("config file with flag override") {
  const auto dir = scratch_dir("config");
  const auto cfg = dir / "delisle.ini";
  std::ofstream(cfg) << "bounds = \"40,70\"\nsolver = midpoint\nmiles-per-degree = 20\n";
  const auto from_file = json::parse(run({"params", "--config", cfg.string(), "--json"}).out);
  CHECK(from_file["solver"] == "midpoint");
  CHECK(from_file["miles_per_degree"].get<double>() == 20.0);
  const auto overridden =
      json::parse(run({"params", "--config", cfg.string(), "--solver", "refined", "--json"}).out);
  CHECK(overridden["solver"] == "refined");
  CHECK(run({"params", "--config", (dir / "nope.ini").string()}).code == 2);
}
