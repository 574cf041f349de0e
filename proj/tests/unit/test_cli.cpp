#include "doctest.h"

#include "json.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SEMIARITH_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string data(const std::string& name) { return std::string(SEMIARITH_TEST_DATA) + "/" + name; }

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

nlohmann::json results(const Run& r) { return nlohmann::json::parse(r.out)["results"]; }

}  // namespace

TEST_CASE("family csv matches the oracle") {
  const Run r = run("family --n-max 3 --format csv");
  REQUIRE(r.status == 0);
  std::istringstream got(r.out);
  std::ifstream want(data("family_n3_oracle.csv"));
  std::string g, w;
  std::getline(got, g);
  std::getline(want, w);
  CHECK(g == "n,epsilon,trA,trB,tau,omega,stretch_lb,coarea,adim,witness");
  int rows = 0;
  while (std::getline(got, g) && std::getline(want, w)) {
    const auto gc = split(g), wc = split(w);
    REQUIRE(gc.size() == 10);
    CHECK(gc[0] == wc[0]);
    CHECK(std::abs(std::stod(gc[5]) - std::stod(wc[2])) < 1e-12 * std::stod(wc[2]));
    CHECK(std::abs(std::stod(gc[6]) - std::stod(wc[3])) < 1e-12 * std::stod(wc[3]));
    CHECK(gc[8] == "2");
    CHECK(gc[9] == "true");
    ++rows;
  }
  CHECK(rows == 3);
}

TEST_CASE("family json and argument errors") {
  const Run r = run("family --n-max 1 --format json");
  REQUIRE(r.status == 0);
  const auto rec = results(r)["records"][0];
  CHECK(rec["tau_min_poly"] == nlohmann::json::parse("[1,-60,134,-60,1]"));
  CHECK(run("family --n-max 0").status == 2);
  CHECK(run("family --n-max 31").status == 2);
  CHECK(run("family --format xml").status == 2);
  CHECK(run("nonsense").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("--help").status == 0);
}

TEST_CASE("invariants") {
  const Run fam = run("invariants " + data("family_n1_traces.json"));
  REQUIRE(fam.status == 0);
  const auto j = results(fam);
  CHECK(j["field"] == "Q(sqrt 3)");
  CHECK(j["arithmetic_dimension"] == 2);
  CHECK(j["witness"] == true);
  CHECK(j["reduced_symbol"]["a"] == "11 + 4 * sqrt(3)");
  CHECK(j["semi_arithmetic"]["passed"] == true);

  const Run ram = run("invariants " + data("ramified_conjugate.json"));
  REQUIRE(ram.status == 0);
  CHECK(results(ram)["arithmetic_dimension"] == 1);

  CHECK(run("invariants " + data("degenerate.json")).status == 3);
  CHECK(run("invariants " + data("malformed.json")).status == 2);
  CHECK(run("invariants " + data("missing.json")).status == 2);
}

TEST_CASE("karcher") {
  const Run one = run("karcher " + data("single_point.txt"));
  REQUIRE(one.status == 0);
  CHECK(results(one)["mean"]["x"] == 0.5);
  CHECK(results(one)["mean"]["y"] == 2.0);

  const Run two = run("karcher " + data("two_points.txt"));
  REQUIRE(two.status == 0);
  CHECK(std::abs(results(two)["mean"]["y"].get<double>() - 2.0) < 1e-10);

  const Run many = run("karcher " + data("random_100.txt") + " --tol 1e-12");
  REQUIRE(many.status == 0);
  CHECK(results(many)["gradient_norm"].get<double>() < 1e-12);
  CHECK(results(many)["points"] == 100);

  CHECK(run("karcher " + data("random_100.txt") + " --tol 1e-15 --max-iterations 1").status == 4);
  CHECK(run("karcher " + data("malformed.json")).status == 2);
}

TEST_CASE("bounds") {
  const Run nc = run("bounds --noncocompact --mu 1.0471975511965976 --r 2");
  REQUIRE(nc.status == 0);
  CHECK(results(nc)["degree_bound"] == 2.0);
  CHECK(run("bounds --mu 1 --r 2 --L 2").status == 2);
  CHECK(run("bounds --U 1 --D 10 --r 1").status == 2);
  CHECK(run("bounds").status == 2);
  CHECK(run("bounds --mu -1 --r 2 --noncocompact").status == 2);

  const Run el = run("bounds --elliptic-cprime 1");
  REQUIRE(el.status == 0);
  CHECK(results(el)["elliptic_orders"] == nlohmann::json::parse("[2,3,4,6,8,10,12]"));

  const Run all = run("bounds --mu 1 --r 2 --L 1.5 --epsr 0.5 --U 0.25 --D 8 --cprime 0.5");
  REQUIRE(all.status == 0);
  const auto j = results(all);
  CHECK(j.contains("degree_bound"));
  CHECK(j.contains("yamada_radius"));
  CHECK(j.contains("systole_lower_bound"));
  CHECK(j.contains("elliptic_orders"));
}

TEST_CASE("trirectangle") {
  const Run r = run("trirectangle --x 1 --angle 1.0471975511965976");
  REQUIRE(r.status == 0);
  const auto j = results(r);
  CHECK(std::abs(j["y"].get<double>() - 0.41356845081927838832) < 1e-12);
  CHECK(j["vertices"]["Q"]["y"] == 1.0);
  CHECK(j["displacements"][0]["matches"] == "2x");
  CHECK(j["displacements"][1]["matches"] == "2z");
  CHECK(j["displacements"][2]["matches"] == "2y");
  CHECK(run("trirectangle --x 1 --angle 2").status == 2);
  CHECK(run("trirectangle --x -1 --angle 1").status == 2);
}
