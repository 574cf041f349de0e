// semiarith: invariants, bounds and the trirectangle family from the command line.
//
// Exit codes: 0 ok, 1 verification failure, 2 invalid arguments or parse
// error, 3 degenerate traces, 4 Karcher iteration cap exceeded.

#include "CLI11.hpp"
#include "semiarith/bounds/bounds.hpp"
#include "semiarith/errors.hpp"
#include "semiarith/family/gamma.hpp"
#include "semiarith/hyperbolic/karcher.hpp"
#include "semiarith/hyperbolic/trirectangle.hpp"
#include "semiarith/io/format.hpp"
#include "semiarith/io/reports.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using semiarith::io::Json;

enum Exit { ok = 0, verification = 1, invalid = 2, degenerate = 3, no_convergence = 4 };

void emit(const Json& report) { std::cout << report.dump(2) << '\n'; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw semiarith::InvalidArgument("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw semiarith::InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
  }
}

struct FamilyArgs {
  int n_max = 8;
  std::string format = "csv";
};

void run_family(const FamilyArgs& a) {
  namespace fam = semiarith::family;
  if (a.n_max < 1 || a.n_max > fam::kMaxExactN) throw semiarith::InvalidArgument("--n-max must be in 1..30");
  std::vector<fam::FamilyRecord> records;
  std::optional<double> growth;
  if (a.n_max == 1) {
    records.push_back(fam::build_gamma(1));
  } else {
    fam::StretchTable t = fam::stretch_divergence_table(a.n_max);
    records = std::move(t.records);
    growth = t.growth_ratio;
  }
  if (a.format == "csv") {
    std::cout << semiarith::io::family_csv(records);
    return;
  }
  Json recs = Json::array();
  for (const fam::FamilyRecord& r : records) recs.push_back(semiarith::io::to_json(r));
  Json results{{"records", recs}, {"growth_ratio", growth ? Json(*growth) : Json(nullptr)}};
  emit(semiarith::io::make_report("family", Json{{"n_max", a.n_max}, {"format", a.format}}, results));
}

struct InvariantsArgs {
  std::string path;
  int depth = 4;
};

void run_invariants(const InvariantsArgs& a) {
  if (a.depth < 1 || a.depth > 10) throw semiarith::InvalidArgument("--depth must be in 1..10");
  const semiarith::io::TraceInput in = semiarith::io::parse_trace_input(read_json_file(a.path));
  emit(semiarith::io::make_report("invariants", Json{{"traces_file", a.path}, {"depth", a.depth}},
                                  semiarith::io::invariants_results(in, a.depth)));
}

struct KarcherArgs {
  std::string path;
  double tol = 1e-12;
  int max_iterations = 10000;
};

void run_karcher(const KarcherArgs& a) {
  namespace hy = semiarith::hyperbolic;
  std::ifstream file(a.path);
  if (!file) throw semiarith::InvalidArgument("cannot open '" + a.path + "'");
  const hy::MassDistribution m = semiarith::io::parse_point_file(file);
  if (a.max_iterations < 1) throw semiarith::InvalidArgument("--max-iterations must be positive");
  const hy::HPoint mean = hy::karcher_mean(m, hy::KarcherOptions{a.tol, a.max_iterations});
  Json results;
  results["points"] = m.size();
  results["mean"] = semiarith::io::to_json(mean);
  results["gradient_norm"] = hy::tangent_norm(mean, hy::karcher_gradient(m, mean));
  results["potential"] = hy::karcher_potential(m, mean);
  emit(semiarith::io::make_report(
      "karcher", Json{{"points_file", a.path}, {"tol", a.tol}, {"max_iterations", a.max_iterations}}, results));
}

struct BoundsArgs {
  std::optional<double> mu, L, epsr, U, cprime;
  std::optional<int> r;
  std::optional<long long> D;
  bool noncocompact = false;
};

void run_bounds(const BoundsArgs& a) {
  namespace b = semiarith::bounds;
  using semiarith::InvalidArgument;
  Json inputs, results;
  auto need = [](bool present, const char* flag, const char* why) {
    if (!present) throw InvalidArgument(std::string("missing ") + flag + " (needed " + why + ")");
  };
  // Fields a bound does not read are set to 1 so that validation passes.
  b::BoundsInput in{1.0, 1, 1.0, 1.0, 1.0};
  if (a.r) in.arithmetic_dimension = *a.r;
  if (a.L) in.stretch = *a.L;
  bool any = false;

  if (a.mu) {
    need(a.r.has_value(), "--r", "for the degree bound");
    in.coarea = *a.mu;
    inputs["mu"] = *a.mu;
    inputs["r"] = *a.r;
    inputs["noncocompact"] = a.noncocompact;
    if (!a.noncocompact) {
      need(a.L.has_value(), "--L", "for the cocompact degree bound");
      need(a.epsr.has_value(), "--epsr", "for the cocompact degree bound");
      in.margulis_eps = *a.epsr;
      inputs["L"] = *a.L;
      inputs["epsr"] = *a.epsr;
      results["yamada_radius"] = b::yamada_radius(*a.mu);
    }
    results["degree_bound"] = b::degree_bound(in, !a.noncocompact);
    any = true;
  } else if (a.noncocompact || a.epsr) {
    throw InvalidArgument("the degree bound needs --mu");
  }

  if (a.U || a.D) {
    need(a.U.has_value(), "--U", "for the systole bound");
    need(a.D.has_value(), "--D", "for the systole bound");
    need(a.r.has_value(), "--r", "for the systole bound");
    need(a.L.has_value(), "--L", "for the systole bound");
    in.dobrowolski_u = *a.U;
    inputs["r"] = *a.r;
    inputs["L"] = *a.L;
    inputs["U"] = *a.U;
    inputs["D"] = *a.D;
    results["systole_lower_bound"] = b::systole_lower_bound(in, *a.D);
    any = true;
  }

  if (a.cprime) {
    inputs["elliptic_cprime"] = *a.cprime;
    results["elliptic_orders"] = b::elliptic_order_bound(*a.cprime);
    any = true;
  }
  if (!any) throw InvalidArgument("nothing to compute: give --mu, --U/--D or --elliptic-cprime");
  emit(semiarith::io::make_report("bounds", inputs, results));
}

struct TrirectangleArgs {
  double x = 0.0;
  double angle = 0.0;
};

void run_trirectangle(const TrirectangleArgs& a) {
  const semiarith::hyperbolic::Trirectangle tri = semiarith::hyperbolic::solve_trirectangle(a.x, a.angle);
  emit(semiarith::io::make_report("trirectangle", Json{{"x", a.x}, {"angle", a.angle}},
                                  semiarith::io::trirectangle_results(tri)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants and bounds for semi-arithmetic Fuchsian groups"};
  app.set_version_flag("--version", semiarith::io::version());
  app.require_subcommand(1);

  FamilyArgs fa;
  CLI::App* family = app.add_subcommand("family", "Exact data and stretch bounds of the trirectangle family");
  family->add_option("--n-max", fa.n_max, "Largest n (1..30)")->capture_default_str();
  family->add_option("--format", fa.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  InvariantsArgs ia;
  CLI::App* invariants = app.add_subcommand("invariants", "Trace field, quaternion algebra and real places");
  invariants->add_option("traces_file", ia.path, "Trace data JSON")->required();
  invariants->add_option("--depth", ia.depth, "Word length for the semi-arithmetic check")->capture_default_str();

  KarcherArgs ka;
  CLI::App* karcher = app.add_subcommand("karcher", "Center of mass of weighted points in the upper half-plane");
  karcher->add_option("points_file", ka.path, "Lines 'x y [w]'")->required();
  karcher->add_option("--tol", ka.tol, "Gradient-norm tolerance")->capture_default_str();
  karcher->add_option("--max-iterations", ka.max_iterations, "Iteration cap")->capture_default_str();

  BoundsArgs ba;
  CLI::App* bounds = app.add_subcommand("bounds", "Degree, systole and elliptic-order bounds");
  bounds->add_option("--mu", ba.mu, "Coarea");
  bounds->add_option("--r", ba.r, "Arithmetic dimension");
  bounds->add_option("--L", ba.L, "Stretch bound");
  bounds->add_option("--epsr", ba.epsr, "Margulis constant eps_r");
  bounds->add_option("--U", ba.U, "Dobrowolski constant");
  bounds->add_option("--D", ba.D, "Degree of the trace field");
  bounds->add_option("--elliptic-cprime,--cprime", ba.cprime, "Constant C' of the elliptic-order scan");
  bounds->add_flag("--noncocompact", ba.noncocompact, "Use the non-cocompact degree bound");

  TrirectangleArgs ta;
  CLI::App* trirect = app.add_subcommand("trirectangle", "Solve a trirectangle and realize its group");
  trirect->add_option("--x", ta.x, "Side x")->required();
  trirect->add_option("--angle", ta.angle, "Acute angle phi in radians")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? ok : invalid;
  }

  try {
    if (*family) run_family(fa);
    if (*invariants) run_invariants(ia);
    if (*karcher) run_karcher(ka);
    if (*bounds) run_bounds(ba);
    if (*trirect) run_trirectangle(ta);
    return ok;
  } catch (const semiarith::DegenerateTraces& e) {
    std::cerr << "semiarith: " << e.what() << '\n';
    return degenerate;
  } catch (const semiarith::ConvergenceFailure& e) {
    std::cerr << "semiarith: " << e.what() << " (gradient norm " << semiarith::io::format_real(e.residual())
              << ")\n";
    return no_convergence;
  } catch (const semiarith::VerificationFailure& e) {
    std::cerr << "semiarith: verification failed: " << e.what() << '\n';
    return verification;
  } catch (const semiarith::InvalidArgument& e) {
    std::cerr << "semiarith: " << e.what() << '\n';
    return invalid;
  } catch (const semiarith::FieldMismatch& e) {
    std::cerr << "semiarith: " << e.what() << '\n';
    return invalid;
  } catch (const semiarith::UnsupportedTower& e) {
    std::cerr << "semiarith: " << e.what() << '\n';
    return invalid;
  } catch (const semiarith::DivisionByZero& e) {
    std::cerr << "semiarith: " << e.what() << '\n';
    return invalid;
  } catch (const std::exception& e) {
    std::cerr << "semiarith: " << e.what() << '\n';
    return verification;
  }
}
