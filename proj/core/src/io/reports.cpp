#include "semiarith/io/reports.hpp"

#include "semiarith/errors.hpp"
#include "semiarith/io/format.hpp"

#include <cmath>
#include <istream>
#include <sstream>

namespace semiarith::io {

namespace {

const std::string& string_at(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_string())
    throw InvalidArgument(std::string("expected a string field '") + key + "'");
  return j.at(key).get_ref<const std::string&>();
}

double real_at(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) throw InvalidArgument(std::string("expected a number '") + key + "'");
  return j.at(key).get<double>();
}

Json coefficient(const field::Integer& c) {
  if (c.fits_slong_p()) return static_cast<long long>(c.get_si());
  return c.get_str();
}

field::Integer read_coefficient(const Json& c) {
  if (c.is_number_integer()) return field::Integer(std::to_string(c.get<long long>()));
  if (c.is_string()) return field::Integer(c.get<std::string>());
  throw InvalidArgument("polynomial coefficients must be integers");
}

traces::PlaceVerdict parse_verdict(const Json& v) {
  if (v == "split") return traces::PlaceVerdict::split;
  if (v == "ramified") return traces::PlaceVerdict::ramified;
  throw InvalidArgument("unknown place verdict");
}

}  // namespace

std::string version() { return SEMIARITH_VERSION; }

Json make_report(const std::string& command, Json inputs, Json results) {
  Json out;
  out["command"] = command;
  out["version"] = version();
  out["inputs"] = std::move(inputs);
  out["results"] = std::move(results);
  return out;
}

Json to_json(const traces::HilbertSymbol& s) {
  return Json{{"a", field::to_string(s.a)}, {"b", field::to_string(s.b)}};
}

Json to_json(const traces::PlaceSplitReport& p) {
  Json places = Json::array();
  for (traces::PlaceVerdict v : p.places) places.push_back(traces::to_string(v));
  return Json{{"places", places}, {"arithmetic_dimension", p.arithmetic_dimension}};
}

Json to_json(const family::FamilyRecord& r) {
  Json poly = Json::array();
  for (const field::Integer& c : r.tau_min_poly.descending()) poly.push_back(coefficient(c));
  Json j;
  j["n"] = r.n;
  j["field"] = field_name(r.epsilon.field());
  j["epsilon"] = field::to_string(r.epsilon);
  j["lambda"] = field::to_string(r.lambda);
  j["eta"] = field::to_string(r.eta);
  j["tau"] = field::to_string(r.tau);
  j["trA"] = field::to_string(r.tr_a);
  j["trB"] = field::to_string(r.tr_b);
  j["trAB"] = field::to_string(r.tr_ab);
  j["tau_min_poly"] = poly;
  j["tau_value"] = r.tau_value;
  j["tau_minus_one"] = r.tau_minus_one;
  j["omega"] = r.omega;
  j["stretch_lb"] = r.stretch_lb;
  j["coarea"] = r.coarea;
  j["arithmetic_dimension"] = r.arithmetic_dimension;
  j["symbol"] = to_json(r.symbol);
  j["places"] = to_json(r.places)["places"];
  j["witness"] = r.witness_ok;
  return j;
}

family::FamilyRecord family_record_from_json(const Json& j) {
  try {
    const field::QuadField k = parse_field_name(string_at(j, "field"));
    auto tower = [&](const char* key) { return field::parse_tower(string_at(j, key), k); };
    std::vector<field::Integer> desc;
    for (const Json& c : j.at("tau_min_poly")) desc.push_back(read_coefficient(c));
    if (desc.empty()) throw InvalidArgument("empty tau_min_poly");
    traces::PlaceSplitReport places;
    for (const Json& v : j.at("places")) places.places.push_back(parse_verdict(v));
    places.arithmetic_dimension = j.at("arithmetic_dimension").get<int>();
    const Json& sym = j.at("symbol");
    return family::FamilyRecord{
        j.at("n").get<int>(),
        field::parse_quad(string_at(j, "epsilon"), k),
        tower("lambda"),
        tower("eta"),
        tower("tau"),
        tower("trA"),
        tower("trB"),
        tower("trAB"),
        field::IntPolynomial(std::vector<field::Integer>(desc.rbegin(), desc.rend())),
        real_at(j, "tau_value"),
        real_at(j, "tau_minus_one"),
        real_at(j, "omega"),
        real_at(j, "stretch_lb"),
        real_at(j, "coarea"),
        places.arithmetic_dimension,
        traces::HilbertSymbol(field::parse_quad(string_at(sym, "a"), k), field::parse_quad(string_at(sym, "b"), k)),
        places,
        j.at("witness").get<bool>(),
    };
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed family record: ") + e.what());
  }
}

std::string family_csv(const std::vector<family::FamilyRecord>& records) {
  std::ostringstream out;
  out << "n,epsilon,trA,trB,tau,omega,stretch_lb,coarea,adim,witness\n";
  for (const family::FamilyRecord& r : records) {
    out << r.n << ',' << field::to_string(r.epsilon) << ',' << field::to_string(r.tr_a) << ','
        << field::to_string(r.tr_b) << ',' << field::to_string(r.tau) << ',' << format_real(r.omega) << ','
        << format_real(r.stretch_lb) << ',' << format_real(r.coarea) << ',' << r.arithmetic_dimension << ','
        << (r.witness_ok ? "true" : "false") << '\n';
  }
  return out.str();
}

TraceInput parse_trace_input(const Json& j) {
  try {
    const field::QuadField k = parse_field_name(string_at(j, "field"));
    auto tower = [&](const char* key) { return field::parse_tower(string_at(j, key), k); };
    TraceInput in{traces::TraceData(tower("trA"), tower("trB"), tower("trAB"),
                                    field::parse_quad(string_at(j, "trComm"), k)),
                  {},
                  std::nullopt};
    if (j.contains("hints")) {
      for (const Json& h : j.at("hints")) {
        if (!h.is_string()) throw InvalidArgument("hints must be strings");
        in.hints.push_back(field::parse_quad(h.get<std::string>(), k));
      }
    }
    if (j.contains("witness")) {
      const Json& w = j.at("witness");
      in.witness = std::make_pair(field::parse_quad(string_at(w, "x"), k), field::parse_quad(string_at(w, "y"), k));
    }
    return in;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed trace data: ") + e.what());
  }
}

Json invariants_results(const TraceInput& in, int word_depth) {
  const traces::TraceField tf = traces::invariant_trace_field(in.data);
  const traces::HilbertSymbol raw = traces::invariant_quaternion_symbol(in.data);
  std::vector<field::QuadElem> hints = traces::trace_hints(in.data);
  hints.insert(hints.end(), in.hints.begin(), in.hints.end());
  const traces::HilbertSymbol reduced = traces::square_class_reduce(raw, hints);
  const traces::PlaceSplitReport places = traces::real_place_splitting(reduced);
  const traces::SemiArithmeticResult semi = traces::semi_arithmetic_check(in.data, word_depth);

  Json out;
  out["field"] = field_name(tf.field);
  out["field_certificate"] = tf.certificate ? Json(tf.certificate_name) : Json(nullptr);
  out["symbol"] = to_json(raw);
  out["reduced_symbol"] = to_json(reduced);
  out["places"] = to_json(places)["places"];
  out["arithmetic_dimension"] = places.arithmetic_dimension;
  if (in.witness) {
    const bool ok = traces::verify_split_witness(reduced, in.witness->first, in.witness->second);
    out["witness"] = ok;
    out["global_splitting"] = ok ? "split" : "unknown";
  } else {
    out["witness"] = nullptr;
    out["global_splitting"] = "unknown";
  }
  Json s;
  s["passed"] = semi.passed;
  s["word_depth"] = word_depth;
  s["words_checked"] = semi.words_checked;
  s["failing_word"] = semi.failing_word.empty() ? Json(nullptr) : Json(semi.failing_word);
  s["reason"] = semi.reason;
  out["semi_arithmetic"] = s;
  return out;
}

hyperbolic::MassDistribution parse_point_file(std::istream& in) {
  std::vector<hyperbolic::HPoint> points;
  std::vector<double> weights;
  int weighted = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = line.substr(0, line.find('#'));
    std::istringstream fields(line);
    std::vector<double> vals;
    std::string tok;
    while (fields >> tok) vals.push_back(parse_real(tok));
    if (vals.empty()) continue;
    if (vals.size() < 2 || vals.size() > 3)
      throw InvalidArgument("line " + std::to_string(line_no) + ": expected 'x y' or 'x y w'");
    const int has_w = vals.size() == 3 ? 1 : 0;
    if (weighted >= 0 && weighted != has_w)
      throw InvalidArgument("line " + std::to_string(line_no) + ": give a weight on every line or on none");
    weighted = has_w;
    points.emplace_back(vals[0], vals[1]);
    weights.push_back(has_w ? vals[2] : 1.0);
  }
  if (points.empty()) throw InvalidArgument("point file has no points");
  double total = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) throw InvalidArgument("weights must be positive");
    total += w;
  }
  for (double& w : weights) w /= total;
  return hyperbolic::MassDistribution(std::move(points), std::move(weights));
}

Json to_json(const hyperbolic::HPoint& p) { return Json{{"x", p.x}, {"y", p.y}}; }

Json trirectangle_results(const hyperbolic::Trirectangle& tri) {
  const hyperbolic::GroupRealization g = hyperbolic::realize_group(tri);
  Json out;
  out["x"] = tri.x;
  out["phi"] = tri.phi;
  out["y"] = tri.y;
  out["z"] = tri.z;
  out["residual_sinh"] = std::abs(std::sinh(tri.x) * std::sinh(tri.y) - std::cos(tri.phi));
  out["residual_cosh"] = std::abs(std::cosh(tri.x) * std::cosh(tri.y) - std::cosh(tri.z));
  out["vertices"] = Json{{"O", to_json(g.vertices.O)},
                         {"P", to_json(g.vertices.P)},
                         {"Q", to_json(g.vertices.Q)},
                         {"R", to_json(g.vertices.R)}};
  Json disp = Json::array();
  for (const hyperbolic::DisplacementMatch& m : hyperbolic::match_displacements(g, tri))
    disp.push_back(Json{{"element", m.element},
                        {"translation_length", m.length},
                        {"matches", std::string("2") + m.side},
                        {"error", m.error}});
  out["displacements"] = disp;
  out["relation_residual"] = g.residual;
  return out;
}

}  // namespace semiarith::io
