#pragma once

#include "json.hpp"
#include "semiarith/family/gamma.hpp"
#include "semiarith/hyperbolic/karcher.hpp"
#include "semiarith/hyperbolic/trirectangle.hpp"
#include "semiarith/traces/invariants.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace semiarith::io {

using Json = nlohmann::ordered_json;

std::string version();

/// {"command", "version", "inputs", "results"}
Json make_report(const std::string& command, Json inputs, Json results);

Json to_json(const family::FamilyRecord& r);
/// Inverse of to_json; exact fields are re-parsed, reals read back bit-exact.
family::FamilyRecord family_record_from_json(const Json& j);

/// Header n,epsilon,trA,trB,tau,omega,stretch_lb,coarea,adim,witness.
std::string family_csv(const std::vector<family::FamilyRecord>& records);

Json to_json(const traces::HilbertSymbol& s);
Json to_json(const traces::PlaceSplitReport& p);

/// Contents of a trace-data file:
///   {"field": "Q(sqrt 3)", "trA": ..., "trB": ..., "trAB": ..., "trComm": ...,
///    "hints": [...], "witness": {"x": ..., "y": ...}}
/// with exact element strings; hints and witness are optional.
struct TraceInput {
  traces::TraceData data;
  std::vector<field::QuadElem> hints;
  std::optional<std::pair<field::QuadElem, field::QuadElem>> witness;
};

TraceInput parse_trace_input(const Json& j);

/// Trace field, raw and reduced symbols, real places, arithmetic dimension,
/// witness check against the reduced symbol and the semi-arithmetic verdict.
Json invariants_results(const TraceInput& in, int word_depth);

/// Lines "x y" or "x y w"; '#' starts a comment.  Weights are normalized to
/// sum 1, and a file without weights gets uniform mass.
hyperbolic::MassDistribution parse_point_file(std::istream& in);

Json to_json(const hyperbolic::HPoint& p);

Json trirectangle_results(const hyperbolic::Trirectangle& tri);

}  // namespace semiarith::io
