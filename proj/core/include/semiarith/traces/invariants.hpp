#pragma once

#include "semiarith/field/quad_field.hpp"
#include "semiarith/field/tower.hpp"

#include <optional>
#include <string>
#include <vector>

namespace semiarith::traces {

using field::QuadElem;
using field::QuadField;
using field::TowerElem;

/// Traces of a two-generator group: tr A, tr B, tr AB and tr [A,B].
class TraceData {
 public:
  /// Throws InvalidArgument unless
  /// tr[A,B] = trA^2 + trB^2 + trAB^2 - trA trB trAB - 2 holds exactly.
  TraceData(TowerElem tr_a, TowerElem tr_b, TowerElem tr_ab, QuadElem tr_comm);

  const TowerElem& tr_a() const { return tr_a_; }
  const TowerElem& tr_b() const { return tr_b_; }
  const TowerElem& tr_ab() const { return tr_ab_; }
  const QuadElem& tr_comm() const { return tr_comm_; }
  const QuadField& base() const { return tr_comm_.field(); }

  /// tr A^2, tr B^2 and tr A tr B tr AB, which must lie in the base field.
  QuadElem tr_a_sq() const;
  QuadElem tr_b_sq() const;
  QuadElem triple_product() const;

 private:
  TowerElem tr_a_, tr_b_, tr_ab_;
  QuadElem tr_comm_;
  QuadElem a_sq_, b_sq_, triple_;
};

/// Applies the Galois automorphism of the base field to every entry.
TraceData galois_conj(const TraceData& t);

struct TraceField {
  QuadField field;
  /// Irrational generator certifying field = Q(sqrt d); empty for Q.
  std::optional<QuadElem> certificate;
  /// Which of trA^2, trB^2, trA trB trAB the certificate is.
  std::string certificate_name;
};

TraceField invariant_trace_field(const TraceData& t);

/// Quaternion algebra (a, b) over a field.
struct HilbertSymbol {
  QuadElem a;
  QuadElem b;

  HilbertSymbol(QuadElem a_, QuadElem b_);
  const QuadField& field() const { return a.field(); }
  friend bool operator==(const HilbertSymbol&, const HilbertSymbol&) = default;
};

/// (trA^2 (trA^2 - 4), trA^2 trB^2 (tr[A,B] - 2)).  Throws DegenerateTraces
/// when trA^2 = 4 or tr[A,B] = 2.
HilbertSymbol invariant_quaternion_symbol(const TraceData& t);

/// Strips square factors: denominators are cleared, rational entries are
/// reduced to their squarefree part, then entries are divided by h^2 or h^-2 for hints h
/// (and sqrt d) while that keeps them integral and lowers the height
/// |a| + |b| (ties broken towards the larger value at embedding 0).
HilbertSymbol square_class_reduce(const HilbertSymbol& s, const std::vector<QuadElem>& hints = {});

/// The automatic hints for a trace triple: trA^2, trB^2, trA trB trAB and
/// tr[A,B] - 2 (nonzero ones).
std::vector<QuadElem> trace_hints(const TraceData& t);

enum class PlaceVerdict { split, ramified };

struct PlaceSplitReport {
  std::vector<PlaceVerdict> places;  ///< indexed by real embedding of the field
  int arithmetic_dimension = 0;
  friend bool operator==(const PlaceSplitReport&, const PlaceSplitReport&) = default;
};

/// Split at sigma iff sigma(a) > 0 or sigma(b) > 0.
PlaceSplitReport real_place_splitting(const HilbertSymbol& s);

/// Exact check of a x^2 + b y^2 = 1.
bool verify_split_witness(const HilbertSymbol& s, const QuadElem& x, const QuadElem& y);

enum class GlobalSplit { split, unknown };

/// split when the witness certifies it, unknown otherwise.
GlobalSplit global_splitting(const HilbertSymbol& s, const QuadElem& x, const QuadElem& y);

struct SemiArithmeticResult {
  bool passed = false;
  int words_checked = 0;
  /// First word whose trace is not an algebraic integer.
  std::string failing_word;
  std::string reason;
};

/// Totally real base field, integral generator traces and integral traces
/// of every word up to the given depth.
SemiArithmeticResult semi_arithmetic_check(const TraceData& t, int word_depth);

std::string to_string(PlaceVerdict v);
std::string to_string(const HilbertSymbol& s);

}  // namespace semiarith::traces
