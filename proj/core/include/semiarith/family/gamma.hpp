#pragma once

#include "semiarith/field/polynomial.hpp"
#include "semiarith/field/quad_field.hpp"
#include "semiarith/field/tower.hpp"
#include "semiarith/traces/invariants.hpp"

#include <vector>

namespace semiarith::family {

using field::IntPolynomial;
using field::QuadElem;
using field::TowerElem;

/// Exact and numeric data of the n-th group of the family over Q(sqrt 3),
/// built from eps = (2 + sqrt 3)^n.
struct FamilyRecord {
  int n;
  QuadElem epsilon;
  TowerElem lambda;  ///< (eps + sqrt(4 + eps^2)) / 2
  TowerElem eta;     ///< 1/eps + sqrt(1 + 1/eps^2)
  TowerElem tau;     ///< eta^2
  TowerElem tr_a, tr_b, tr_ab;
  IntPolynomial tau_min_poly;
  double tau_value;         ///< tau at the identity embedding
  double tau_minus_one;     ///< tau - 1, accurate for large n
  double omega;             ///< house of tau
  double stretch_lb;        ///< log omega / log tau
  double coarea;
  int arithmetic_dimension;
  traces::HilbertSymbol symbol;  ///< square-class reduced
  traces::PlaceSplitReport places;
  bool witness_ok;
  friend bool operator==(const FamilyRecord&, const FamilyRecord&) = default;
};

inline constexpr int kMaxExactN = 30;
// Beyond this the BA displacement (about 2/eps) is below double rounding of
// matrix entries of size eps.
inline constexpr int kMaxRealizeN = 5;

/// Builds the record for 1 <= n <= 30; every exact identity is checked and a
/// failure raises VerificationFailure.
FamilyRecord build_gamma(int n);

/// The trace data tr A, tr B, tr AB, tr[A,B] = 1 of the n-th group.
traces::TraceData family_traces(int n);

/// 2 pi (2g - 2 + cusps + sum (1 - 1/m_i)); throws unless positive.
double coarea_from_signature(int genus, const std::vector<int>& orders, int cusps);

struct StretchTable {
  std::vector<FamilyRecord> records;
  double growth_ratio;  ///< stretch_lb(n_max) / stretch_lb(1)
};

/// Records for n = 1..n_max (n_max >= 2); checks strict growth of stretch_lb.
StretchTable stretch_divergence_table(int n_max);

struct Crosscheck {
  int n;
  double x, y, z;
  double tr_a_numeric, tr_a_exact;
  double tr_b_numeric, tr_b_exact;
  double tr_ab_numeric, tr_ab_exact;
  double length_a, length_b, length_ba;
  double relation_residual;
  double worst_error;  ///< max of |numeric - exact| / (1 + |exact|)
};

/// Realizes the n-th group from its trirectangle (x = arcsinh(eps/2),
/// phi = pi/3) and compares traces and translation lengths with the exact
/// values; throws VerificationFailure beyond 1e-8.  1 <= n <= kMaxRealizeN.
Crosscheck realize_and_crosscheck(int n);

}  // namespace semiarith::family
