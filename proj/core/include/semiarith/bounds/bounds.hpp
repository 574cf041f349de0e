#pragma once

#include "semiarith/field/polynomial.hpp"

#include <vector>

namespace semiarith::bounds {

/// Largest eigenvalue lambda > 1 of a hyperbolic element at the identity
/// embedding, with the house of the algebraic number lambda.
struct SpectrumEntry {
  double lambda;
  double house;
  double log_lambda;

  SpectrumEntry(double lambda_, double house_);
  /// For lambda close to 1: pass lambda - 1, keeps log lambda accurate.
  static SpectrumEntry from_excess(double lambda_minus_one, double house);

 private:
  SpectrumEntry(double lambda_, double house_, double log_lambda_);
};

/// max log(house) / log(lambda) over the entries.
double spectral_stretch_lb(const std::vector<SpectrumEntry>& spec);

/// arccosh(mu / 2pi + 1)
double yamada_radius(double mu);

struct BoundsInput {
  double coarea = 0.0;
  int arithmetic_dimension = 1;
  double stretch = 1.0;
  double margulis_eps = 0.0;
  double dobrowolski_u = 0.0;

  /// Throws InvalidArgument unless every field is in range.
  void validate() const;
};

/// Upper bound for [k:Q]: 2 L R / eps_r for cocompact groups,
/// log mu + r - log(pi/3) otherwise.
double degree_bound(const BoundsInput& in, bool cocompact);

/// (U / (r L)) (log log D / log D)^3, D >= 4.
double systole_lower_bound(const BoundsInput& in, long long degree);

/// log M(p) / (r L) for the minimal polynomial p of lambda^2.
double systole_bound_pipeline(const field::IntPolynomial& p, int r, double stretch);

/// All t >= 2 with phi(t) <= 2 C' log t.  The scan stops at the first
/// T >= max(2, 32 C'^2) with sqrt(T/2) > 2 C' log T: past 32 C'^2 the
/// right side of sqrt(t/2) - 2 C' log t increases, and phi(t) >= sqrt(t/2).
std::vector<long long> elliptic_order_bound(double cprime);

/// The scan cutoff T used by elliptic_order_bound.
long long elliptic_scan_cutoff(double cprime);

}  // namespace semiarith::bounds
