#include "semiarith/bounds/bounds.hpp"

#include "semiarith/errors.hpp"
#include "semiarith/field/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace semiarith::bounds {

SpectrumEntry::SpectrumEntry(double lambda_, double house_, double log_lambda_)
    : lambda(lambda_), house(house_), log_lambda(log_lambda_) {
  if (!(log_lambda_ > 0.0)) throw InvalidArgument("spectrum entry needs lambda > 1");
  if (!(house_ >= lambda_ * (1 - 1e-12))) throw InvalidArgument("house must be at least lambda");
}

SpectrumEntry::SpectrumEntry(double lambda_, double house_) : SpectrumEntry(lambda_, house_, std::log(lambda_)) {}

SpectrumEntry SpectrumEntry::from_excess(double lambda_minus_one, double house) {
  return SpectrumEntry(1.0 + lambda_minus_one, house, std::log1p(lambda_minus_one));
}

double spectral_stretch_lb(const std::vector<SpectrumEntry>& spec) {
  if (spec.empty()) throw InvalidArgument("empty spectrum");
  double best = 0.0;
  for (const SpectrumEntry& e : spec) best = std::max(best, std::log(e.house) / e.log_lambda);
  return best;
}

double yamada_radius(double mu) {
  if (!(mu > 0.0)) throw InvalidArgument("coarea must be positive");
  return std::acosh(mu / (2 * M_PI) + 1.0);
}

void BoundsInput::validate() const {
  if (!(coarea > 0.0)) throw InvalidArgument("coarea must be positive");
  if (arithmetic_dimension < 1) throw InvalidArgument("arithmetic dimension must be at least 1");
  if (!(stretch >= 1.0)) throw InvalidArgument("stretch bound L must be at least 1");
  if (!(margulis_eps > 0.0)) throw InvalidArgument("margulis_eps must be positive");
  if (!(dobrowolski_u > 0.0)) throw InvalidArgument("dobrowolski_U must be positive");
}

double degree_bound(const BoundsInput& in, bool cocompact) {
  in.validate();
  if (cocompact) return 2.0 * in.stretch * yamada_radius(in.coarea) / in.margulis_eps;
  return std::log(in.coarea) + in.arithmetic_dimension - std::log(M_PI / 3.0);
}

double systole_lower_bound(const BoundsInput& in, long long degree) {
  in.validate();
  if (degree < 4) throw InvalidArgument("systole bound needs D >= 4");
  const double d = static_cast<double>(degree);
  const double ratio = std::log(std::log(d)) / std::log(d);
  return in.dobrowolski_u / (in.arithmetic_dimension * in.stretch) * ratio * ratio * ratio;
}

double systole_bound_pipeline(const field::IntPolynomial& p, int r, double stretch) {
  if (r < 1) throw InvalidArgument("arithmetic dimension must be at least 1");
  if (!(stretch >= 1.0)) throw InvalidArgument("stretch bound L must be at least 1");
  return std::log(field::mahler_measure(p)) / (r * stretch);
}

long long elliptic_scan_cutoff(double cprime) {
  if (!(cprime > 0.0)) throw InvalidArgument("Cprime must be positive");
  long long t = std::max<long long>(2, static_cast<long long>(std::ceil(32.0 * cprime * cprime)));
  while (!(std::sqrt(t / 2.0) > 2.0 * cprime * std::log(static_cast<double>(t)))) ++t;
  return t;
}

std::vector<long long> elliptic_order_bound(double cprime) {
  const long long cutoff = elliptic_scan_cutoff(cprime);
  // Totient sieve below the cutoff.
  std::vector<long long> phi(static_cast<std::size_t>(cutoff));
  std::iota(phi.begin(), phi.end(), 0);
  for (long long p = 2; p < cutoff; ++p) {
    if (phi[static_cast<std::size_t>(p)] != p) continue;
    for (long long m = p; m < cutoff; m += p) phi[static_cast<std::size_t>(m)] -= phi[static_cast<std::size_t>(m)] / p;
  }
  std::vector<long long> out;
  for (long long t = 2; t < cutoff; ++t)
    if (static_cast<double>(phi[static_cast<std::size_t>(t)]) <= 2.0 * cprime * std::log(static_cast<double>(t)))
      out.push_back(t);
  return out;
}

}  // namespace semiarith::bounds
