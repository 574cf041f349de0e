#include "semiarith/hyperbolic/karcher.hpp"

#include "semiarith/errors.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace semiarith::hyperbolic {

MassDistribution::MassDistribution(std::vector<HPoint> points, std::vector<double> weights)
    : points_(std::move(points)), weights_(std::move(weights)) {
  if (points_.empty()) throw InvalidArgument("empty mass distribution");
  if (points_.size() != weights_.size()) throw InvalidArgument("points and weights differ in length");
  for (double w : weights_)
    if (!(w > 0.0) || !std::isfinite(w)) throw InvalidArgument("weights must be positive");
  const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-9) throw InvalidArgument("weights must sum to 1");
  for (double& w : weights_) w /= total;
}

MassDistribution MassDistribution::uniform(std::vector<HPoint> points) {
  std::vector<double> w(points.size(), points.empty() ? 0.0 : 1.0 / static_cast<double>(points.size()));
  return MassDistribution(std::move(points), std::move(w));
}

MassDistribution MassDistribution::transformed(const Isometry2& g) const {
  std::vector<HPoint> moved;
  moved.reserve(points_.size());
  for (const HPoint& p : points_) moved.push_back(g(p));
  return MassDistribution(std::move(moved), weights_);
}

double karcher_potential(const MassDistribution& m, const HPoint& x) {
  double total = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double d = dist(x, m.points()[i]);
    total += m.weights()[i] * d * d;
  }
  return total / 2.0;
}

Tangent karcher_gradient(const MassDistribution& m, const HPoint& x) {
  Tangent g = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) g += m.weights()[i] * log_map(x, m.points()[i]);
  return g;
}

HPoint karcher_mean(const MassDistribution& m, const KarcherOptions& opts) {
  if (!(opts.tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  if (m.size() == 1) return m.points().front();
  // Start from the heaviest point.
  std::size_t start = 0;
  for (std::size_t i = 1; i < m.size(); ++i)
    if (m.weights()[i] > m.weights()[start]) start = i;
  HPoint x = m.points()[start];
  double norm = 0.0;
  for (int it = 0; it < opts.max_iterations; ++it) {
    Tangent g = 0.0;
    double curvature = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const Tangent v = log_map(x, m.points()[i]);
      const double d = tangent_norm(x, v);
      g += m.weights()[i] * v;
      curvature += m.weights()[i] * (d < 1e-8 ? 1.0 : d / std::tanh(d));
    }
    norm = tangent_norm(x, g);
    if (norm < opts.tol) return x;
    // Step 1 / sup of the Hessian of the potential near x; 1 for clustered mass.
    x = exp_map(x, g / std::max(1.0, curvature));
  }
  throw ConvergenceFailure("Karcher iteration did not converge in " + std::to_string(opts.max_iterations) +
                               " steps; gradient norm " + std::to_string(norm),
                           norm);
}

ProductPoint product_karcher_mean(const std::vector<ProductPoint>& points, const std::vector<double>& weights,
                                  const KarcherOptions& opts) {
  if (points.empty()) throw InvalidArgument("empty mass distribution");
  const int r = points.front().rank();
  ProductPoint out;
  for (int k = 0; k < r; ++k) {
    std::vector<HPoint> factor;
    for (const ProductPoint& p : points) {
      if (p.rank() != r) throw InvalidArgument("product points of different rank");
      factor.push_back(p.factors[static_cast<std::size_t>(k)]);
    }
    out.factors.push_back(karcher_mean(MassDistribution(std::move(factor), weights), opts));
  }
  return out;
}

std::vector<std::pair<HPoint, HPoint>> average_maps(const std::vector<MapSample>& samples,
                                                    const KarcherOptions& opts) {
  std::vector<std::pair<HPoint, HPoint>> out;
  out.reserve(samples.size());
  const std::size_t n = samples.empty() ? 0 : samples.front().images.size();
  for (const MapSample& s : samples) {
    if (s.images.size() != n || n == 0) throw InvalidArgument("image lists must share a positive length");
    out.emplace_back(s.source, karcher_mean(MassDistribution::uniform(s.images), opts));
  }
  return out;
}

}  // namespace semiarith::hyperbolic
