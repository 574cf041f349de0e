#pragma once

#include "semiarith/hyperbolic/hpoint.hpp"
#include "semiarith/hyperbolic/isometry.hpp"

#include <utility>
#include <vector>

namespace semiarith::hyperbolic {

/// Finitely supported probability measure on H.
class MassDistribution {
 public:
  /// Weights must be positive and sum to 1 (up to 1e-9); they are rescaled
  /// to sum to 1 exactly in floating point.
  MassDistribution(std::vector<HPoint> points, std::vector<double> weights);
  static MassDistribution uniform(std::vector<HPoint> points);

  const std::vector<HPoint>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return points_.size(); }

  MassDistribution transformed(const Isometry2& g) const;

 private:
  std::vector<HPoint> points_;
  std::vector<double> weights_;
};

/// P(x) = 1/2 sum w_i d(x, p_i)^2
double karcher_potential(const MassDistribution& m, const HPoint& x);

/// sum w_i log_x(p_i), the negative Riemannian gradient of the potential.
Tangent karcher_gradient(const MassDistribution& m, const HPoint& x);

struct KarcherOptions {
  double tol = 1e-12;
  int max_iterations = 10000;
};

/// Center of mass by gradient flow x <- exp_x(t * gradient), with t the inverse
/// of the local bound sum w_i d_i coth(d_i) on the Hessian of the potential.
/// Throws ConvergenceFailure after max_iterations.
HPoint karcher_mean(const MassDistribution& m, const KarcherOptions& opts = {});

/// Componentwise center of mass of points of H^r.
ProductPoint product_karcher_mean(const std::vector<ProductPoint>& points, const std::vector<double>& weights,
                                  const KarcherOptions& opts = {});

struct MapSample {
  HPoint source;
  std::vector<HPoint> images;
};

/// For each source point, the uniform center of mass of its images.
std::vector<std::pair<HPoint, HPoint>> average_maps(const std::vector<MapSample>& samples,
                                                    const KarcherOptions& opts = {});

}  // namespace semiarith::hyperbolic
