#pragma once

#include <vector>

#include "condgeo/paths.hpp"
#include "condgeo/polyspace.hpp"

namespace condgeo {

struct TrackConfig {
  double residual_tol = 1e-12;
  int initial_steps = 8;
  int max_steps = 1000000;
  int newton_iters_per_node = 3;
  double shrink = 0.5;
  double grow = 1.3;

  void validate() const;
};

struct TrackReport {
  int steps = 0;
  std::vector<double> grid;       // t_0 = 0 < ... < t_k = 1
  std::vector<double> roots;      // x_i at each grid node
  std::vector<double> residuals;  // |F_{t_i}(x_i)|
  double final_root = 0.0;
  bool success = false;
};

/// x - p(x) / p'(x). Throws DerivativeZeroError when |p'(x)| < 1e-300.
double newton_step(const MonicPoly& p, double x);

/// Smale's gamma: max_{k>=2} |p^(k)(x) / (k! p'(x))|^{1/(k-1)}.
double smale_gamma(const MonicPoly& p, double x);

/// Prediction-correction tracking of a real root along a polynomial path.
/// The step from t is h = min(1 - t, radius / (gamma * |dx/dt|)), where
/// dx/dt is the implicit root velocity and gamma = smale_gamma. radius starts
/// at 1 / initial_steps, is multiplied by `shrink` on a rejected node and by
/// `grow` on an accepted one. A node is accepted when, within
/// newton_iters_per_node Newton steps from x_i, the residual drops to
/// residual_tol and the root moved less than half of 1 / gamma.
TrackReport track(const ParamPath& path, double x0, const TrackConfig& cfg = {});

/// Normalized step-count bound k / C = D^{3/2} * lc.
double step_bound(double lc_value, int space_degree);

}  // namespace condgeo
