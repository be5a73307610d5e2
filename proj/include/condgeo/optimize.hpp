#pragma once

#include <functional>
#include <span>
#include <vector>

namespace condgeo::optim {

using Objective = std::function<double(std::span<const double>)>;

struct Minimum {
  std::vector<double> x;
  double f = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
  std::vector<double> best_history;  // best objective after each iteration
};

struct NelderMeadOptions {
  int max_iters = 5000;
  double f_tol = 1e-8;
  double x_tol = 1e-8;
  double initial_step = 0.1;
  // Simplex rebuilds around the incumbent after convergence; a rebuild that
  // fails to improve the objective ends the search.
  int max_rebuilds = 3;
};

/// Nelder-Mead with dimension-adaptive coefficients. Non-finite objective
/// values are treated as +inf, so infeasible trial points are never kept.
Minimum nelder_mead(const Objective& f, std::vector<double> x0, const NelderMeadOptions& opts);

// The condition length has long flat valleys where per-iteration decrease
// is tiny far from the optimum, so there is no objective-change test.
struct BfgsOptions {
  int max_iters = 500;
  double x_tol = 1e-10;  // three consecutive steps this small end the run
  double g_tol = 1e-7;   // infinity norm of the gradient
  double fd_step = 1e-6;
};

/// Central-difference gradient. Falls back to a one-sided difference in a
/// coordinate whose forward or backward probe is not finite.
std::vector<double> fd_gradient(const Objective& f, std::span<const double> x, double fx,
                                double step, int* evaluations = nullptr);

/// Fourth-order five-point stencil gradient.
std::vector<double> fd_gradient4(const Objective& f, std::span<const double> x, double step);

/// BFGS on finite-difference gradients with Armijo backtracking. Trial
/// points with a non-finite objective are rejected by the line search.
Minimum bfgs(const Objective& f, std::vector<double> x0, const BfgsOptions& opts);

}  // namespace condgeo::optim
