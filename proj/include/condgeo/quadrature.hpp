#pragma once

#include <functional>
#include <span>

namespace condgeo {

struct Integral {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
};

/// Globally adaptive 7/15-point Gauss-Kronrod integration of f over
/// [nodes.front(), nodes.back()]. Interior nodes are kept as panel
/// boundaries. The panel with the largest error estimate is bisected until
/// the summed estimate drops below max(abs_tol, rel_tol * |value|).
/// Panel contributions are summed in left-to-right order.
/// Throws ConvergenceError after max_subdivisions bisections.
Integral integrate_gk15(const std::function<double(double)>& f, std::span<const double> nodes,
                        double rel_tol, double abs_tol, int max_subdivisions);

}  // namespace condgeo
