#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "condgeo/bezier.hpp"
#include "condgeo/condlength.hpp"

namespace condgeo {

enum class OptimMethod { nelder_mead, quasi_newton };

struct OptimConfig {
  OptimMethod method = OptimMethod::nelder_mead;
  int max_iters = 5000;
  double f_tol = 1e-8;
  double x_tol = 1e-8;
  double fd_step = 1e-6;
  int restarts = 3;
  std::uint64_t seed = 0;
  int threads = 1;

  void validate() const;
};

struct OptimResult {
  ControlNet optimal_net;
  double fval = 0.0;
  double initial_lc = 0.0;
  int iterations = 0;
  int function_evals = 0;
  bool converged = false;
};

/// Interior control-point coordinates stacked row by row.
std::vector<double> interior_coordinates(const ControlNet& net);

/// Copy of `net` with its interior points replaced by `coords`.
ControlNet with_interior(const ControlNet& net, std::span<const double> coords);

/// Minimizes the condition length over the interior control points of net0
/// with both endpoints held fixed. Restart 0 starts from net0; restart r > 0
/// starts from net0 jittered by N(0, 0.05^2) drawn from seed + r.
OptimResult optimize_geodesic(const ControlNet& net0, const OptimConfig& ocfg = {},
                              const QuadConfig& qcfg = {});

struct PerturbationRow {
  std::string id;
  double distance = 0.0;  // Frobenius distance to the reference net
  double lc = 0.0;
  double gap = 0.0;       // |lc - lc(reference)|
};

struct NamedNet {
  std::string id;
  ControlNet net;
};

std::vector<PerturbationRow> perturbation_study(const ControlNet& reference,
                                                const std::vector<NamedNet>& nets,
                                                const QuadConfig& qcfg = {});

/// Interior points on the segment start -> end, shifted by -0.5 in the
/// constant coefficient.
ControlNet default_initial_net(const MonicPoly& start, const MonicPoly& end, int curve_degree);

struct SweepRow {
  int degree = 0;
  double fval = 0.0;
  double initial_lc = 0.0;
  int iterations = 0;
  bool converged = false;
  std::optional<ControlNet> net;
  std::string error;  // non-empty when this degree failed
};

/// Optimizes each requested curve degree in order. Degree 1 reports the
/// segment length. From the second degree on, the elevated optimum of the
/// previous degree is tried as an extra start, so results are
/// non-increasing in degree.
std::vector<SweepRow> degree_sweep(const MonicPoly& start, const MonicPoly& end,
                                   const std::vector<int>& degrees, const OptimConfig& ocfg = {},
                                   const QuadConfig& qcfg = {});

}  // namespace condgeo
