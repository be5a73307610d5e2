#include "condgeo/tracker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "condgeo/errors.hpp"

namespace condgeo {

namespace {

constexpr double kMaxRadius = 1.0;

// Taylor coefficients p^(k)(x) / k!, k = 0..n, by repeated synthetic division.
std::vector<double> taylor_at(const MonicPoly& p, double x) {
  std::vector<double> c = p.full();
  const std::size_t n = c.size() - 1;
  std::vector<double> out(n + 1, 0.0);
  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t len = c.size() - k;
    for (std::size_t i = 1; i < len; ++i) c[i] += x * c[i - 1];
    out[k] = c[len - 1];
  }
  return out;
}

// d/dt of p_t evaluated at x, given the coefficient velocity.
double time_derivative(const CoeffVec& velocity, double x) {
  double acc = 0.0;
  for (double v : velocity) acc = acc * x + v;
  return acc;
}

}  // namespace

void TrackConfig::validate() const {
  if (!(residual_tol > 0.0)) throw InputError("TrackConfig: residual_tol must be positive");
  if (initial_steps < 1 || max_steps < 1 || newton_iters_per_node < 1)
    throw InputError("TrackConfig: step counts must be positive");
  if (!(shrink > 0.0 && shrink < 1.0 && grow > 1.0))
    throw InputError("TrackConfig: need 0 < shrink < 1 < grow");
}

double newton_step(const MonicPoly& p, double x) {
  const double dp = deriv(p)(x);
  if (!(std::abs(dp) >= 1e-300)) {
    throw DerivativeZeroError("newton_step: p'(x) vanishes at x = " + std::to_string(x));
  }
  return x - eval(p, x) / dp;
}

double smale_gamma(const MonicPoly& p, double x) {
  const auto c = taylor_at(p, x);
  const double d1 = c[1];
  if (d1 == 0.0) return std::numeric_limits<double>::infinity();
  double g = 0.0;
  for (std::size_t k = 2; k < c.size(); ++k)
    g = std::max(g, std::pow(std::abs(c[k] / d1), 1.0 / static_cast<double>(k - 1)));
  return g;
}

TrackReport track(const ParamPath& path, double x0, const TrackConfig& cfg) {
  cfg.validate();
  const MonicPoly start(path_position(path, 0.0));
  const double r0 = std::abs(eval(start, x0));
  if (!(r0 <= cfg.residual_tol)) {
    throw DomainError("track: x0 is not an approximate root of the start polynomial (residual " +
                      std::to_string(r0) + ")");
  }
  TrackReport rep;
  rep.grid.push_back(0.0);
  rep.roots.push_back(x0);
  rep.residuals.push_back(r0);

  const double min_step = 1.0 / static_cast<double>(cfg.max_steps);
  double t = 0.0;
  double x = x0;
  double radius = 1.0 / static_cast<double>(cfg.initial_steps);
  // Cap on the parameter step; only rejections make it finite.
  double h_limit = std::numeric_limits<double>::infinity();
  while (t < 1.0) {
    const MonicPoly here(path_position(path, t));
    const double dp = deriv(here)(x);
    const double xdot =
        dp == 0.0 ? std::numeric_limits<double>::infinity()
                  : -time_derivative(path_velocity(path, t), x) / dp;
    const double speed = smale_gamma(here, x) * std::abs(xdot);
    const double remaining = 1.0 - t;
    const double h =
        std::min({remaining, h_limit, speed > 0.0 ? radius / speed : remaining});
    if (h < min_step && h < remaining) {
      throw StepCollapseError("track: step collapsed at t = " + std::to_string(t) +
                              " (root lost or path too close to the discriminant)");
    }
    const double t_next = h >= remaining ? 1.0 : t + h;
    const MonicPoly next(path_position(path, t_next));

    double xn = x;
    double res = std::abs(eval(next, xn));
    for (int it = 0; it < cfg.newton_iters_per_node && res > cfg.residual_tol; ++it) {
      xn = newton_step(next, xn);
      res = std::abs(eval(next, xn));
    }
    const double g = smale_gamma(next, xn);
    const bool same_branch = g == 0.0 || std::abs(xn - x) <= 0.5 / g;
    if (std::isfinite(xn) && res <= cfg.residual_tol && same_branch) {
      t = t_next;
      x = xn;
      rep.grid.push_back(t);
      rep.roots.push_back(x);
      rep.residuals.push_back(res);
      radius = std::min(kMaxRadius, radius * cfg.grow);
      h_limit *= cfg.grow;
      if (static_cast<int>(rep.grid.size()) - 1 > cfg.max_steps)
        throw StepCollapseError("track: exceeded max_steps accepted nodes");
    } else {
      radius *= cfg.shrink;
      h_limit = h * cfg.shrink;
    }
  }
  rep.steps = static_cast<int>(rep.grid.size()) - 1;
  rep.final_root = x;
  rep.success = true;
  return rep;
}

double step_bound(double lc_value, int space_degree) {
  if (lc_value < 0.0) throw DomainError("step_bound: length must be nonnegative");
  if (space_degree < 1) throw DomainError("step_bound: degree must be positive");
  return std::pow(static_cast<double>(space_degree), 1.5) * lc_value;
}

}  // namespace condgeo
