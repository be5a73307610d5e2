#include "condgeo/condlength.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "condgeo/errors.hpp"
#include "condgeo/quadrature.hpp"

namespace condgeo {

void QuadConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !(singularity_floor > 0.0))
    throw InputError("QuadConfig: tolerances must be strictly positive");
  if (max_subdivisions < 1) throw InputError("QuadConfig: max_subdivisions must be at least 1");
}

double speed_factor(const ParamPath& path, const QuadConfig& cfg) {
  const int d = path.bezier_degree();
  if (cfg.speed_scale == SpeedScale::point_count && d > 0) return static_cast<double>(d + 1) / d;
  return 1.0;
}

namespace {

// Integrand value; also reports cond_cn at the sample through `cond`.
double sample_condition(const ParamPath& path, double t, const QuadConfig& cfg, double factor,
                        double& cond) {
  cond = cond_cn(MonicPoly(path_position(path, t)));
  if (!(cond > cfg.singularity_floor)) {
    throw SingularPathError("path meets the discriminant locus near t = " + std::to_string(t) +
                            " (cond_cn = " + std::to_string(cond) + ")");
  }
  return factor * norm2(path_velocity(path, t)) / cond;
}

}  // namespace

double condition_integrand(const ParamPath& path, double t, const QuadConfig& cfg) {
  double cond = 0.0;
  return sample_condition(path, t, cfg, speed_factor(path, cfg), cond);
}

QuadResult condition_length(const ParamPath& path, const QuadConfig& cfg) {
  cfg.validate();
  if (path.dimension() < 2)
    throw DomainError("condition_length: polynomial space degree must be at least 2");
  const double factor = speed_factor(path, cfg);
  double min_cond = std::numeric_limits<double>::infinity();
  auto integrand = [&](double t) {
    double cond = 0.0;
    const double v = sample_condition(path, t, cfg, factor, cond);
    min_cond = std::min(min_cond, cond);
    return v;
  };
  // Gauss-Kronrod never samples panel ends, so endpoints and corners are checked here.
  const auto nodes = path.breakpoints();
  for (double t : nodes) integrand(t);
  const Integral r =
      integrate_gk15(integrand, nodes, cfg.rel_tol, cfg.abs_tol, cfg.max_subdivisions);
  return {r.value, r.error_estimate, r.subdivisions, min_cond};
}

QuadResult toy_length(const ParamPath& path, const QuadConfig& cfg) {
  cfg.validate();
  if (path.dimension() != 2) throw DomainError("toy_length: path must lie in the plane");
  double min_r2 = std::numeric_limits<double>::infinity();
  auto integrand = [&](double t) {
    const auto x = path_position(path, t);
    const double r2 = x[0] * x[0] + x[1] * x[1];
    min_r2 = std::min(min_r2, r2);
    if (!(r2 > cfg.singularity_floor)) {
      throw SingularPathError("path meets the origin near t = " + std::to_string(t));
    }
    return toy_cond({x[0], x[1]});
  };
  const auto nodes = path.breakpoints();
  for (double t : nodes) integrand(t);
  const Integral r =
      integrate_gk15(integrand, nodes, cfg.rel_tol, cfg.abs_tol, cfg.max_subdivisions);
  return {r.value, r.error_estimate, r.subdivisions, min_r2};
}

QuadResult euclidean_length(const ParamPath& path, const QuadConfig& cfg) {
  cfg.validate();
  auto integrand = [&](double t) { return norm2(path_velocity(path, t)); };
  const auto nodes = path.breakpoints();
  const Integral r =
      integrate_gk15(integrand, nodes, cfg.rel_tol, cfg.abs_tol, cfg.max_subdivisions);
  return {r.value, r.error_estimate, r.subdivisions, 0.0};
}

}  // namespace condgeo
