#pragma once

#include "condgeo/paths.hpp"

namespace condgeo {

/// Factor applied to Bezier velocities inside the length integral.
/// `degree` uses the true derivative (factor d). `point_count` scales it by
/// d + 1, the control-point count, which is the normalization behind the
/// reference geodesic tables; it multiplies every Bezier/segment length by
/// (d + 1) / d. Arcs and polylines are never rescaled.
enum class SpeedScale { degree, point_count };

struct QuadConfig {
  double rel_tol = 1e-8;
  double abs_tol = 1e-10;
  int max_subdivisions = 2000;
  double singularity_floor = 1e-12;  // minimum cond_cn allowed along the path
  SpeedScale speed_scale = SpeedScale::degree;

  void validate() const;
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
  double min_cond_seen = 0.0;
};

/// Multiplier on ||velocity|| implied by cfg.speed_scale for this path.
double speed_factor(const ParamPath& path, const QuadConfig& cfg);

/// ||velocity(t)|| / cond_cn(position(t)), including speed_factor.
/// Throws SingularPathError when cond_cn <= cfg.singularity_floor.
double condition_integrand(const ParamPath& path, double t, const QuadConfig& cfg);

/// Integral over [0,1] of ||path'(t)|| / |D(path(t))|^{1/n}.
/// Requires a polynomial space of degree n >= 2.
QuadResult condition_length(const ParamPath& path, const QuadConfig& cfg = {});

/// Integral over [0,1] of 1 / (x^2 + y^2) along a path in the toy plane.
/// min_cond_seen reports the smallest x^2 + y^2 encountered.
QuadResult toy_length(const ParamPath& path, const QuadConfig& cfg = {});

/// Plain arc length. min_cond_seen is left at 0.
QuadResult euclidean_length(const ParamPath& path, const QuadConfig& cfg = {});

}  // namespace condgeo
