#pragma once

#include <variant>
#include <vector>

#include "condgeo/bezier.hpp"
#include "condgeo/polyspace.hpp"

namespace condgeo {

struct Segment {
  CoeffVec start;
  CoeffVec end;
};

/// Piecewise-linear path; segment k occupies t in [k/m, (k+1)/m].
struct Polyline {
  std::vector<CoeffVec> vertices;
};

/// Circle arc in a two-dimensional coefficient space.
struct Arc {
  double c1 = 0.0;
  double c2 = 0.0;
  double radius = 1.0;
  double theta0 = 0.0;
  double theta1 = 0.0;
};

enum class PathKind { bezier, segment, polyline, arc };

/// Uniform view over the parametric paths used by the length integrals.
/// Position and velocity are defined for t in [0, 1].
class ParamPath {
 public:
  ParamPath(ControlNet net);
  ParamPath(Segment seg);
  ParamPath(Polyline poly);
  ParamPath(Arc arc);

  PathKind kind() const;
  int dimension() const;

  /// Parameter values where the path is only piecewise smooth, including
  /// 0 and 1, ascending.
  std::vector<double> breakpoints() const;

  /// Control-point count minus one for Bezier nets and segments, 0 otherwise.
  int bezier_degree() const;

  const ControlNet* net() const { return std::get_if<ControlNet>(&shape_); }
  const Segment* segment() const { return std::get_if<Segment>(&shape_); }
  const Polyline* polyline() const { return std::get_if<Polyline>(&shape_); }
  const Arc* arc() const { return std::get_if<Arc>(&shape_); }

 private:
  friend CoeffVec path_position(const ParamPath&, double);
  friend CoeffVec path_velocity(const ParamPath&, double);
  std::variant<ControlNet, Segment, Polyline, Arc> shape_;
};

CoeffVec path_position(const ParamPath& path, double t);

/// Derivative of path_position. At a polyline breakpoint the right-hand
/// segment is used (left-hand at t = 1).
CoeffVec path_velocity(const ParamPath& path, double t);

}  // namespace condgeo
