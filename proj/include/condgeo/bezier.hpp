#pragma once

#include <vector>

#include "condgeo/polyspace.hpp"

namespace condgeo {

/// Control net of a degree-d Bezier curve over the monic slice of degree-n
/// polynomials. Every control point is a MonicPoly of degree n.
class ControlNet {
 public:
  explicit ControlNet(std::vector<MonicPoly> points);

  int space_degree() const { return points_.front().degree(); }
  int curve_degree() const { return static_cast<int>(points_.size()) - 1; }
  const std::vector<MonicPoly>& points() const { return points_; }
  const MonicPoly& point(int i) const { return points_.at(static_cast<std::size_t>(i)); }

  friend bool operator==(const ControlNet&, const ControlNet&) = default;

 private:
  std::vector<MonicPoly> points_;
};

/// Bernstein basis b_{0,d}(t) ... b_{d,d}(t), built by the triangular
/// recurrence b_{i,k} = (1-t) b_{i,k-1} + t b_{i-1,k-1}.
std::vector<double> bernstein_basis(int degree, double t);

/// Curve point by the Bernstein sum.
MonicPoly bezier_eval(const ControlNet& net, double t);

/// Curve point by de Casteljau's repeated linear interpolation.
MonicPoly bezier_eval_casteljau(const ControlNet& net, double t);

/// Velocity d * sum_i b_{i,d-1}(t) (P_{i+1} - P_i).
CoeffVec bezier_deriv(const ControlNet& net, double t);

ControlNet degree_elevate(const ControlNet& net);

/// Frobenius distance over all control-point coordinates.
double net_distance(const ControlNet& a, const ControlNet& b);

}  // namespace condgeo
