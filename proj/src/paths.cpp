#include "condgeo/paths.hpp"

#include <cmath>
#include <string>

#include "condgeo/errors.hpp"

namespace condgeo {

namespace {

void check_t(double t, const char* what) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError(std::string(what) + ": t must lie in [0,1]");
}

void check_finite(const CoeffVec& v, const char* what) {
  if (v.empty()) throw DomainError(std::string(what) + ": empty point");
  for (double x : v)
    if (!std::isfinite(x)) throw DomainError(std::string(what) + ": non-finite coordinate");
}

// Segment index and local parameter in [0,1] for a uniform polyline.
std::pair<std::size_t, double> locate(const Polyline& p, double t) {
  const std::size_t m = p.vertices.size() - 1;
  double scaled = t * static_cast<double>(m);
  auto k = static_cast<std::size_t>(std::floor(scaled));
  if (k >= m) k = m - 1;
  return {k, scaled - static_cast<double>(k)};
}

}  // namespace

ParamPath::ParamPath(ControlNet net) : shape_(std::move(net)) {}

ParamPath::ParamPath(Segment seg) : shape_(std::move(seg)) {
  const auto& s = std::get<Segment>(shape_);
  check_finite(s.start, "Segment");
  check_finite(s.end, "Segment");
  if (s.start.size() != s.end.size()) throw DomainError("Segment: endpoint dimensions differ");
}

ParamPath::ParamPath(Polyline poly) : shape_(std::move(poly)) {
  const auto& p = std::get<Polyline>(shape_);
  if (p.vertices.size() < 2) throw DomainError("Polyline: need at least two vertices");
  for (const auto& v : p.vertices) {
    check_finite(v, "Polyline");
    if (v.size() != p.vertices.front().size())
      throw DomainError("Polyline: vertex dimensions differ");
  }
}

ParamPath::ParamPath(Arc arc) : shape_(arc) {
  if (!std::isfinite(arc.c1) || !std::isfinite(arc.c2) || !std::isfinite(arc.radius) ||
      !std::isfinite(arc.theta0) || !std::isfinite(arc.theta1))
    throw DomainError("Arc: non-finite parameter");
  if (arc.radius < 0.0) throw DomainError("Arc: radius must be nonnegative");
}

PathKind ParamPath::kind() const {
  switch (shape_.index()) {
    case 0: return PathKind::bezier;
    case 1: return PathKind::segment;
    case 2: return PathKind::polyline;
    default: return PathKind::arc;
  }
}

int ParamPath::dimension() const {
  if (auto n = net()) return n->space_degree();
  if (auto s = segment()) return static_cast<int>(s->start.size());
  if (auto p = polyline()) return static_cast<int>(p->vertices.front().size());
  return 2;
}

std::vector<double> ParamPath::breakpoints() const {
  if (auto p = polyline()) {
    const std::size_t m = p->vertices.size() - 1;
    std::vector<double> out;
    for (std::size_t k = 0; k <= m; ++k) out.push_back(static_cast<double>(k) / static_cast<double>(m));
    out.back() = 1.0;
    return out;
  }
  return {0.0, 1.0};
}

int ParamPath::bezier_degree() const {
  if (auto n = net()) return n->curve_degree();
  if (segment()) return 1;
  return 0;
}

CoeffVec path_position(const ParamPath& path, double t) {
  check_t(t, "path_position");
  return std::visit(
      [t](const auto& shape) -> CoeffVec {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, ControlNet>) {
          return bezier_eval(shape, t).vec();
        } else if constexpr (std::is_same_v<T, Segment>) {
          if (t == 0.0) return shape.start;
          if (t == 1.0) return shape.end;
          CoeffVec out(shape.start.size());
          for (std::size_t j = 0; j < out.size(); ++j)
            out[j] = (1.0 - t) * shape.start[j] + t * shape.end[j];
          return out;
        } else if constexpr (std::is_same_v<T, Polyline>) {
          if (t == 0.0) return shape.vertices.front();
          if (t == 1.0) return shape.vertices.back();
          auto [k, s] = locate(shape, t);
          const auto& a = shape.vertices[k];
          const auto& b = shape.vertices[k + 1];
          CoeffVec out(a.size());
          for (std::size_t j = 0; j < out.size(); ++j) out[j] = (1.0 - s) * a[j] + s * b[j];
          return out;
        } else {
          const double th = shape.theta0 + t * (shape.theta1 - shape.theta0);
          return {shape.c1 + shape.radius * std::cos(th), shape.c2 + shape.radius * std::sin(th)};
        }
      },
      path.shape_);
}

CoeffVec path_velocity(const ParamPath& path, double t) {
  check_t(t, "path_velocity");
  return std::visit(
      [t](const auto& shape) -> CoeffVec {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, ControlNet>) {
          return bezier_deriv(shape, t);
        } else if constexpr (std::is_same_v<T, Segment>) {
          CoeffVec out(shape.start.size());
          for (std::size_t j = 0; j < out.size(); ++j) out[j] = shape.end[j] - shape.start[j];
          return out;
        } else if constexpr (std::is_same_v<T, Polyline>) {
          const auto m = static_cast<double>(shape.vertices.size() - 1);
          auto k = locate(shape, t).first;
          const auto& a = shape.vertices[k];
          const auto& b = shape.vertices[k + 1];
          CoeffVec out(a.size());
          for (std::size_t j = 0; j < out.size(); ++j) out[j] = m * (b[j] - a[j]);
          return out;
        } else {
          const double w = shape.theta1 - shape.theta0;
          const double th = shape.theta0 + t * w;
          return {-shape.radius * w * std::sin(th), shape.radius * w * std::cos(th)};
        }
      },
      path.shape_);
}

}  // namespace condgeo
