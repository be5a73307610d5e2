#include "condgeo/bezier.hpp"

#include <cmath>

#include "condgeo/errors.hpp"

namespace condgeo {

namespace {

void check_t(double t, const char* what) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError(std::string(what) + ": t must lie in [0,1]");
}

}  // namespace

ControlNet::ControlNet(std::vector<MonicPoly> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw DomainError("ControlNet: curve degree must be at least 1");
  const int n = points_.front().degree();
  for (const auto& p : points_) {
    if (p.degree() != n) throw DomainError("ControlNet: control points differ in degree");
  }
}

std::vector<double> bernstein_basis(int degree, double t) {
  check_t(t, "bernstein_basis");
  if (degree < 0) throw DomainError("bernstein_basis: negative degree");
  std::vector<double> b(static_cast<std::size_t>(degree) + 1, 0.0);
  b[0] = 1.0;
  const double s = 1.0 - t;
  for (int k = 1; k <= degree; ++k) {
    for (int i = k; i >= 1; --i) b[i] = s * b[i] + t * b[i - 1];
    b[0] *= s;
  }
  return b;
}

MonicPoly bezier_eval(const ControlNet& net, double t) {
  check_t(t, "bezier_eval");
  const int d = net.curve_degree();
  if (t == 0.0) return net.point(0);
  if (t == 1.0) return net.point(d);
  const auto w = bernstein_basis(d, t);
  CoeffVec out(static_cast<std::size_t>(net.space_degree()), 0.0);
  for (int i = 0; i <= d; ++i) {
    auto c = net.point(i).coeffs();
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += w[i] * c[j];
  }
  return MonicPoly(std::move(out));
}

MonicPoly bezier_eval_casteljau(const ControlNet& net, double t) {
  check_t(t, "bezier_eval_casteljau");
  std::vector<CoeffVec> work;
  work.reserve(net.points().size());
  for (const auto& p : net.points()) work.push_back(p.vec());
  const double s = 1.0 - t;
  for (std::size_t level = work.size() - 1; level > 0; --level) {
    for (std::size_t i = 0; i < level; ++i) {
      for (std::size_t j = 0; j < work[i].size(); ++j)
        work[i][j] = s * work[i][j] + t * work[i + 1][j];
    }
  }
  return MonicPoly(std::move(work.front()));
}

CoeffVec bezier_deriv(const ControlNet& net, double t) {
  check_t(t, "bezier_deriv");
  const int d = net.curve_degree();
  const auto w = bernstein_basis(d - 1, t);
  CoeffVec out(static_cast<std::size_t>(net.space_degree()), 0.0);
  for (int i = 0; i < d; ++i) {
    auto a = net.point(i).coeffs();
    auto b = net.point(i + 1).coeffs();
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += w[i] * (b[j] - a[j]);
  }
  for (double& v : out) v *= d;
  return out;
}

ControlNet degree_elevate(const ControlNet& net) {
  const int d = net.curve_degree();
  const auto n = static_cast<std::size_t>(net.space_degree());
  std::vector<MonicPoly> q;
  q.reserve(static_cast<std::size_t>(d) + 2);
  q.push_back(net.point(0));
  for (int i = 1; i <= d; ++i) {
    const double a = static_cast<double>(i) / (d + 1);
    auto prev = net.point(i - 1).coeffs();
    auto cur = net.point(i).coeffs();
    CoeffVec c(n);
    for (std::size_t j = 0; j < n; ++j) c[j] = a * prev[j] + (1.0 - a) * cur[j];
    q.emplace_back(std::move(c));
  }
  q.push_back(net.point(d));
  return ControlNet(std::move(q));
}

double net_distance(const ControlNet& a, const ControlNet& b) {
  if (a.curve_degree() != b.curve_degree() || a.space_degree() != b.space_degree())
    throw DomainError("net_distance: nets differ in shape");
  double s = 0.0;
  for (int i = 0; i <= a.curve_degree(); ++i) {
    auto x = a.point(i).coeffs();
    auto y = b.point(i).coeffs();
    for (std::size_t j = 0; j < x.size(); ++j) s += (x[j] - y[j]) * (x[j] - y[j]);
  }
  return std::sqrt(s);
}

}  // namespace condgeo
