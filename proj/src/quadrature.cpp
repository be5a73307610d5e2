#include "condgeo/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "condgeo/errors.hpp"

namespace condgeo {

namespace {

// Kronrod abscissae on [0,1) of the symmetric 15-point rule; odd indices
// are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[static_cast<std::size_t>(j)];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kWgk[static_cast<std::size_t>(j)] * sum;
    if (j % 2 == 1) gauss += kWg[static_cast<std::size_t>(j / 2)] * sum;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;
  }
};

double ordered_sum(std::vector<Panel> panels, double Panel::*field) {
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  double s = 0.0;
  for (const auto& p : panels) s += p.*field;
  return s;
}

}  // namespace

Integral integrate_gk15(const std::function<double(double)>& f, std::span<const double> nodes,
                        double rel_tol, double abs_tol, int max_subdivisions) {
  if (nodes.size() < 2) throw DomainError("integrate_gk15: need at least two nodes");
  std::priority_queue<Panel, std::vector<Panel>, ByError> queue;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    if (nodes[i + 1] > nodes[i]) queue.push(gk15(f, nodes[i], nodes[i + 1]));
  }
  std::vector<Panel> done;
  int subdivisions = 0;
  auto totals = [&]() {
    std::vector<Panel> all = done;
    auto copy = queue;
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    return std::pair{ordered_sum(all, &Panel::value), ordered_sum(all, &Panel::error)};
  };
  // Running sums steer the loop; the reported totals are recomputed in order.
  double value = 0.0;
  double error = 0.0;
  {
    auto [v, e] = totals();
    value = v;
    error = e;
  }
  while (!queue.empty() && error > std::max(abs_tol, rel_tol * std::abs(value))) {
    if (subdivisions >= max_subdivisions) {
      throw ConvergenceError("integrate_gk15: tolerance not met after " +
                             std::to_string(max_subdivisions) + " subdivisions (error estimate " +
                             std::to_string(error) + ")");
    }
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Panel is at floating-point resolution; keep it as is.
      done.push_back(worst);
      continue;
    }
    Panel left = gk15(f, worst.a, mid);
    Panel right = gk15(f, mid, worst.b);
    ++subdivisions;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }
  auto [v, e] = totals();
  if (!std::isfinite(v)) throw ConvergenceError("integrate_gk15: integral is not finite");
  if (e > std::max(abs_tol, rel_tol * std::abs(v)))
    throw ConvergenceError("integrate_gk15: panels reached floating-point resolution");
  return {v, e, subdivisions};
}

}  // namespace condgeo
