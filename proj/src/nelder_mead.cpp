#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "condgeo/optimize.hpp"

namespace condgeo::optim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Vertex {
  std::vector<double> x;
  double f;
};

double safe_eval(const Objective& f, std::span<const double> x, int& evals) {
  ++evals;
  const double v = f(x);
  return std::isfinite(v) ? v : kInf;
}

std::vector<double> affine(const std::vector<double>& a, const std::vector<double>& b, double s) {
  // a + s * (b - a)
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + s * (b[i] - a[i]);
  return out;
}

std::vector<Vertex> build_simplex(const Objective& f, const Vertex& base, double step, int& evals) {
  std::vector<Vertex> simplex{base};
  for (std::size_t i = 0; i < base.x.size(); ++i) {
    auto x = base.x;
    x[i] += step;
    const double fx = safe_eval(f, x, evals);
    simplex.push_back({std::move(x), fx});
  }
  return simplex;
}

bool simplex_converged(const std::vector<Vertex>& s, double f_tol, double x_tol) {
  double fspread = 0.0;
  double xspread = 0.0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    fspread = std::max(fspread, std::abs(s[i].f - s[0].f));
    for (std::size_t j = 0; j < s[i].x.size(); ++j)
      xspread = std::max(xspread, std::abs(s[i].x[j] - s[0].x[j]));
  }
  return fspread <= f_tol && xspread <= x_tol;
}

}  // namespace

Minimum nelder_mead(const Objective& f, std::vector<double> x0, const NelderMeadOptions& opts) {
  Minimum out;
  const std::size_t n = x0.size();
  const double fx0 = safe_eval(f, x0, out.evaluations);
  if (n == 0) {
    out.x = std::move(x0);
    out.f = fx0;
    out.converged = true;
    return out;
  }

  const double dn = static_cast<double>(n);
  const double alpha = 1.0;
  const double beta = 1.0 + 2.0 / dn;
  const double gamma = 0.75 - 1.0 / (2.0 * dn);
  const double delta = 1.0 - 1.0 / dn;

  auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
  std::vector<Vertex> simplex = build_simplex(f, {std::move(x0), fx0}, opts.initial_step, out.evaluations);
  std::stable_sort(simplex.begin(), simplex.end(), by_value);

  int rebuilds = 0;
  double last_converged_best = kInf;
  while (true) {
    if (simplex_converged(simplex, opts.f_tol, opts.x_tol)) {
      const double best = simplex.front().f;
      const bool improved = best < last_converged_best - opts.f_tol;
      if (!improved || rebuilds >= opts.max_rebuilds) {
        out.converged = true;
        break;
      }
      last_converged_best = best;
      ++rebuilds;
      simplex = build_simplex(f, simplex.front(), opts.initial_step, out.evaluations);
      std::stable_sort(simplex.begin(), simplex.end(), by_value);
      continue;
    }
    if (out.iterations >= opts.max_iters) break;
    ++out.iterations;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i].x[j] / dn;

    Vertex& worst = simplex.back();
    const double f_best = simplex.front().f;
    const double f_second_worst = simplex[n - 1].f;

    auto xr = affine(centroid, worst.x, -alpha);
    const double fr = safe_eval(f, xr, out.evaluations);
    bool shrink = false;
    if (fr < f_best) {
      auto xe = affine(centroid, worst.x, -alpha * beta);
      const double fe = safe_eval(f, xe, out.evaluations);
      if (fe < fr) worst = {std::move(xe), fe};
      else worst = {std::move(xr), fr};
    } else if (fr < f_second_worst) {
      worst = {std::move(xr), fr};
    } else if (fr < worst.f) {
      auto xc = affine(centroid, worst.x, -alpha * gamma);
      const double fc = safe_eval(f, xc, out.evaluations);
      if (fc <= fr) worst = {std::move(xc), fc};
      else shrink = true;
    } else {
      auto xc = affine(centroid, worst.x, gamma);
      const double fc = safe_eval(f, xc, out.evaluations);
      if (fc < worst.f) worst = {std::move(xc), fc};
      else shrink = true;
    }
    if (shrink) {
      for (std::size_t i = 1; i <= n; ++i) {
        simplex[i].x = affine(simplex.front().x, simplex[i].x, delta);
        simplex[i].f = safe_eval(f, simplex[i].x, out.evaluations);
      }
    }
    std::stable_sort(simplex.begin(), simplex.end(), by_value);
    out.best_history.push_back(simplex.front().f);
  }
  out.x = simplex.front().x;
  out.f = simplex.front().f;
  return out;
}

}  // namespace condgeo::optim
