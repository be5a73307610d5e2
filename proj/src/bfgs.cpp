#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "condgeo/optimize.hpp"

namespace condgeo::optim {

namespace {

double finite_or_inf(double v) {
  return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
}

}  // namespace

std::vector<double> fd_gradient(const Objective& f, std::span<const double> x, double fx,
                                double step, int* evaluations) {
  std::vector<double> g(x.size(), 0.0);
  std::vector<double> probe(x.begin(), x.end());
  int evals = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double h = step * std::max(1.0, std::abs(x[i]));
    probe[i] = x[i] + h;
    const double fp = finite_or_inf(f(probe));
    probe[i] = x[i] - h;
    const double fm = finite_or_inf(f(probe));
    probe[i] = x[i];
    evals += 2;
    if (std::isfinite(fp) && std::isfinite(fm)) g[i] = (fp - fm) / (2.0 * h);
    else if (std::isfinite(fp)) g[i] = (fp - fx) / h;
    else if (std::isfinite(fm)) g[i] = (fx - fm) / h;
  }
  if (evaluations) *evaluations += evals;
  return g;
}

std::vector<double> fd_gradient4(const Objective& f, std::span<const double> x, double step) {
  std::vector<double> g(x.size(), 0.0);
  std::vector<double> probe(x.begin(), x.end());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double h = step * std::max(1.0, std::abs(x[i]));
    auto at = [&](double k) {
      probe[i] = x[i] + k * h;
      const double v = f(probe);
      probe[i] = x[i];
      return v;
    };
    g[i] = (-at(2.0) + 8.0 * at(1.0) - 8.0 * at(-1.0) + at(-2.0)) / (12.0 * h);
  }
  return g;
}

Minimum bfgs(const Objective& f, std::vector<double> x0, const BfgsOptions& opts) {
  using Eigen::MatrixXd;
  using Eigen::VectorXd;
  Minimum out;
  const auto n = static_cast<Eigen::Index>(x0.size());
  VectorXd x = Eigen::Map<const VectorXd>(x0.data(), n);
  auto call = [&](const VectorXd& v) {
    ++out.evaluations;
    return finite_or_inf(f(std::span<const double>(v.data(), static_cast<std::size_t>(v.size()))));
  };
  auto grad = [&](const VectorXd& v, double fv) {
    const auto g = fd_gradient(f, std::span<const double>(v.data(), static_cast<std::size_t>(v.size())),
                               fv, opts.fd_step, &out.evaluations);
    return VectorXd(Eigen::Map<const VectorXd>(g.data(), n));
  };

  double fx = call(x);
  if (n == 0) {
    out.x = std::move(x0);
    out.f = fx;
    out.converged = true;
    return out;
  }
  VectorXd g = grad(x, fx);
  MatrixXd hinv = MatrixXd::Identity(n, n);

  constexpr double kArmijo = 1e-4;
  constexpr int kMaxBacktracks = 40;
  int stalled = 0;
  while (out.iterations < opts.max_iters) {
    ++out.iterations;
    VectorXd dir = -hinv * g;
    double slope = g.dot(dir);
    if (!(slope < 0.0)) {
      hinv.setIdentity();
      dir = -g;
      slope = g.dot(dir);
    }
    if (slope == 0.0) {
      out.converged = true;
      break;
    }
    double step = 1.0;
    VectorXd xn = x;
    double fn = fx;
    bool accepted = false;
    for (int k = 0; k < kMaxBacktracks; ++k) {
      xn = x + step * dir;
      fn = call(xn);
      if (std::isfinite(fn) && fn <= fx + kArmijo * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      // No descent along the quasi-Newton direction: retry once from steepest descent.
      if (!hinv.isIdentity()) {
        hinv.setIdentity();
        --out.iterations;
        continue;
      }
      out.converged = true;
      break;
    }
    const VectorXd s = xn - x;
    const VectorXd gn = grad(xn, fn);
    const VectorXd y = gn - g;
    x = xn;
    fx = fn;
    g = gn;
    out.best_history.push_back(fx);
    if (g.lpNorm<Eigen::Infinity>() <= opts.g_tol) {
      out.converged = true;
      break;
    }
    stalled = s.lpNorm<Eigen::Infinity>() <= opts.x_tol ? stalled + 1 : 0;
    if (stalled >= 3) {
      out.converged = true;
      break;
    }
    const double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm()) {
      const double rho = 1.0 / sy;
      const MatrixXd ident = MatrixXd::Identity(n, n);
      hinv = (ident - rho * s * y.transpose()) * hinv * (ident - rho * y * s.transpose()) +
             rho * s * s.transpose();
    }
  }
  out.x.assign(x.data(), x.data() + n);
  out.f = fx;
  return out;
}

}  // namespace condgeo::optim
