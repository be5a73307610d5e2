#include <doctest.h>

#include <cmath>
#include <limits>

#include "condgeo/condlength.hpp"
#include "condgeo/geodesic.hpp"
#include "condgeo/optimize.hpp"
#include "condgeo/reference_nets.hpp"

using namespace condgeo;
using namespace condgeo::optim;

namespace {

double rosenbrock(std::span<const double> x) {
  return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
}

}  // namespace

TEST_CASE("nelder-mead on rosenbrock") {
  NelderMeadOptions o;
  o.f_tol = 1e-14;
  o.x_tol = 1e-10;
  const Minimum m = nelder_mead(rosenbrock, {-1.2, 1.0}, o);
  CHECK(m.converged);
  CHECK(m.x[0] == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(m.x[1] == doctest::Approx(1.0).epsilon(1e-5));
  for (std::size_t i = 1; i < m.best_history.size(); ++i) CHECK(m.best_history[i] <= m.best_history[i - 1]);
}

TEST_CASE("nelder-mead treats non-finite values as barriers") {
  auto f = [](std::span<const double> x) {
    if (x[0] < 0.5) return std::numeric_limits<double>::infinity();
    return (x[0] - 0.2) * (x[0] - 0.2) + x[1] * x[1];
  };
  const Minimum m = nelder_mead(f, {2.0, 1.0}, {});
  CHECK(m.x[0] >= 0.5);
  CHECK(m.x[0] == doctest::Approx(0.5).epsilon(1e-4));
}

TEST_CASE("bfgs on a quadratic and rosenbrock") {
  auto q = [](std::span<const double> x) { return (x[0] - 3) * (x[0] - 3) + 10 * (x[1] + 1) * (x[1] + 1); };
  const Minimum a = bfgs(q, {0.0, 0.0}, {});
  CHECK(a.x[0] == doctest::Approx(3.0).epsilon(1e-5));
  CHECK(a.x[1] == doctest::Approx(-1.0).epsilon(1e-5));
  BfgsOptions o;
  o.x_tol = 1e-12;
  const Minimum b = bfgs(rosenbrock, {-1.2, 1.0}, o);
  CHECK(b.f < 1e-8);
  for (std::size_t i = 1; i < b.best_history.size(); ++i) CHECK(b.best_history[i] <= b.best_history[i - 1]);
}

TEST_CASE("finite-difference gradients agree on the condition length") {
  QuadConfig q;
  q.rel_tol = 1e-13;
  q.abs_tol = 1e-15;
  const ControlNet net0 = reference::cubic3_initial();
  std::vector<double> x = interior_coordinates(net0);
  x[0] += 0.07;
  x[4] -= 0.11;
  const Objective f = [&](std::span<const double> c) {
    return condition_length(ParamPath(with_interior(net0, c)), q).value;
  };
  const auto g2 = fd_gradient(f, x, f(x), 1e-5);
  const auto g4 = fd_gradient4(f, x, 1e-3);
  for (std::size_t i = 0; i < x.size(); ++i)
    CHECK(std::abs(g2[i] - g4[i]) <= 1e-4 * std::max(std::abs(g4[i]), 1e-2));
}
