#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "condgeo/condlength.hpp"
#include "condgeo/errors.hpp"
#include "condgeo/quadrature.hpp"
#include "condgeo/reference_nets.hpp"

using namespace condgeo;

TEST_CASE("gk15 integrates smooth and kinked functions") {
  const std::vector<double> unit{0.0, 1.0};
  auto r = integrate_gk15([](double x) { return std::exp(x); }, unit, 1e-12, 1e-14, 100);
  CHECK(r.value == doctest::Approx(std::numbers::e - 1.0).epsilon(1e-13));
  auto k = integrate_gk15([](double x) { return std::abs(x - 0.3); }, unit, 1e-10, 1e-12, 200);
  CHECK(k.value == doctest::Approx(0.5 * (0.09 + 0.49)).epsilon(1e-10));
  const std::vector<double> split{0.0, 0.3, 1.0};
  auto s = integrate_gk15([](double x) { return std::abs(x - 0.3); }, split, 1e-10, 1e-12, 200);
  CHECK(s.subdivisions == 0);
  CHECK(s.value == doctest::Approx(0.29).epsilon(1e-14));
  CHECK_THROWS_AS(integrate_gk15([](double x) { return 1.0 / std::sqrt(std::abs(x - 0.5)) * std::sin(1 / (x - 0.5)); },
                                 unit, 1e-14, 1e-16, 5),
                  ConvergenceError);
}

TEST_CASE("toy lengths") {
  const auto poly = toy_length(reference::toy_polyline());
  CHECK(poly.value == doctest::Approx(std::numbers::pi / 2).epsilon(1e-9));
  CHECK(poly.min_cond_seen == doctest::Approx(0.5));
  CHECK(toy_length(reference::toy_arc()).value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(toy_length(ParamPath(Segment{{-1.0, 0.0}, {1.0, 0.0}})), SingularPathError);
}

TEST_CASE("euclidean lengths") {
  CHECK(euclidean_length(reference::quad_polyline()).value == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(euclidean_length(reference::quad_arc()).value == doctest::Approx(std::numbers::pi).epsilon(1e-12));
}

TEST_CASE("condition lengths of the degree-2 worked paths") {
  CHECK(condition_length(reference::quad_arc()).value == doctest::Approx(1.191).epsilon(1e-3));
  CHECK(condition_length(reference::quad_polyline()).value == doctest::Approx(1.131828).epsilon(1e-6));
  const ParamPath net(reference::quad2_initial());
  CHECK(condition_length(net).value == doctest::Approx(0.968234).epsilon(1e-6));
  QuadConfig pc;
  pc.speed_scale = SpeedScale::point_count;
  CHECK(condition_length(net, pc).value == doctest::Approx(1.4524).epsilon(1e-4));
  CHECK(speed_factor(net, pc) == doctest::Approx(1.5));
  CHECK(speed_factor(reference::quad_arc(), pc) == 1.0);
}

TEST_CASE("constant path has zero length") {
  const ParamPath c(Segment{{-1.0, -1.0}, {-1.0, -1.0}});
  CHECK(condition_length(c).value == 0.0);
}

TEST_CASE("singular paths and bad input") {
  // x^2 - 2x + 1 lies on the discriminant parabola.
  const ParamPath through(Segment{{-2.0, 0.0}, {-2.0, 2.0}});
  CHECK_THROWS_AS(condition_length(through), SingularPathError);
  CHECK_THROWS_AS(condition_length(ParamPath(Segment{{0.0}, {1.0}})), DomainError);
  QuadConfig bad;
  bad.rel_tol = 0.0;
  CHECK_THROWS_AS(bad.validate(), InputError);
}

TEST_CASE("integrand definition") {
  const ParamPath net(reference::quad3_initial());
  for (double t : {0.0, 0.37, 1.0}) {
    const CoeffVec x = path_position(net, t), v = path_velocity(net, t);
    CHECK(condition_integrand(net, t, {}) == doctest::Approx(norm2(v) / cond_cn(MonicPoly(x))).epsilon(1e-14));
  }
}

TEST_CASE("degree elevation preserves condition length") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-0.4, 0.4);
  QuadConfig q;
  q.rel_tol = 1e-10;
  for (int n : {2, 3}) {
    for (int trial = 0; trial < 5; ++trial) {
      const ControlNet base = n == 2 ? reference::quad3_initial() : reference::cubic3_initial();
      std::vector<MonicPoly> pts = base.points();
      for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
        CoeffVec c = pts[i].vec();
        for (auto& x : c) x += u(rng);
        pts[i] = MonicPoly(c);
      }
      const ControlNet net(pts);
      const double a = condition_length(ParamPath(net), q).value;
      const double b = condition_length(ParamPath(degree_elevate(net)), q).value;
      CHECK(std::abs(a - b) <= 10 * q.rel_tol * a);
    }
  }
}

TEST_CASE("polyline additivity") {
  const CoeffVec a{-1.0, -1.0}, m{0.2, -2.3}, b{1.0, -1.0};
  QuadConfig q;
  q.rel_tol = 1e-11;
  const double whole = condition_length(ParamPath(Polyline{{a, m, b}}), q).value;
  const double parts = condition_length(ParamPath(Segment{a, m}), q).value +
                       condition_length(ParamPath(Segment{m, b}), q).value;
  CHECK(whole == doctest::Approx(parts).epsilon(1e-9));
}

TEST_CASE("mirror symmetry b -> -b") {
  const ControlNet net = reference::quad3_initial();
  std::vector<MonicPoly> mirrored;
  for (auto it = net.points().rbegin(); it != net.points().rend(); ++it)
    mirrored.push_back(MonicPoly{-it->vec()[0], it->vec()[1]});
  std::vector<MonicPoly> reflected;
  for (const auto& p : net.points()) reflected.push_back(MonicPoly{-p.vec()[0], p.vec()[1]});
  const double a = condition_length(ParamPath(net)).value;
  CHECK(std::abs(a - condition_length(ParamPath(ControlNet(reflected))).value) <= 1e-10);
  CHECK(std::abs(a - condition_length(ParamPath(ControlNet(mirrored))).value) <= 1e-10);
}

TEST_CASE("length grows as the endpoints approach the discriminant") {
  double prev = 0.0;
  for (double eps : {1.0, 0.7, 0.5, 0.3, 0.2, 0.1}) {
    const double lc = condition_length(ParamPath(Segment{{-1.0, -eps}, {1.0, -eps}})).value;
    CHECK(lc > prev);
    prev = lc;
  }
  QuadConfig pc;
  pc.speed_scale = SpeedScale::point_count;
  CHECK(condition_length(ParamPath(Segment{{-1.0, -0.1}, {1.0, -0.1}}), pc).value ==
        doctest::Approx(4.9558).epsilon(1e-4));
}

TEST_CASE("halving rel_tol moves the value by less than the error estimate") {
  const std::vector<ParamPath> paths{ParamPath(reference::quad10_initial()), ParamPath(reference::cubic20_initial()),
                                     reference::quad_arc()};
  for (const auto& p : paths) {
    QuadConfig q;
    q.rel_tol = 1e-4;
    q.abs_tol = 1e-14;
    for (int k = 0; k < 6; ++k) {
      const QuadResult a = condition_length(p, q);
      q.rel_tol /= 2;
      const QuadResult b = condition_length(p, q);
      CHECK(std::abs(a.value - b.value) <= a.error_estimate + 1e-15);
    }
  }
}
