#include <doctest.h>

#include <numbers>

#include "condgeo/errors.hpp"
#include "condgeo/paths.hpp"
#include "condgeo/reference_nets.hpp"

using namespace condgeo;

TEST_CASE("endpoints are exact for every kind") {
  const CoeffVec a{-1.0, -1.0}, b{1.0, -1.0};
  const ParamPath seg(Segment{a, b});
  const ParamPath poly(Polyline{{a, {0.0, -2.0}, b}});
  const ParamPath bez(ControlNet({MonicPoly(a), MonicPoly{0.0, -2.0}, MonicPoly(b)}));
  for (const ParamPath* p : {&seg, &poly, &bez}) {
    CHECK(path_position(*p, 0.0) == a);
    CHECK(path_position(*p, 1.0) == b);
  }
  const ParamPath arc = reference::quad_arc();
  for (std::size_t j = 0; j < 2; ++j) {
    CHECK(std::abs(path_position(arc, 0.0)[j] - a[j]) <= 1e-15);
    CHECK(std::abs(path_position(arc, 1.0)[j] - b[j]) <= 1e-15);
  }
  CHECK(path_position(arc, 0.5)[1] == doctest::Approx(-2.0));
}

TEST_CASE("kinds, dimensions and breakpoints") {
  const ParamPath poly(Polyline{{{0.0}, {1.0}, {3.0}, {2.0}}});
  CHECK(poly.kind() == PathKind::polyline);
  CHECK(poly.dimension() == 1);
  const auto bp = poly.breakpoints();
  REQUIRE(bp.size() == 4);
  CHECK(bp[1] == doctest::Approx(1.0 / 3.0));
  CHECK(bp[3] == 1.0);
  CHECK(reference::toy_arc().breakpoints() == std::vector<double>{0.0, 1.0});
  CHECK(ParamPath(Segment{{0.0, 0.0}, {1.0, 1.0}}).bezier_degree() == 1);
  CHECK(ParamPath(reference::quad3_initial()).bezier_degree() == 3);
  CHECK(reference::quad_arc().bezier_degree() == 0);
}

TEST_CASE("uniform-in-index polyline") {
  const ParamPath poly(Polyline{{{0.0, 0.0}, {1.0, 0.0}, {1.0, 3.0}}});
  CHECK(path_position(poly, 0.25) == CoeffVec{0.5, 0.0});
  CHECK(path_position(poly, 0.75) == CoeffVec{1.0, 1.5});
  CHECK(path_velocity(poly, 0.25) == CoeffVec{2.0, 0.0});
  CHECK(path_velocity(poly, 0.5) == CoeffVec{0.0, 6.0});
  CHECK(path_velocity(poly, 1.0) == CoeffVec{0.0, 6.0});
}

TEST_CASE("velocity matches finite differences") {
  const std::vector<ParamPath> paths{reference::quad_arc(), ParamPath(reference::quad3_initial()),
                                     ParamPath(Segment{{-1.0, -1.0, 2.0}, {1.0, -1.0, 2.0}}),
                                     reference::quad_polyline()};
  for (const auto& p : paths)
    for (double t : {0.1, 0.3, 0.7, 0.9}) {
      const CoeffVec v = path_velocity(p, t);
      double err[2];
      int k = 0;
      for (double h : {1e-3, 5e-4}) {
        const CoeffVec a = path_position(p, t + h), b = path_position(p, t - h);
        double e = 0.0;
        for (std::size_t j = 0; j < v.size(); ++j) e = std::max(e, std::abs((a[j] - b[j]) / (2 * h) - v[j]));
        err[k++] = e;
      }
      CHECK(err[1] <= 0.3 * err[0] + 1e-9);
    }
}

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(ParamPath(Segment{{0.0}, {1.0, 2.0}}), DomainError);
  CHECK_THROWS_AS(ParamPath(Polyline{{{0.0, 1.0}}}), DomainError);
  CHECK_THROWS_AS(path_position(reference::quad_arc(), 1.5), DomainError);
}
