#include <doctest.h>

#include "condgeo/errors.hpp"
#include "condgeo/json_io.hpp"
#include "condgeo/reference_nets.hpp"

using namespace condgeo;
namespace ref = condgeo::reference;

TEST_CASE("monic and net round trip") {
  const MonicPoly p{0.1, -1.0 / 3.0, 2.0};
  CHECK(monic_from_json(to_json(p)) == p);
  CHECK(to_json(p).dump() == R"({"coeffs":[0.1,-0.3333333333333333,2.0],"degree":3})");
  const ControlNet n = ref::cubic20_initial();
  CHECK(net_from_json(to_json(n)) == n);
  CHECK(to_json(net_from_json(to_json(n))).dump() == to_json(n).dump());
}

TEST_CASE("paths round trip") {
  const std::vector<ParamPath> paths{ParamPath(ref::quad3_initial()), ParamPath(Segment{{1.0, 2.0}, {3.0, 4.0}}),
                                     ref::quad_polyline(), ref::quad_arc()};
  for (const auto& p : paths) {
    const Json j = to_json(p);
    CHECK(to_json(path_from_json(j)) == j);
  }
}

TEST_CASE("configs and results round trip") {
  QuadConfig q;
  q.rel_tol = 1e-9;
  q.speed_scale = SpeedScale::point_count;
  CHECK(to_json(quad_config_from_json(to_json(q))) == to_json(q));
  OptimConfig o;
  o.method = OptimMethod::quasi_newton;
  o.seed = 18446744073709551615ULL;
  CHECK(to_json(optim_config_from_json(to_json(o))) == to_json(o));
  TrackConfig t;
  t.grow = 1.7;
  CHECK(to_json(track_config_from_json(to_json(t))) == to_json(t));
  const QuadResult qr{1.25, 1e-12, 3, 0.5};
  CHECK(to_json(quad_result_from_json(to_json(qr))) == to_json(qr));
  const OptimResult orr{ref::quad2_reported_optimum(), 1.3948, 1.4524, 100, 700, true};
  CHECK(to_json(optim_result_from_json(to_json(orr))) == to_json(orr));
  TrackReport tr;
  tr.steps = 1;
  tr.grid = {0.0, 1.0};
  tr.roots = {1.5, 1.5};
  tr.residuals = {0.0, 0.0};
  tr.final_root = 1.5;
  tr.success = true;
  CHECK(to_json(track_report_from_json(to_json(tr))) == to_json(tr));
}

TEST_CASE("defaults fill missing config fields") {
  const QuadConfig q = quad_config_from_json(Json::object());
  CHECK(q.rel_tol == 1e-8);
  CHECK(q.speed_scale == SpeedScale::degree);
  CHECK(optim_config_from_json(Json::object()).restarts == 3);
  CHECK(track_config_from_json(Json::object()).initial_steps == 8);
}

TEST_CASE("unknown fields and malformed documents are rejected") {
  CHECK_THROWS_AS(monic_from_json(Json::parse(R"({"degree":2,"coeffs":[1,2],"extra":0})")), InputError);
  CHECK_THROWS_AS(monic_from_json(Json::parse(R"({"degree":3,"coeffs":[1,2]})")), InputError);
  CHECK_THROWS_AS(quad_config_from_json(Json::parse(R"({"reltol":1e-6})")), InputError);
  CHECK_THROWS_AS(quad_config_from_json(Json::parse(R"({"speed_scale":"fast"})")), InputError);
  CHECK_THROWS_AS(optim_config_from_json(Json::parse(R"({"method":"simplex"})")), InputError);
  CHECK_THROWS_AS(optim_config_from_json(Json::parse(R"({"seed":-1})")), InputError);
  CHECK_THROWS_AS(track_config_from_json(Json::parse(R"({"shrink":2})")), InputError);
  CHECK_THROWS_AS(path_from_json(Json::parse(R"({"kind":"spiral"})")), InputError);
  CHECK_THROWS_AS(path_from_json(Json::parse(R"({"kind":"segment","start":[1],"end":[1,2]})")), InputError);
  CHECK_THROWS_AS(path_from_json(Json::parse(R"({"kind":"arc","center":[0,0],"radius":1,"theta0":0})")), InputError);
  CHECK_THROWS_AS(net_from_json(Json::parse(R"({"space_degree":2,"curve_degree":1,"points":[[1,2]]})")), InputError);
  CHECK_THROWS_AS(net_from_json(Json::parse(R"([1,2])")), InputError);
}
