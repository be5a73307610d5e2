#include "condgeo/json_io.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>

#include "condgeo/errors.hpp"

namespace condgeo {

namespace {

void expect_object(const Json& j, const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + ": expected a JSON object");
}

void allow_only(const Json& j, std::initializer_list<const char*> keys, const char* what) {
  for (const auto& item : j.items()) {
    const bool known = std::any_of(keys.begin(), keys.end(),
                                   [&](const char* k) { return item.key() == k; });
    if (!known) throw InputError(std::string(what) + ": unknown field '" + item.key() + "'");
  }
}

const Json& field(const Json& j, const char* key, const char* what) {
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string(what) + ": missing field '" + key + "'");
  return *it;
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + ": expected a number");
  return j.get<double>();
}

int integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + ": expected an integer");
  return j.get<int>();
}

CoeffVec vector_of(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + ": expected an array of numbers");
  CoeffVec out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(number(v, what));
  return out;
}

template <class F>
auto wrap(const char* what, F&& f) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

const char* speed_scale_name(SpeedScale s) {
  return s == SpeedScale::point_count ? "point_count" : "degree";
}

}  // namespace

Json to_json(const MonicPoly& p) { return {{"degree", p.degree()}, {"coeffs", p.vec()}}; }

MonicPoly monic_from_json(const Json& j) {
  constexpr const char* what = "MonicPoly";
  expect_object(j, what);
  allow_only(j, {"degree", "coeffs"}, what);
  const int degree = integer(field(j, "degree", what), what);
  CoeffVec coeffs = vector_of(field(j, "coeffs", what), what);
  if (degree < 1 || static_cast<std::size_t>(degree) != coeffs.size())
    throw InputError("MonicPoly: coeffs must have exactly `degree` entries");
  return wrap(what, [&] { return MonicPoly(std::move(coeffs)); });
}

Json to_json(const ControlNet& net) {
  Json points = Json::array();
  for (const auto& p : net.points()) points.push_back(p.vec());
  return {{"space_degree", net.space_degree()},
          {"curve_degree", net.curve_degree()},
          {"points", points}};
}

ControlNet net_from_json(const Json& j) {
  constexpr const char* what = "ControlNet";
  expect_object(j, what);
  allow_only(j, {"space_degree", "curve_degree", "points"}, what);
  const int n = integer(field(j, "space_degree", what), what);
  const int d = integer(field(j, "curve_degree", what), what);
  const Json& pts = field(j, "points", what);
  if (!pts.is_array()) throw InputError("ControlNet: points must be an array");
  if (d < 1 || pts.size() != static_cast<std::size_t>(d) + 1)
    throw InputError("ControlNet: points must have curve_degree + 1 rows");
  std::vector<MonicPoly> out;
  for (const auto& row : pts) {
    CoeffVec c = vector_of(row, what);
    if (c.size() != static_cast<std::size_t>(n))
      throw InputError("ControlNet: every row must have space_degree entries");
    out.push_back(wrap(what, [&] { return MonicPoly(std::move(c)); }));
  }
  return wrap(what, [&] { return ControlNet(std::move(out)); });
}

Json to_json(const ParamPath& path) {
  if (auto n = path.net()) return {{"kind", "bezier"}, {"net", to_json(*n)}};
  if (auto s = path.segment()) return {{"kind", "segment"}, {"start", s->start}, {"end", s->end}};
  if (auto p = path.polyline()) return {{"kind", "polyline"}, {"vertices", p->vertices}};
  const Arc& a = *path.arc();
  return {{"kind", "arc"},     {"center", {a.c1, a.c2}}, {"radius", a.radius},
          {"theta0", a.theta0}, {"theta1", a.theta1}};
}

ParamPath path_from_json(const Json& j) {
  constexpr const char* what = "path";
  expect_object(j, what);
  const Json& kind_j = field(j, "kind", what);
  if (!kind_j.is_string()) throw InputError("path: kind must be a string");
  const std::string kind = kind_j.get<std::string>();
  if (kind == "bezier") {
    allow_only(j, {"kind", "net"}, what);
    return ParamPath(net_from_json(field(j, "net", what)));
  }
  if (kind == "segment") {
    allow_only(j, {"kind", "start", "end"}, what);
    Segment s{vector_of(field(j, "start", what), what), vector_of(field(j, "end", what), what)};
    return wrap(what, [&] { return ParamPath(std::move(s)); });
  }
  if (kind == "polyline") {
    allow_only(j, {"kind", "vertices"}, what);
    const Json& v = field(j, "vertices", what);
    if (!v.is_array()) throw InputError("path: vertices must be an array");
    Polyline p;
    for (const auto& row : v) p.vertices.push_back(vector_of(row, what));
    return wrap(what, [&] { return ParamPath(std::move(p)); });
  }
  if (kind == "arc") {
    allow_only(j, {"kind", "center", "radius", "theta0", "theta1"}, what);
    const CoeffVec c = vector_of(field(j, "center", what), what);
    if (c.size() != 2) throw InputError("path: arc center must have two entries");
    Arc a{c[0], c[1], number(field(j, "radius", what), what), number(field(j, "theta0", what), what),
          number(field(j, "theta1", what), what)};
    return wrap(what, [&] { return ParamPath(a); });
  }
  throw InputError("path: unknown kind '" + kind + "'");
}

Json to_json(const QuadConfig& cfg) {
  return {{"rel_tol", cfg.rel_tol},
          {"abs_tol", cfg.abs_tol},
          {"max_subdivisions", cfg.max_subdivisions},
          {"singularity_floor", cfg.singularity_floor},
          {"speed_scale", speed_scale_name(cfg.speed_scale)}};
}

QuadConfig quad_config_from_json(const Json& j) {
  constexpr const char* what = "QuadConfig";
  expect_object(j, what);
  allow_only(j, {"rel_tol", "abs_tol", "max_subdivisions", "singularity_floor", "speed_scale"}, what);
  QuadConfig cfg;
  if (j.contains("rel_tol")) cfg.rel_tol = number(j["rel_tol"], what);
  if (j.contains("abs_tol")) cfg.abs_tol = number(j["abs_tol"], what);
  if (j.contains("max_subdivisions")) cfg.max_subdivisions = integer(j["max_subdivisions"], what);
  if (j.contains("singularity_floor")) cfg.singularity_floor = number(j["singularity_floor"], what);
  if (j.contains("speed_scale")) {
    const Json& s = j["speed_scale"];
    if (s == "degree") cfg.speed_scale = SpeedScale::degree;
    else if (s == "point_count") cfg.speed_scale = SpeedScale::point_count;
    else throw InputError("QuadConfig: speed_scale must be 'degree' or 'point_count'");
  }
  cfg.validate();
  return cfg;
}

Json to_json(const QuadResult& r) {
  return {{"value", r.value},
          {"error_estimate", r.error_estimate},
          {"subdivisions", r.subdivisions},
          {"min_cond_seen", r.min_cond_seen}};
}

QuadResult quad_result_from_json(const Json& j) {
  constexpr const char* what = "QuadResult";
  expect_object(j, what);
  allow_only(j, {"value", "error_estimate", "subdivisions", "min_cond_seen"}, what);
  return {number(field(j, "value", what), what), number(field(j, "error_estimate", what), what),
          integer(field(j, "subdivisions", what), what),
          number(field(j, "min_cond_seen", what), what)};
}

Json to_json(const OptimConfig& cfg) {
  return {{"method", cfg.method == OptimMethod::quasi_newton ? "quasi-newton" : "nelder-mead"},
          {"max_iters", cfg.max_iters},
          {"f_tol", cfg.f_tol},
          {"x_tol", cfg.x_tol},
          {"fd_step", cfg.fd_step},
          {"restarts", cfg.restarts},
          {"seed", cfg.seed},
          {"threads", cfg.threads}};
}

OptimConfig optim_config_from_json(const Json& j) {
  constexpr const char* what = "OptimConfig";
  expect_object(j, what);
  allow_only(j, {"method", "max_iters", "f_tol", "x_tol", "fd_step", "restarts", "seed", "threads"},
             what);
  OptimConfig cfg;
  if (j.contains("method")) {
    const Json& m = j["method"];
    if (m == "nelder-mead") cfg.method = OptimMethod::nelder_mead;
    else if (m == "quasi-newton") cfg.method = OptimMethod::quasi_newton;
    else throw InputError("OptimConfig: method must be 'nelder-mead' or 'quasi-newton'");
  }
  if (j.contains("max_iters")) cfg.max_iters = integer(j["max_iters"], what);
  if (j.contains("f_tol")) cfg.f_tol = number(j["f_tol"], what);
  if (j.contains("x_tol")) cfg.x_tol = number(j["x_tol"], what);
  if (j.contains("fd_step")) cfg.fd_step = number(j["fd_step"], what);
  if (j.contains("restarts")) cfg.restarts = integer(j["restarts"], what);
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw InputError("OptimConfig: seed must be a nonnegative integer");
    cfg.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("threads")) cfg.threads = integer(j["threads"], what);
  cfg.validate();
  return cfg;
}

Json to_json(const OptimResult& r) {
  return {{"optimal_net", to_json(r.optimal_net)}, {"fval", r.fval},
          {"initial_lc", r.initial_lc},            {"iterations", r.iterations},
          {"function_evals", r.function_evals},    {"converged", r.converged}};
}

OptimResult optim_result_from_json(const Json& j) {
  constexpr const char* what = "OptimResult";
  expect_object(j, what);
  allow_only(j, {"optimal_net", "fval", "initial_lc", "iterations", "function_evals", "converged"},
             what);
  const Json& conv = field(j, "converged", what);
  if (!conv.is_boolean()) throw InputError("OptimResult: converged must be a boolean");
  return {net_from_json(field(j, "optimal_net", what)),   number(field(j, "fval", what), what),
          number(field(j, "initial_lc", what), what),      integer(field(j, "iterations", what), what),
          integer(field(j, "function_evals", what), what), conv.get<bool>()};
}

Json to_json(const TrackConfig& cfg) {
  return {{"residual_tol", cfg.residual_tol},
          {"initial_steps", cfg.initial_steps},
          {"max_steps", cfg.max_steps},
          {"newton_iters_per_node", cfg.newton_iters_per_node},
          {"shrink", cfg.shrink},
          {"grow", cfg.grow}};
}

TrackConfig track_config_from_json(const Json& j) {
  constexpr const char* what = "TrackConfig";
  expect_object(j, what);
  allow_only(j, {"residual_tol", "initial_steps", "max_steps", "newton_iters_per_node", "shrink", "grow"},
             what);
  TrackConfig cfg;
  if (j.contains("residual_tol")) cfg.residual_tol = number(j["residual_tol"], what);
  if (j.contains("initial_steps")) cfg.initial_steps = integer(j["initial_steps"], what);
  if (j.contains("max_steps")) cfg.max_steps = integer(j["max_steps"], what);
  if (j.contains("newton_iters_per_node"))
    cfg.newton_iters_per_node = integer(j["newton_iters_per_node"], what);
  if (j.contains("shrink")) cfg.shrink = number(j["shrink"], what);
  if (j.contains("grow")) cfg.grow = number(j["grow"], what);
  cfg.validate();
  return cfg;
}

Json to_json(const TrackReport& r) {
  return {{"steps", r.steps},         {"grid", r.grid},           {"roots", r.roots},
          {"residuals", r.residuals}, {"final_root", r.final_root}, {"success", r.success}};
}

TrackReport track_report_from_json(const Json& j) {
  constexpr const char* what = "TrackReport";
  expect_object(j, what);
  allow_only(j, {"steps", "grid", "roots", "residuals", "final_root", "success"}, what);
  const Json& ok = field(j, "success", what);
  if (!ok.is_boolean()) throw InputError("TrackReport: success must be a boolean");
  TrackReport r;
  r.steps = integer(field(j, "steps", what), what);
  r.grid = vector_of(field(j, "grid", what), what);
  r.roots = vector_of(field(j, "roots", what), what);
  r.residuals = vector_of(field(j, "residuals", what), what);
  r.final_root = number(field(j, "final_root", what), what);
  r.success = ok.get<bool>();
  return r;
}

}  // namespace condgeo
