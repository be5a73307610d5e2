#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "condgeo/condlength.hpp"
#include "condgeo/errors.hpp"
#include "condgeo/geodesic.hpp"
#include "condgeo/json_io.hpp"
#include "condgeo/reference_nets.hpp"
#include "condgeo/tracker.hpp"

using namespace condgeo;

namespace {

struct Common {
  std::optional<double> quad_rel_tol;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  std::optional<std::string> speed_scale;
  std::string out;
  std::string format = "csv";
};

std::string num(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

Json read_json(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot open " + file);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(file + ": " + e.what());
  }
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw InputError("cannot write " + c.out);
  f << text;
}

void emit_json(const Common& c, const Json& j) { emit(c, j.dump(2) + "\n"); }

void check_keys(const Json& j, std::initializer_list<const char*> keys, const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + ": expected an object");
  for (const auto& [k, _] : j.items()) {
    bool ok = false;
    for (const char* allowed : keys) ok = ok || k == allowed;
    if (!ok) throw InputError(std::string(what) + ": unknown field '" + k + "'");
  }
}

const Json& need(const Json& j, const char* key, const char* what) {
  if (!j.contains(key)) throw InputError(std::string(what) + ": missing field '" + key + "'");
  return j[key];
}

SpeedScale parse_scale(const std::string& s) {
  if (s == "degree") return SpeedScale::degree;
  if (s == "point_count") return SpeedScale::point_count;
  throw InputError("speed scale must be degree or point_count");
}

QuadConfig quad_from(const Json& job, const Common& c, SpeedScale fallback = SpeedScale::degree) {
  QuadConfig q;
  q.speed_scale = fallback;
  if (job.contains("quad")) {
    Json qj = job["quad"];
    if (qj.is_object() && !qj.contains("speed_scale"))
      qj["speed_scale"] = fallback == SpeedScale::point_count ? "point_count" : "degree";
    q = quad_config_from_json(qj);
  }
  if (c.quad_rel_tol) q.rel_tol = *c.quad_rel_tol;
  if (c.speed_scale) q.speed_scale = parse_scale(*c.speed_scale);
  q.validate();
  return q;
}

OptimConfig optim_from(const Json& job, const Common& c) {
  OptimConfig o = job.contains("optim") ? optim_config_from_json(job["optim"]) : OptimConfig{};
  if (c.seed) o.seed = *c.seed;
  if (c.threads) o.threads = *c.threads;
  o.validate();
  return o;
}

MonicPoly monic_from_array(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + ": expected a coefficient array");
  CoeffVec v;
  for (const auto& x : j) {
    if (!x.is_number()) throw InputError(std::string(what) + ": coefficients must be numbers");
    v.push_back(x.get<double>());
  }
  try {
    return MonicPoly(std::move(v));
  } catch (const DomainError& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

Json coeff_array(const MonicPoly& p) { return p.vec(); }

// --- length -------------------------------------------------------------

// Accepts a bare path document or a length job {"path", "metric", "quad"}.
int cmd_length(const std::string& file, std::optional<std::string> metric, const Common& c) {
  const Json doc = read_json(file);
  Json path_j = doc;
  std::string m = "condition";
  Json job = Json::object();
  if (doc.is_object() && doc.contains("path")) {
    check_keys(doc, {"path", "metric", "quad", "result"}, "length job");
    path_j = doc["path"];
    job = doc;
    if (doc.contains("metric")) {
      if (!doc["metric"].is_string()) throw InputError("length job: metric must be a string");
      m = doc["metric"].get<std::string>();
    }
  }
  if (metric) m = *metric;
  const ParamPath path = path_from_json(path_j);
  const QuadConfig q = quad_from(job, c);

  QuadResult r;
  if (m == "condition") r = condition_length(path, q);
  else if (m == "toy") r = toy_length(path, q);
  else if (m == "euclidean") r = euclidean_length(path, q);
  else throw InputError("metric must be condition, toy or euclidean");

  if (c.format == "json") {
    emit_json(c, {{"path", to_json(path)}, {"metric", m}, {"quad", to_json(q)}, {"result", to_json(r)}});
  } else {
    emit(c, "metric,value,error_estimate,subdivisions,min_cond_seen\n" + m + "," + num(r.value) + "," +
                num(r.error_estimate) + "," + std::to_string(r.subdivisions) + "," +
                num(r.min_cond_seen) + "\n");
  }
  std::cerr << m << " length " << fixed4(r.value) << " (error estimate " << r.error_estimate << ")\n";
  return 0;
}

// --- optimize -----------------------------------------------------------

int cmd_optimize(const std::string& file, const Common& c) {
  const Json job = read_json(file);
  check_keys(job, {"net0", "optim", "quad", "result"}, "optimize job");
  const ControlNet net0 = net_from_json(need(job, "net0", "optimize job"));
  const QuadConfig q = quad_from(job, c);
  const OptimConfig o = optim_from(job, c);
  const OptimResult r = optimize_geodesic(net0, o, q);

  if (c.format == "json") {
    emit_json(c, {{"net0", to_json(net0)}, {"optim", to_json(o)}, {"quad", to_json(q)}, {"result", to_json(r)}});
  } else {
    std::string s = "fval,initial_lc,iters,evals,converged\n" + num(r.fval) + "," + num(r.initial_lc) + "," +
                    std::to_string(r.iterations) + "," + std::to_string(r.function_evals) + "," +
                    (r.converged ? "true" : "false") + "\n";
    emit(c, s);
  }
  std::cerr << "fval " << fixed4(r.fval) << "  initial " << fixed4(r.initial_lc) << "  iterations "
            << r.iterations << (r.converged ? "" : "  (not converged)") << "\n";
  for (const auto& p : r.optimal_net.points()) {
    std::cerr << " ";
    for (double v : p.vec()) std::cerr << " " << fixed4(v);
    std::cerr << "\n";
  }
  return 0;
}

// --- perturb ------------------------------------------------------------

int cmd_perturb(const std::string& file, const Common& c) {
  const Json job = read_json(file);
  check_keys(job, {"reference", "nets", "quad", "result"}, "perturb job");
  const ControlNet ref = net_from_json(need(job, "reference", "perturb job"));
  const Json& nets_j = need(job, "nets", "perturb job");
  if (!nets_j.is_array()) throw InputError("perturb job: nets must be an array");
  std::vector<NamedNet> nets;
  for (const auto& e : nets_j) {
    check_keys(e, {"id", "net"}, "perturb entry");
    const Json& id = need(e, "id", "perturb entry");
    if (!id.is_string()) throw InputError("perturb entry: id must be a string");
    nets.push_back({id.get<std::string>(), net_from_json(need(e, "net", "perturb entry"))});
  }
  const QuadConfig q = quad_from(job, c);
  const auto rows = perturbation_study(ref, nets, q);

  if (c.format == "json") {
    Json res = Json::array();
    for (const auto& r : rows)
      res.push_back({{"id", r.id}, {"distance", r.distance}, {"lc", r.lc}, {"gap", r.gap}});
    Json nj = Json::array();
    for (const auto& n : nets) nj.push_back({{"id", n.id}, {"net", to_json(n.net)}});
    emit_json(c, {{"reference", to_json(ref)}, {"nets", nj}, {"quad", to_json(q)}, {"result", res}});
  } else {
    std::string s = "id,distance,lc,gap\n";
    for (const auto& r : rows) s += r.id + "," + num(r.distance) + "," + num(r.lc) + "," + num(r.gap) + "\n";
    emit(c, s);
  }
  for (const auto& r : rows)
    std::cerr << r.id << "  |d| " << fixed4(r.distance) << "  lc " << fixed4(r.lc) << "  gap " << r.gap << "\n";
  return 0;
}

// --- sweep / tables -----------------------------------------------------

std::string sweep_csv(const std::vector<SweepRow>& rows, bool with_bound, int space_degree,
                      const std::string& pair) {
  std::string s;
  for (const auto& r : rows) {
    const std::string deg = with_bound && r.degree == 1 ? "linear" : std::to_string(r.degree);
    if (!r.error.empty()) {
      s += deg + ",nan,nan,0,false";
      if (with_bound) s += ",nan," + pair;
      s += "\n";
      continue;
    }
    s += deg + "," + num(r.fval) + "," + num(r.initial_lc) + "," + std::to_string(r.iterations) + "," +
         (r.converged ? "true" : "false");
    if (with_bound) s += "," + num(step_bound(r.fval, space_degree)) + "," + pair;
    s += "\n";
  }
  return s;
}

Json sweep_json(const std::vector<SweepRow>& rows) {
  Json a = Json::array();
  for (const auto& r : rows) {
    Json j = {{"degree", r.degree}, {"fval", r.fval}, {"initial_lc", r.initial_lc},
              {"iterations", r.iterations}, {"converged", r.converged}};
    if (r.net) j["net"] = to_json(*r.net);
    if (!r.error.empty()) j["error"] = r.error;
    a.push_back(j);
  }
  return a;
}

void print_summary(const std::vector<SweepRow>& rows, int space_degree, bool with_bound) {
  for (const auto& r : rows) {
    std::cerr << (r.degree == 1 ? std::string("linear") : "degree " + std::to_string(r.degree)) << "  ";
    if (!r.error.empty()) {
      std::cerr << "failed: " << r.error << "\n";
      continue;
    }
    std::cerr << fixed4(r.fval);
    if (with_bound) std::cerr << "  k/C " << fixed4(step_bound(r.fval, space_degree));
    std::cerr << "\n";
  }
}

bool any_ok(const std::vector<SweepRow>& rows) {
  for (const auto& r : rows)
    if (r.error.empty()) return true;
  return false;
}

int cmd_sweep(const std::string& file, const Common& c) {
  const Json job = read_json(file);
  check_keys(job, {"start", "end", "degrees", "optim", "quad", "result"}, "sweep job");
  const MonicPoly a = monic_from_array(need(job, "start", "sweep job"), "sweep start");
  const MonicPoly b = monic_from_array(need(job, "end", "sweep job"), "sweep end");
  const Json& dj = need(job, "degrees", "sweep job");
  if (!dj.is_array() || dj.empty()) throw InputError("sweep job: degrees must be a non-empty array");
  std::vector<int> degrees;
  for (const auto& d : dj) {
    if (!d.is_number_integer() || d.get<int>() < 1) throw InputError("sweep job: degrees must be positive integers");
    degrees.push_back(d.get<int>());
  }
  const QuadConfig q = quad_from(job, c);
  const OptimConfig o = optim_from(job, c);
  const auto rows = degree_sweep(a, b, degrees, o, q);

  if (c.format == "json") {
    emit_json(c, {{"start", coeff_array(a)}, {"end", coeff_array(b)}, {"degrees", degrees},
                  {"optim", to_json(o)}, {"quad", to_json(q)}, {"result", sweep_json(rows)}});
  } else {
    emit(c, "degree,fval,initial_lc,iters,converged\n" + sweep_csv(rows, false, a.degree(), ""));
  }
  print_summary(rows, a.degree(), false);
  return any_ok(rows) ? 0 : 3;
}

int cmd_tables(int which, bool full, const std::string& pair, const Common& c) {
  Common cc = c;
  if (!cc.speed_scale) cc.speed_scale = "point_count";
  const QuadConfig q = quad_from(Json::object(), cc);
  const OptimConfig o = optim_from(Json::object(), cc);

  struct Block {
    std::string pair;
    MonicPoly a, b;
    std::vector<int> degrees;
  };
  std::vector<Block> blocks;
  const bool bound = which == 3 || which == 5;
  std::vector<int> low = bound ? std::vector<int>{1, 2, 3, 4, 5} : std::vector<int>{2, 3};
  if (full) {
    low.push_back(10);
    low.push_back(20);
  }
  namespace ref = reference;
  switch (which) {
    case 1:
      blocks.push_back({"p1p2", ref::pair_p1(), ref::pair_p2(), low});
      break;
    case 2:
      blocks.push_back({"q1q2", ref::pair_q1(), ref::pair_q2(), low});
      break;
    case 3:
      if (pair != "p3p4") blocks.push_back({"p1p2", ref::pair_p1(), ref::pair_p2(), low});
      if (pair != "p1p2") blocks.push_back({"p3p4", ref::pair_p3(), ref::pair_p4(), {1, 2, 3}});
      break;
    case 5:
      blocks.push_back({"q1q2", ref::pair_q1(), ref::pair_q2(), low});
      break;
    default:
      throw InputError("tables: expected 1, 2, 3 or 5");
  }

  std::string csv = bound ? "degree,fval,initial_lc,iters,converged,step_bound,pair\n"
                          : "degree,fval,initial_lc,iters,converged\n";
  Json out = Json::array();
  bool ok = false;
  for (const auto& blk : blocks) {
    const auto rows = degree_sweep(blk.a, blk.b, blk.degrees, o, q);
    csv += sweep_csv(rows, bound, blk.a.degree(), blk.pair);
    out.push_back({{"pair", blk.pair}, {"rows", sweep_json(rows)}});
    std::cerr << "table " << which << " " << blk.pair << "\n";
    print_summary(rows, blk.a.degree(), bound);
    ok = ok || any_ok(rows);
  }
  if (c.format == "json") emit_json(c, {{"table", which}, {"optim", to_json(o)}, {"quad", to_json(q)}, {"result", out}});
  else emit(c, csv);
  return ok ? 0 : 3;
}

// --- track / bound ------------------------------------------------------

int cmd_track(const std::string& file, const Common& c) {
  const Json job = read_json(file);
  check_keys(job, {"path", "x0", "track", "result"}, "track job");
  const ParamPath path = path_from_json(need(job, "path", "track job"));
  const Json& x0j = need(job, "x0", "track job");
  if (!x0j.is_number()) throw InputError("track job: x0 must be a number");
  const TrackConfig t = job.contains("track") ? track_config_from_json(job["track"]) : TrackConfig{};
  const TrackReport r = track(path, x0j.get<double>(), t);

  if (c.format == "json") {
    emit_json(c, {{"path", to_json(path)}, {"x0", x0j.get<double>()}, {"track", to_json(t)}, {"result", to_json(r)}});
  } else {
    std::string s = "i,t,x,residual\n";
    for (std::size_t i = 0; i < r.grid.size(); ++i)
      s += std::to_string(i) + "," + num(r.grid[i]) + "," + num(r.roots[i]) + "," + num(r.residuals[i]) + "\n";
    emit(c, s);
  }
  std::cerr << "steps " << r.steps << "  final root " << num(r.final_root) << "\n";
  return 0;
}

int cmd_bound(const std::string& file, std::optional<double> lc, std::optional<int> space_degree,
              const Common& c) {
  double value = 0.0;
  int n = 0;
  if (!file.empty()) {
    const Json doc = read_json(file);
    Json job = Json::object();
    Json path_j = doc;
    if (doc.is_object() && doc.contains("path")) {
      check_keys(doc, {"path", "quad"}, "bound job");
      path_j = doc["path"];
      job = doc;
    }
    const ParamPath path = path_from_json(path_j);
    value = condition_length(path, quad_from(job, c)).value;
    n = path.dimension();
  } else {
    if (!lc || !space_degree) throw InputError("bound: give a path file or both --lc and --space-degree");
    value = *lc;
    n = *space_degree;
  }
  if (value < 0 || n < 1) throw InputError("bound: need lc >= 0 and space degree >= 1");
  const double k = step_bound(value, n);
  if (c.format == "json") emit_json(c, {{"lc", value}, {"space_degree", n}, {"step_bound", k}});
  else emit(c, "lc,space_degree,step_bound\n" + num(value) + "," + std::to_string(n) + "," + num(k) + "\n");
  std::cerr << "k/C " << fixed4(k) << "\n";
  return 0;
}

// --- plot-data ----------------------------------------------------------

int cmd_plot(const std::string& file, int samples, const Common& c) {
  if (samples < 2) throw InputError("plot-data: --samples must be at least 2");
  const Json doc = read_json(file);
  Json job = Json::object();
  Json path_j = doc;
  if (doc.is_object() && doc.contains("path")) {
    check_keys(doc, {"path", "quad"}, "plot job");
    path_j = doc["path"];
    job = doc;
  }
  const ParamPath path = path_from_json(path_j);
  const QuadConfig q = quad_from(job, c);
  const double scale = speed_factor(path, q);

  std::ostringstream s;
  s << "t";
  for (int i = 0; i < path.dimension(); ++i) s << ",c" << i;
  s << ",cond_cn,integrand\n";
  for (int k = 0; k < samples; ++k) {
    const double t = k == samples - 1 ? 1.0 : static_cast<double>(k) / (samples - 1);
    const CoeffVec x = path_position(path, t);
    const CoeffVec v = path_velocity(path, t);
    const double cc = cond_cn(MonicPoly(x));
    s << num(t);
    for (double xi : x) s << "," << num(xi);
    s << "," << num(cc) << "," << num(scale * norm2(v) / cc) << "\n";
  }
  emit(c, s.str());
  return 0;
}

void add_common(CLI::App* app, Common& c) {
  app->add_option("--quad-rel-tol", c.quad_rel_tol, "Quadrature relative tolerance");
  app->add_option("--seed", c.seed, "Restart seed");
  app->add_option("--threads", c.threads, "Worker cap for parallel restarts")->envname("CONDGEO_THREADS");
  app->add_option("--speed-scale", c.speed_scale, "Bezier speed normalization")
      ->check(CLI::IsMember({"degree", "point_count"}));
  app->add_option("--out", c.out, "Write output to this file");
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Condition lengths and condition geodesics of monic polynomial paths"};
  app.require_subcommand(1);
  Common c;
  std::string file;
  std::optional<std::string> metric;
  int which = 0;
  bool full = false;
  std::string pair = "both";
  std::optional<double> lc;
  std::optional<int> space_degree;
  int samples = 201;

  auto* length = app.add_subcommand("length", "Length of a path");
  length->add_option("file", file, "Path or length job JSON")->required();
  length->add_option("--metric", metric, "condition, toy or euclidean")
      ->check(CLI::IsMember({"condition", "toy", "euclidean"}));
  add_common(length, c);

  auto* optimize = app.add_subcommand("optimize", "Optimize interior control points");
  optimize->add_option("file", file, "Optimize job JSON")->required();
  add_common(optimize, c);

  auto* perturb = app.add_subcommand("perturb", "Perturbation study around a reference net");
  perturb->add_option("file", file, "Perturb job JSON")->required();
  add_common(perturb, c);

  auto* sweep = app.add_subcommand("sweep", "Optimize a range of curve degrees");
  sweep->add_option("file", file, "Sweep job JSON")->required();
  add_common(sweep, c);

  auto* tables = app.add_subcommand("tables", "Regenerate a results table (1, 2, 3 or 5)");
  tables->add_option("which", which, "Table number")->required()->check(CLI::IsMember({1, 2, 3, 5}));
  tables->add_flag("--full", full, "Include curve degrees 10 and 20");
  tables->add_option("--pair", pair, "Endpoint pair for table 3")->check(CLI::IsMember({"p1p2", "p3p4", "both"}));
  add_common(tables, c);

  auto* trk = app.add_subcommand("track", "Prediction-correction root tracking");
  trk->add_option("file", file, "Track job JSON")->required();
  add_common(trk, c);

  auto* bound = app.add_subcommand("bound", "Normalized step-count bound D^1.5 * lc");
  bound->add_option("file", file, "Path JSON (optional)");
  bound->add_option("--lc", lc, "Condition length");
  bound->add_option("--space-degree", space_degree, "Polynomial degree D");
  add_common(bound, c);

  auto* plot = app.add_subcommand("plot-data", "Sample position, cond_cn and integrand");
  plot->add_option("file", file, "Path JSON")->required();
  plot->add_option("--samples", samples, "Number of uniform samples");
  add_common(plot, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (length->parsed()) return cmd_length(file, metric, c);
    if (optimize->parsed()) return cmd_optimize(file, c);
    if (perturb->parsed()) return cmd_perturb(file, c);
    if (sweep->parsed()) return cmd_sweep(file, c);
    if (tables->parsed()) return cmd_tables(which, full, pair, c);
    if (trk->parsed()) return cmd_track(file, c);
    if (bound->parsed()) return cmd_bound(file, lc, space_degree, c);
    if (plot->parsed()) return cmd_plot(file, samples, c);
  } catch (const SingularPathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SingularError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const StepCollapseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const DerivativeZeroError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
