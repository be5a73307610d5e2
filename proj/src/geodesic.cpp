#include "condgeo/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <random>

#include "condgeo/errors.hpp"
#include "condgeo/optimize.hpp"
#include "condgeo/paths.hpp"

namespace condgeo {

namespace {

constexpr double kRestartJitter = 0.05;
constexpr double kInitialSimplexStep = 0.1;

double objective(const ControlNet& net0, std::span<const double> coords, const QuadConfig& qcfg) {
  try {
    return condition_length(ParamPath(with_interior(net0, coords)), qcfg).value;
  } catch (const SingularPathError&) {
  } catch (const ConvergenceError&) {
  } catch (const DomainError&) {
  }
  return std::numeric_limits<double>::infinity();
}

optim::Minimum local_search(const ControlNet& net0, std::vector<double> start,
                            const OptimConfig& ocfg, const QuadConfig& qcfg) {
  auto f = [&](std::span<const double> x) { return objective(net0, x, qcfg); };
  if (ocfg.method == OptimMethod::quasi_newton) {
    optim::BfgsOptions o;
    o.max_iters = ocfg.max_iters;
    o.x_tol = ocfg.x_tol;
    o.fd_step = ocfg.fd_step;
    return optim::bfgs(f, std::move(start), o);
  }
  optim::NelderMeadOptions o;
  o.max_iters = ocfg.max_iters;
  o.f_tol = ocfg.f_tol;
  o.x_tol = ocfg.x_tol;
  o.initial_step = kInitialSimplexStep;
  return optim::nelder_mead(f, std::move(start), o);
}

}  // namespace

void OptimConfig::validate() const {
  if (!(f_tol > 0.0) || !(x_tol > 0.0) || !(fd_step > 0.0))
    throw InputError("OptimConfig: tolerances must be strictly positive");
  if (restarts < 1) throw InputError("OptimConfig: restarts must be at least 1");
  if (max_iters < 1) throw InputError("OptimConfig: max_iters must be at least 1");
  if (threads < 1) throw InputError("OptimConfig: threads must be at least 1");
}

std::vector<double> interior_coordinates(const ControlNet& net) {
  std::vector<double> out;
  for (int i = 1; i < net.curve_degree(); ++i) {
    auto c = net.point(i).coeffs();
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

ControlNet with_interior(const ControlNet& net, std::span<const double> coords) {
  const auto n = static_cast<std::size_t>(net.space_degree());
  const int d = net.curve_degree();
  if (coords.size() != n * static_cast<std::size_t>(d - 1))
    throw DomainError("with_interior: coordinate count does not match the net");
  std::vector<MonicPoly> pts;
  pts.reserve(static_cast<std::size_t>(d) + 1);
  pts.push_back(net.point(0));
  for (int i = 1; i < d; ++i) {
    auto first = coords.begin() + static_cast<std::ptrdiff_t>(n * static_cast<std::size_t>(i - 1));
    pts.emplace_back(CoeffVec(first, first + static_cast<std::ptrdiff_t>(n)));
  }
  pts.push_back(net.point(d));
  return ControlNet(std::move(pts));
}

OptimResult optimize_geodesic(const ControlNet& net0, const OptimConfig& ocfg,
                              const QuadConfig& qcfg) {
  ocfg.validate();
  qcfg.validate();
  if (net0.curve_degree() < 2) throw InputError("no interior points to optimize");
  const double initial_lc = condition_length(ParamPath(net0), qcfg).value;
  const auto base = interior_coordinates(net0);

  auto run = [&](int r) {
    auto start = base;
    if (r > 0) {
      std::mt19937_64 rng(ocfg.seed + static_cast<std::uint64_t>(r));
      std::normal_distribution<double> jitter(0.0, kRestartJitter);
      for (double& v : start) v += jitter(rng);
    }
    return local_search(net0, std::move(start), ocfg, qcfg);
  };

  std::vector<optim::Minimum> runs(static_cast<std::size_t>(ocfg.restarts));
  if (ocfg.threads <= 1) {
    for (int r = 0; r < ocfg.restarts; ++r) runs[static_cast<std::size_t>(r)] = run(r);
  } else {
    for (int first = 0; first < ocfg.restarts; first += ocfg.threads) {
      const int last = std::min(ocfg.restarts, first + ocfg.threads);
      std::vector<std::future<optim::Minimum>> batch;
      for (int r = first; r < last; ++r) batch.push_back(std::async(std::launch::async, run, r));
      for (int r = first; r < last; ++r)
        runs[static_cast<std::size_t>(r)] = batch[static_cast<std::size_t>(r - first)].get();
    }
  }

  std::size_t best = 0;
  int evals = 0;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    evals += runs[r].evaluations;
    if (runs[r].f < runs[best].f) best = r;
  }
  if (!std::isfinite(runs[best].f))
    throw SingularPathError("every restart drove the curve onto the discriminant locus");

  OptimResult out{with_interior(net0, runs[best].x), 0.0, initial_lc, runs[best].iterations, evals,
                  runs[best].converged};
  out.fval = condition_length(ParamPath(out.optimal_net), qcfg).value;
  return out;
}

std::vector<PerturbationRow> perturbation_study(const ControlNet& reference,
                                                const std::vector<NamedNet>& nets,
                                                const QuadConfig& qcfg) {
  const double ref_lc = condition_length(ParamPath(reference), qcfg).value;
  std::vector<PerturbationRow> rows;
  rows.reserve(nets.size());
  for (const auto& [id, net] : nets) {
    if (net.point(0) != reference.point(0) ||
        net.point(net.curve_degree()) != reference.point(reference.curve_degree()))
      throw DomainError("perturbation_study: net '" + id + "' does not share the endpoints");
    const double lc = condition_length(ParamPath(net), qcfg).value;
    rows.push_back({id, net_distance(net, reference), lc, std::abs(lc - ref_lc)});
  }
  return rows;
}

ControlNet default_initial_net(const MonicPoly& start, const MonicPoly& end, int curve_degree) {
  if (start.degree() != end.degree()) throw DomainError("default_initial_net: degree mismatch");
  if (curve_degree < 1) throw DomainError("default_initial_net: curve degree must be positive");
  std::vector<MonicPoly> pts{start};
  const auto n = static_cast<std::size_t>(start.degree());
  for (int i = 1; i < curve_degree; ++i) {
    const double s = static_cast<double>(i) / curve_degree;
    CoeffVec c(n);
    for (std::size_t j = 0; j < n; ++j) c[j] = (1.0 - s) * start.vec()[j] + s * end.vec()[j];
    c.back() -= 0.5;
    pts.emplace_back(std::move(c));
  }
  pts.push_back(end);
  return ControlNet(std::move(pts));
}

std::vector<SweepRow> degree_sweep(const MonicPoly& start, const MonicPoly& end,
                                   const std::vector<int>& degrees, const OptimConfig& ocfg,
                                   const QuadConfig& qcfg) {
  if (start == end) throw DomainError("degree_sweep: endpoints coincide");
  std::vector<SweepRow> rows;
  std::optional<ControlNet> previous;
  for (int d : degrees) {
    SweepRow row;
    row.degree = d;
    try {
      const ControlNet net0 = default_initial_net(start, end, d);
      row.initial_lc = condition_length(ParamPath(net0), qcfg).value;
      if (d == 1) {
        row.fval = row.initial_lc;
        row.converged = true;
        row.net = net0;
      } else {
        OptimResult best = optimize_geodesic(net0, ocfg, qcfg);
        if (previous && previous->curve_degree() < d) {
          ControlNet seed = *previous;
          while (seed.curve_degree() < d) seed = degree_elevate(seed);
          if (seed.curve_degree() >= 2) {
            OptimResult alt = optimize_geodesic(seed, ocfg, qcfg);
            if (alt.fval < best.fval) best = alt;
          }
        }
        row.fval = best.fval;
        row.iterations = best.iterations;
        row.converged = best.converged;
        row.net = best.optimal_net;
      }
      if (!previous || previous->curve_degree() < d) previous = row.net;
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace condgeo
