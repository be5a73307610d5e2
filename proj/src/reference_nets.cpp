#include "condgeo/reference_nets.hpp"

#include <numbers>

namespace condgeo::reference {

namespace {

// Rows are control points; each row lists the non-leading coefficients.
ControlNet net(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<MonicPoly> pts;
  for (auto r : rows) pts.emplace_back(CoeffVec(r));
  return ControlNet(std::move(pts));
}

// Net from columns as printed: first list holds every point's first
// coefficient, and so on.
ControlNet from_columns(std::initializer_list<std::initializer_list<double>> coords) {
  std::vector<std::vector<double>> c;
  for (auto r : coords) c.emplace_back(r);
  std::vector<MonicPoly> pts;
  for (std::size_t i = 0; i < c.front().size(); ++i) {
    CoeffVec p;
    for (const auto& row : c) p.push_back(row[i]);
    pts.emplace_back(std::move(p));
  }
  return ControlNet(std::move(pts));
}

}  // namespace

ControlNet quad2_initial() { return net({{-1, -1}, {0, -2}, {1, -1}}); }
ControlNet quad2_reported_optimum() { return net({{-1, -1}, {0, -1.4407}, {1, -1}}); }

std::vector<NamedNet> quad2_optimum_perturbations() {
  return {{"p1", net({{-1, -1}, {0, -1.4}, {1, -1}})}, {"p2", net({{-1, -1}, {0, -1.5}, {1, -1}})}};
}

std::vector<NamedNet> quad2_initial_perturbations() {
  return {{"q1", net({{-1, -1}, {0, -1.9}, {1, -1}})}, {"q2", net({{-1, -1}, {0, -2.1}, {1, -1}})}};
}

ControlNet quad3_initial() { return net({{-1, -1}, {-0.5, -2}, {0.5, -2.5}, {1, -1}}); }
ControlNet quad3_reported_optimum() {
  return net({{-1, -1}, {-0.3753, -1.2910}, {0.3753, -1.2909}, {1, -1}});
}

std::vector<NamedNet> quad3_optimum_perturbations() {
  return {{"p1", net({{-1, -1}, {-0.3753, -1.2}, {0.3753, -1.2}, {1, -1}})},
          {"p2", net({{-1, -1}, {-0.3753, -1.35}, {0.3753, -1.35}, {1, -1}})},
          {"p3", net({{-1, -1}, {-0.4, -1.25}, {0.38, -1.26}, {1, -1}})}};
}

std::vector<NamedNet> quad3_initial_perturbations() {
  return {{"q1", net({{-1, -1}, {-0.5, -1.9}, {0.5, -2.4}, {1, -1}})},
          {"q2", net({{-1, -1}, {-0.5, -2.1}, {0.5, -2.6}, {1, -1}})}};
}

ControlNet quad10_initial() {
  return from_columns({{-1.0, -0.8, -0.6, -0.4, -0.2, 0.0, 0.2, 0.4, 0.6, 0.8, 1.0},
                       {-1.0, 0.0, -2.0, -1.0, -3.0, 0.0, -1.0, -2.0, 0.0, -3.0, -1.0}});
}

ControlNet quad20_initial() {
  return from_columns({{-1.0, -0.9, -0.8, -0.7, -0.6, -0.5, -0.4, -0.3, -0.2, -0.1, 0.0,
                        0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0},
                       {-1.0, 0.0, -2.0, -3.0, -4.0, -2.0, 0.0, -3.0, -5.0, -1.0, -3.0,
                        -2.0, -5.0, -1.0, -2.0, 0.0, -2.0, 0.0, -3.0, -2.0, -1.0}});
}

ControlNet cubic2_initial() { return net({{-1, -1, 2}, {0, -2, 2}, {1, -1, 2}}); }
ControlNet cubic2_reported_optimum() {
  return net({{-1, -1, 2}, {-0.0381, -0.9521, 2.3306}, {1, -1, 2}});
}

std::vector<NamedNet> cubic2_optimum_perturbations() {
  // p2's middle coefficient is -1: distance 0.0479 to the optimum.
  return {{"p1", net({{-1, -1, 2}, {0, -0.9521, 2.3306}, {1, -1, 2}})},
          {"p2", net({{-1, -1, 2}, {-0.0381, -1, 2.3306}, {1, -1, 2}})},
          {"p3", net({{-1, -1, 2}, {-0.0381, -0.9521, 2.2}, {1, -1, 2}})}};
}

std::vector<NamedNet> cubic2_initial_perturbations() {
  return {{"q1", net({{-1, -1, 2}, {0, -1.9, 2}, {1, -1, 2}})},
          {"q2", net({{-1, -1, 2}, {0, -2.1, 2}, {1, -1, 2}})},
          {"q3", net({{-1, -1, 2}, {0.1, -2, 2}, {1, -1, 2}})},
          {"q4", net({{-1, -1, 2}, {-0.1, -2, 2}, {1, -1, 2}})}};
}

ControlNet cubic3_initial() {
  return net({{-1, -1, 2}, {-0.5, -2, 2}, {0.5, -2.5, 2}, {1, -1, 2}});
}

ControlNet cubic3_reported_optimum() {
  return net({{-1, -1, 2}, {-0.4513, -0.9453, 2.1910}, {0.2635, -0.9944, 2.2461}, {1, -1, 2}});
}

std::vector<NamedNet> cubic3_optimum_perturbations() {
  return {
      {"p1", net({{-1, -1, 2}, {-0.5513, -0.9453, 2.1910}, {0.1635, -0.9944, 2.2461}, {1, -1, 2}})},
      {"p2", net({{-1, -1, 2}, {-0.3513, -0.9453, 2.1910}, {0.3635, -0.9944, 2.2461}, {1, -1, 2}})},
      {"p3", net({{-1, -1, 2}, {-0.4513, -0.8453, 2.1910}, {0.2635, -0.8944, 2.2461}, {1, -1, 2}})},
      {"p4", net({{-1, -1, 2}, {-0.4513, -1.0453, 2.1910}, {0.2635, -1.0044, 2.2461}, {1, -1, 2}})}};
}

std::vector<NamedNet> cubic3_initial_perturbations() {
  return {{"q1", net({{-1, -1, 2}, {-0.6, -2, 2}, {0.4, -2.5, 2}, {1, -1, 2}})},
          {"q2", net({{-1, -1, 2}, {-0.5, -2.1, 2}, {0.5, -2.6, 2}, {1, -1, 2}})},
          {"q3", net({{-1, -1, 2}, {-0.4, -2, 2}, {0.6, -2.5, 2}, {1, -1, 2}})},
          {"q4", net({{-1, -1, 2}, {-0.5, -1.9, 2}, {0.5, -2.4, 2}, {1, -1, 2}})}};
}

ControlNet cubic10_initial() {
  return from_columns(
      {{-1.0, 0.6294, 0.8116, -0.7460, 0.8268, 0.2647, -0.8049, -0.4430, 0.0938, 0.9150, 1.0},
       {-1.0, 0.9298, -0.6848, 0.9412, 0.9143, -0.0292, 0.6006, -0.7162, -0.1565, 0.8315, -1.0},
       {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}});
}

ControlNet cubic20_initial() {
  return from_columns({{-1.0, 0.5844, 0.9190, 0.3115, -0.9286, 0.6983, 0.8680, 0.3575, 0.5155,
                        0.4863, -0.2155, 0.3110, -0.6576, 0.4121, -0.9363, -0.4462, -0.9077,
                        -0.8057, 0.6469, 0.3897, 1.0},
                       {-1.0, -0.3658, 0.9004, -0.9311, -0.1225, -0.2369, 0.5310, 0.5904, -0.6263,
                        -0.0205, -0.1088, 0.2926, 0.4187, 0.5094, -0.4479, 0.3594, 0.3102,
                        -0.6748, -0.7620, -0.0033, -1.0},
                       {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}});
}

MonicPoly pair_p1() { return MonicPoly{-1.0, -1.0}; }
MonicPoly pair_p2() { return MonicPoly{1.0, -1.0}; }
MonicPoly pair_p3() { return MonicPoly{-1.0, -0.1}; }
MonicPoly pair_p4() { return MonicPoly{1.0, -0.1}; }
MonicPoly pair_q1() { return MonicPoly{-1.0, -1.0, 2.0}; }
MonicPoly pair_q2() { return MonicPoly{1.0, -1.0, 2.0}; }

ParamPath toy_polyline() { return ParamPath(Polyline{{{-1.0, 0.0}, {0.0, -1.0}, {1.0, 0.0}}}); }

ParamPath toy_arc() { return ParamPath(Arc{0.0, 0.0, 1.0, -std::numbers::pi, 0.0}); }

ParamPath quad_arc() { return ParamPath(Arc{0.0, -1.0, 1.0, -std::numbers::pi, 0.0}); }

ParamPath quad_polyline() { return ParamPath(Polyline{{{-1.0, -1.0}, {0.0, -2.0}, {1.0, -1.0}}}); }

}  // namespace condgeo::reference
