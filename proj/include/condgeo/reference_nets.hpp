#pragma once

#include <string>
#include <vector>

#include "condgeo/bezier.hpp"
#include "condgeo/geodesic.hpp"
#include "condgeo/paths.hpp"

// Worked-example data: initial nets, reported optima and perturbed nets for
// the quadratic space (endpoints x^2 -+ x - 1) and the cubic space
// (endpoints x^3 -+ x^2 - x + 2).
namespace condgeo::reference {

// Quadratic space, degree-2 curve.
ControlNet quad2_initial();          // (-1,-1), (0,-2), (1,-1)
ControlNet quad2_reported_optimum(); // interior (0, -1.4407)
std::vector<NamedNet> quad2_optimum_perturbations();  // p1, p2
std::vector<NamedNet> quad2_initial_perturbations();  // q1, q2

// Quadratic space, degree-3 curve.
ControlNet quad3_initial();
ControlNet quad3_reported_optimum();
std::vector<NamedNet> quad3_optimum_perturbations();  // p1, p2, p3
std::vector<NamedNet> quad3_initial_perturbations();  // q1, q2

// Quadratic space, degree 10 and 20 starting nets.
ControlNet quad10_initial();
ControlNet quad20_initial();

// Cubic space, degree-2 curve.
ControlNet cubic2_initial();
ControlNet cubic2_reported_optimum();
std::vector<NamedNet> cubic2_optimum_perturbations();  // p1, p2, p3
std::vector<NamedNet> cubic2_initial_perturbations();  // q1..q4

// Cubic space, degree-3 curve.
ControlNet cubic3_initial();
ControlNet cubic3_reported_optimum();
std::vector<NamedNet> cubic3_optimum_perturbations();  // p1..p4
std::vector<NamedNet> cubic3_initial_perturbations();  // q1..q4

// Cubic space, degree 10 and 20 starting nets.
ControlNet cubic10_initial();
ControlNet cubic20_initial();

// Endpoint pairs of the homotopy tables.
MonicPoly pair_p1();  // x^2 - x - 1
MonicPoly pair_p2();  // x^2 + x - 1
MonicPoly pair_p3();  // x^2 - x - 0.1
MonicPoly pair_p4();  // x^2 + x - 0.1
MonicPoly pair_q1();  // x^3 - x^2 - x + 2
MonicPoly pair_q2();  // x^3 + x^2 - x + 2

// Toy-plane paths from (-1,0) to (1,0).
ParamPath toy_polyline();  // through (0,1)
ParamPath toy_arc();       // unit circle through (0,-1)

// Quadratic space paths from (-1,-1) to (1,-1) through (0,-2).
ParamPath quad_arc();
ParamPath quad_polyline();

}  // namespace condgeo::reference
