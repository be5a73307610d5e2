#pragma once

#include <json.hpp>

#include "condgeo/bezier.hpp"
#include "condgeo/condlength.hpp"
#include "condgeo/geodesic.hpp"
#include "condgeo/paths.hpp"
#include "condgeo/polyspace.hpp"
#include "condgeo/tracker.hpp"

namespace condgeo {

using Json = nlohmann::json;

// Readers validate the schema and reject unknown fields with InputError.

Json to_json(const MonicPoly& p);
MonicPoly monic_from_json(const Json& j);

Json to_json(const ControlNet& net);
ControlNet net_from_json(const Json& j);

Json to_json(const ParamPath& path);
ParamPath path_from_json(const Json& j);

Json to_json(const QuadConfig& cfg);
QuadConfig quad_config_from_json(const Json& j);

Json to_json(const QuadResult& r);
QuadResult quad_result_from_json(const Json& j);

Json to_json(const OptimConfig& cfg);
OptimConfig optim_config_from_json(const Json& j);

Json to_json(const OptimResult& r);
OptimResult optim_result_from_json(const Json& j);

Json to_json(const TrackConfig& cfg);
TrackConfig track_config_from_json(const Json& j);

Json to_json(const TrackReport& r);
TrackReport track_report_from_json(const Json& j);

}  // namespace condgeo
