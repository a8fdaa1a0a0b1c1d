#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "forge/graph.hpp"
#include "forge/minors.hpp"
#include "forge/rational.hpp"

namespace forge {

using Json = nlohmann::json;

/// Deterministic, replayable building blocks of the pipelines. Each takes
/// JSON inputs (graphs as graph6) and parameters (rationals as strings) and
/// returns a JSON result; re-running with the same arguments gives the same
/// result byte for byte.
///
/// Known operations: vertex_connectivity, contains_minor, gadget_conn,
/// gadget_random, gadget_shape, pasting_bound, sample_gnm, property_q,
/// induced_minor_sweep, pasting_transfer, constants, isolated_sample,
/// list_chromatic, mader.
Json run_operation(const std::string& op, const Json& inputs, const Json& params);

std::vector<std::string> operation_names();

// JSON conversions shared with the CLI.

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);
Json set_to_json(const VertexSet& s);
VertexSet set_from_json(std::size_t universe, const Json& j);
Json model_to_json(const MinorModel& m);
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);
/// Rounded to 12 significant digits so dumps are stable.
Json float_to_json(double x);

}  // namespace forge
