#pragma once

#include <string>

#include <json.hpp>

#include "milnor/pipeline.hpp"

namespace milnor {

using Json = nlohmann::json;

// Parses and validates an input document; failures are PipelineError with stage "input".
ProblemInput parse_input(const std::string& text);

Json to_json(const Int& x);
Int int_from_json(const Json& j);

Json to_json(const ClassifiedFan& c);
Json to_json(const CurveConfigGraph& g);
Json to_json(const MultResult& m);
Json to_json(const PlumbGraph& g, const std::string& stage);
Json to_json(const ReductionTrace& t);
Json to_json(const GraphInvariants& inv);

ClassifiedFan fan_from_json(const Json& j);
CurveConfigGraph gcdt_from_json(const Json& j);
MultResult gmult_from_json(const Json& j);
PlumbGraph plumb_from_json(const Json& j);
ReductionTrace trace_from_json(const Json& j);

std::string to_dot(const ClassifiedFan& c);
std::string to_dot(const CurveConfigGraph& g);
std::string to_dot(const MultGraph& g);
std::string to_dot(const PlumbGraph& g, const std::string& stage);

// Stage document with every decoration; reduced also carries the trace, invariants and planarity.
Json stage_json(const Artifacts& a, Stage s);
std::string render(const Artifacts& a, Stage s, Emit e);

}  // namespace milnor
