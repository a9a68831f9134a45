#pragma once

#include <string>
#include <vector>

#include "milnor/adapted_fan.hpp"
#include "milnor/graph_types.hpp"
#include "milnor/hj_strings.hpp"
#include "milnor/newton.hpp"

namespace milnor {

CurveConfigGraph build_gcdt(const ClassifiedFan& cf, const NewtonPolyhedron& pf, const NewtonPolyhedron& pg);

struct MultResult {
  MultGraph graph;
  std::vector<HJString> strings;  // every string inserted, in insertion order
};

MultResult build_gmult(const CurveConfigGraph& g);

// Vertex ids of the result are the indices of the corresponding multiplicity-graph vertices.
PlumbGraph build_gplomb(const MultGraph& g);

// Violated structural invariants of a curve-configuration graph; empty when all hold.
std::vector<std::string> gcdt_violations(const CurveConfigGraph& g);
// Per-vertex balance defects k*mu + sum(eps*mu_i), computed against the multiplicity graph.
std::vector<std::string> balance_violations(const MultGraph& m, const PlumbGraph& p);

}  // namespace milnor
