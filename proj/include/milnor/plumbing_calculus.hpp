#pragma once

#include <string>
#include <utility>
#include <vector>

#include "milnor/graph_types.hpp"

namespace milnor {

struct ReductionStep {
  std::string move;  // "R0", "R1", "R3" or "R6"
  std::vector<int> site;
  std::string before;
  std::string after;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

// Reverses the orientation of the fibre over v: every non-loop edge at v changes sign.
PlumbGraph flip_vertex(const PlumbGraph& g, int v);
// Blow-down of a rational vertex of Euler number +-1 and valence at most 2.
PlumbGraph blow_down(const PlumbGraph& g, int v);
// Rational vertex of Euler number 0 with two distinct neighbours, both edges +: the neighbours merge.
PlumbGraph absorb_zero_chain(const PlumbGraph& g, int v);
// Rational leaf of Euler number 0: it and its neighbour w disappear, w's branches split off, and
// 2 g(w) copies of the vertex [0] are added.
PlumbGraph absorb_zero_leaf(const PlumbGraph& g, int v);

bool can_blow_down(const PlumbGraph& g, int v);
bool can_absorb_zero_chain(const PlumbGraph& g, int v);  // ignoring edge signs
bool can_absorb_zero_leaf(const PlumbGraph& g, int v);

std::pair<PlumbGraph, ReductionTrace> reduce(const PlumbGraph& g);
PlumbGraph replay(const PlumbGraph& g, const ReductionTrace& t);

struct GraphInvariants {
  std::vector<std::vector<Int>> matrix;  // rows and columns in vertex id order
  Int abs_det = 0;
  bool negative_definite = false;
  bool plus_forest = false;  // no cycles, no loops, every edge +
  bool h1_supported = false;
  Int h1_rank = 0;
  std::vector<Int> h1_torsion;  // elementary divisors > 1
};

GraphInvariants invariants(const PlumbGraph& g);

struct PlanarityVerdict {
  bool planar = false;
  // True when the reduced form is a forest or a single cycle, where it agrees with the normal form.
  bool decisive = false;
  std::string label() const { return decisive ? "planar-normal-form" : "reduced-form planarity"; }
};

PlanarityVerdict is_planar(const PlumbGraph& g);

bool is_forest(const PlumbGraph& g);
std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> m);
Int bareiss_det(std::vector<std::vector<Int>> m);

}  // namespace milnor
