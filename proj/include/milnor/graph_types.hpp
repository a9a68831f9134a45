#pragma once

#include <string>
#include <vector>

#include "milnor/lattice.hpp"

namespace milnor {

enum class Sign { Plus, Minus };

inline int value(Sign s) { return s == Sign::Plus ? 1 : -1; }
inline Sign sign_of(int v) { return v > 0 ? Sign::Plus : Sign::Minus; }
inline Sign operator*(Sign a, Sign b) { return a == b ? Sign::Plus : Sign::Minus; }
inline Sign operator-(Sign a) { return a == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline char symbol(Sign s) { return s == Sign::Plus ? '+' : '-'; }

struct Edge {
  int u = 0;
  int v = 0;
  Sign sign = Sign::Plus;
  std::size_t count = 1;  // number of parallel edges this record stands for
};

enum class CurveKind { Exceptional, Strict, Arrowhead };

// Vertex of the curve-configuration graph: a component of the curve configuration decorated by
// (m1; m2, n2), or an arrowhead (1; 0, 1).
struct CurveVertex {
  CurveKind kind = CurveKind::Strict;
  Int genus = 0;
  Int m1 = 0, m2 = 0, n2 = 0;
  std::string source;  // the cone this vertex comes from
  int component = 0;   // index among the components of one strict curve
};

struct CurveConfigGraph {
  std::vector<CurveVertex> vertices;
  std::vector<Edge> edges;
};

// Vertex of a decorated graph of a resolution: a curve with genus and multiplicity, or an arrowhead.
struct MultVertex {
  bool arrowhead = false;
  Int genus = 0;
  Int mu = 0;
  std::string origin;
};

struct MultGraph {
  std::vector<MultVertex> vertices;
  std::vector<Edge> edges;  // every record has count 1
};

struct PlumbVertex {
  int id = 0;
  Int genus = 0;
  Int euler = 0;
};

// Plumbing graph; vertex ids are stable under reduction moves and edges refer to ids.
struct PlumbGraph {
  std::vector<PlumbVertex> vertices;  // sorted by id
  std::vector<Edge> edges;            // every record has count 1, u <= v

  const PlumbVertex* find(int id) const;
  PlumbVertex* find(int id);
  void normalize();  // sorts vertices and edges
  friend bool operator==(const PlumbGraph& a, const PlumbGraph& b);
};

}  // namespace milnor
