#pragma once

#include <vector>

#include "milnor/cone.hpp"
#include "milnor/newton.hpp"

namespace milnor {

struct HilbertBasis {
  std::vector<MVec> elements;  // sorted
};

// Minimal generating set of the semigroup of lattice points of a pointed cone.
HilbertBasis hilbert_basis(const MCone& c);
// Same for cones on the N side; used to pick subdivision rays.
std::vector<NVec> hilbert_basis_n(const NCone& c);

// Newton polyhedron of the function whose support is the Hilbert basis of the dual cone.
NewtonPolyhedron companion_polyhedron(const HilbertBasis& hb, const NCone& sigma);

// Pulling triangulation from the lexicographically least ray; simplicial cones are returned unchanged.
template <Side S>
std::vector<Cone<S>> pulling_triangulation(const Cone<S>& c);

}  // namespace milnor
