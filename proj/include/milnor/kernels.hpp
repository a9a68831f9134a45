#pragma once

#include <utility>
#include <vector>

#include "milnor/cone.hpp"

// Data-parallel kernels. Each has an OpenMP version and a serial reference with identical output.
namespace milnor::kernels {

struct SimplexLattice {
  // Rays of a simplicial cone of dimension 2 or 3 and a basis of the saturated lattice of their span.
  std::vector<std::array<Int, 3>> rays;
  std::vector<std::array<Int, 3>> basis;
};

namespace serial {
// Lattice points of the half-open fundamental parallelepiped, origin included, sorted.
std::vector<std::array<Int, 3>> parallelepiped_points(const SimplexLattice& s);
// mask[i] is true when candidates[i] is not the sum of another candidate and a nonzero cone element.
std::vector<bool> irreducible_mask(const std::vector<MVec>& candidates, const MCone& cone);
std::vector<Int> min_pairings(const std::vector<MVec>& support, const std::vector<NVec>& directions);
// Pairs (i, j) whose intersection is not a common face of both cones.
std::vector<std::pair<std::size_t, std::size_t>> improper_pairs(const std::vector<NCone>& cones);
}  // namespace serial

namespace parallel {
std::vector<std::array<Int, 3>> parallelepiped_points(const SimplexLattice& s);
std::vector<bool> irreducible_mask(const std::vector<MVec>& candidates, const MCone& cone);
std::vector<Int> min_pairings(const std::vector<MVec>& support, const std::vector<NVec>& directions);
std::vector<std::pair<std::size_t, std::size_t>> improper_pairs(const std::vector<NCone>& cones);
}  // namespace parallel

using parallel::improper_pairs;
using parallel::irreducible_mask;
using parallel::min_pairings;
using parallel::parallelepiped_points;

}  // namespace milnor::kernels
