#pragma once

#include <string>
#include <vector>

#include "milnor/cone.hpp"

namespace milnor {

// Finite fan whose support is a three-dimensional cone, stored by its maximal cones.
class Fan {
 public:
  Fan() = default;
  Fan(NCone support, std::vector<NCone> maximal);

  const NCone& support() const { return support_; }
  const std::vector<NCone>& maximal_cones() const { return maximal_; }
  const std::vector<NVec>& rays() const { return rays_; }

  // All cones of the given dimension, faces included, sorted and deduplicated.
  std::vector<NCone> cones(int d) const;
  bool is_simplicial() const;
  // Index of a ray, or -1.
  int ray_index(const NVec& r) const;

  // Human-readable violations of the fan axioms and of the support condition; empty if valid.
  std::vector<std::string> violations() const;

 private:
  NCone support_;
  std::vector<NCone> maximal_;
  std::vector<NVec> rays_;
};

// Smallest cone of the fan containing the cone t.
NCone minimal_containing_cone(const NCone& t, const Fan& fan);
// Smallest face of the support cone containing x.
NCone minimal_face_of(const NCone& sigma, const NVec& x);

Fan common_refinement(const Fan& a, const Fan& b);
bool refines(const Fan& fine, const Fan& coarse);

// Trivial fan made of the cone and its faces.
Fan trivial_fan(const NCone& sigma);

}  // namespace milnor
