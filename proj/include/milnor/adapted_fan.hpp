#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "milnor/fan.hpp"
#include "milnor/newton.hpp"

namespace milnor {

class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RayPlace { Interior, BoundaryFace, BoundaryRay };

struct RayInfo {
  NVec ray;
  RayPlace place = RayPlace::Interior;
  int sigma_face = -1;  // index into sigma.faces(2) for rays in the relative interior of a 2-face
  Int hf, hg;
  FaceMeasures delta_f;  // measures of the face of the Newton polyhedron of f selected by the ray
  bool pertinent = false;
};

struct TwoConeInfo {
  std::array<int, 2> rays{};  // indices into the fan rays, sorted
  bool interior = false;
  bool cutting = false;
  bool pertinent = false;
  bool regular = false;
  FaceMeasures delta_f;
};

struct ClassifiedFan {
  Fan fan;
  std::vector<RayInfo> rays;  // aligned with fan.rays()
  std::vector<TwoConeInfo> two_cones;
  std::vector<std::array<int, 3>> three_cones;  // sorted ray indices
  std::vector<bool> zero_locus_faces;           // per 2-face of sigma: orbit lies in the zero locus of f

  int two_cone_index(int a, int b) const;
};

struct AdaptedFanOptions {
  std::size_t subdivision_budget = 20000;
  bool audit_each_subdivision = false;
};

struct AdaptedFanResult {
  Fan sigma_f;
  Fan sigma_g;
  Fan fbar;
  Fan fhat;  // simplicial
  ClassifiedFan adapted;
  std::size_t subdivisions = 0;
  // Fan-axiom violations recorded along the way; empty when every intermediate fan was valid.
  std::vector<std::string> audit;
};

AdaptedFanResult build_adapted_fan(const SupportedFunction& f, const NewtonPolyhedron& pf, const NewtonPolyhedron& pg,
                                   const AdaptedFanOptions& opts = {});

ClassifiedFan classify(const Fan& fan, const SupportedFunction& f, const NewtonPolyhedron& pf, const NewtonPolyhedron& pg);

// Cones that the adapted fan must have regular but does not; empty for a valid result.
std::vector<std::string> regularity_defects(const ClassifiedFan& c);

// Rays of the minimal regular subdivision of a 2-cone, in order from a to b, endpoints excluded.
std::vector<NVec> hj_subdivision_rays(const NVec& a, const NVec& b);

}  // namespace milnor
