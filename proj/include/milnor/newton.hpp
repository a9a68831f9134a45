#pragma once

#include <optional>
#include <string>
#include <vector>

#include "milnor/fan.hpp"
#include "milnor/polynomial.hpp"

namespace milnor {

// Function on the toric germ given by its support; coefficients are optional and only used by the
// nondegeneracy check.
struct SupportedFunction {
  NCone sigma;
  std::vector<MVec> support;
  std::vector<std::optional<GaussRational>> coefficients;  // empty, or one per support point
};

// Conv(support + dual cone) for a three-dimensional cone sigma.
class NewtonPolyhedron {
 public:
  NewtonPolyhedron(NCone sigma, std::vector<MVec> support);

  const NCone& sigma() const { return sigma_; }
  const MCone& dual() const { return dual_; }
  const std::vector<MVec>& support() const { return support_; }
  // Support points that are vertices of the polyhedron, sorted.
  const std::vector<MVec>& vertices() const { return vertices_; }
  // Normal cone of each vertex intersected with sigma.
  const std::vector<NCone>& vertex_cones() const { return vertex_cones_; }

  Int height(const NVec& v) const;
  std::vector<MVec> argmin(const NVec& v) const;

 private:
  NCone sigma_;
  MCone dual_;
  std::vector<MVec> support_;
  std::vector<MVec> vertices_;
  std::vector<NCone> vertex_cones_;
};

struct PolyFace {
  std::vector<MVec> points;  // support points on the face, sorted
  int dim = 0;
  bool compact = true;
  NCone normal_cone;  // cone of the normal fan whose relative interior selects the face
};

struct FaceMeasures {
  int dim = 0;
  Int length = 0;    // integral length of an edge
  Int interior = 0;  // interior lattice points of a polygon
  Int boundary = 0;  // boundary lattice points of a polygon
  Int volume = 0;    // normalized area of a polygon
};

Fan normal_fan(const NewtonPolyhedron& p);
PolyFace face_for_cone(const NewtonPolyhedron& p, const Fan& normal, const NCone& t);
FaceMeasures lattice_measures(const PolyFace& face);

std::vector<Point2> convex_hull(std::vector<Point2> pts);
// Twice the Euclidean area, so the standard triangle has volume 1.
Int normalized_area(const std::vector<Point2>& pts);
Int mixed_volume_2d(const std::vector<Point2>& p, const std::vector<Point2>& q);
// Mixed volume of the faces of two polyhedra selected by v, computed in the lattice orthogonal to v.
Int mixed_volume_at(const NewtonPolyhedron& f, const NewtonPolyhedron& g, const NVec& v);

enum class HypothesisKind { SupportOutsideDual, ZeroInSupport, Unsuitable, SmoothingViolated };

struct HypothesisViolation {
  HypothesisKind kind;
  std::string detail;
};

struct HypothesisReport {
  std::vector<HypothesisViolation> violations;
  bool ok() const { return violations.empty(); }
};

HypothesisReport check_hypotheses(const SupportedFunction& f);

// Faces of sigma whose torus orbit lies in the zero locus of f: those orthogonal to no support point.
bool vanishes_on_orbit(const SupportedFunction& f, const NCone& face);

enum class FaceVerdict { Nondegenerate, Degenerate, AssumedGeneric };

struct FaceCheck {
  std::vector<MVec> points;
  int dim = 0;
  FaceVerdict verdict = FaceVerdict::AssumedGeneric;
};

struct NndReport {
  std::vector<FaceCheck> faces;
  bool nondegenerate() const;
};

NndReport check_nnd(const SupportedFunction& f);

std::string to_string(FaceVerdict v);

}  // namespace milnor
