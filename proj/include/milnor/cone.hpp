#pragma once

#include <stdexcept>
#include <vector>

#include "milnor/lattice.hpp"

namespace milnor {

class NotStronglyConvex : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Strongly convex rational polyhedral cone in a rank-3 lattice, stored by its primitive rays.
template <Side S>
class Cone {
 public:
  using Vec = Vec3<S>;
  using Dual = Vec3<opposite(S)>;

  Cone() = default;

  static Cone generated_by(std::vector<Vec> generators);
  // {x : <a, x> >= 0 for all a}; the result must be strongly convex.
  static Cone from_halfspaces(const std::vector<Dual>& inequalities);

  const std::vector<Vec>& rays() const { return rays_; }
  int dim() const { return dim_; }

  bool contains(const Vec& x) const;
  bool in_relative_interior(const Vec& x) const;
  // Inequalities whose conjunction cuts out the cone (equations appear as opposite pairs).
  std::vector<Dual> halfspaces() const;
  // Primitive inner facet normals; only for three-dimensional cones.
  const std::vector<Dual>& facet_normals() const { return ineqs_; }
  // Primitive linear forms vanishing on the span.
  const std::vector<Dual>& equations() const { return eqs_; }

  Vec interior_point() const;
  std::vector<Cone> faces(int d) const;
  bool has_face(const Cone& f) const;

  bool is_simplicial() const { return static_cast<int>(rays_.size()) == dim_; }
  // Index of the lattice spanned by the rays in its saturation (simplicial cones only).
  Int multiplicity() const;
  bool is_regular() const;

  friend bool operator==(const Cone& a, const Cone& b) { return a.rays_ == b.rays_; }
  friend bool operator<(const Cone& a, const Cone& b) { return a.rays_ < b.rays_; }

 private:
  std::vector<Vec> rays_;
  int dim_ = 0;
  std::vector<Dual> ineqs_;
  std::vector<Dual> eqs_;

  void build_description();
};

using NCone = Cone<Side::N>;
using MCone = Cone<Side::M>;

// Extreme rays of the pointed cone {x : <a, x> >= 0}.
template <Side S>
std::vector<Vec3<S>> extreme_rays(const std::vector<Vec3<opposite(S)>>& inequalities);

template <Side S>
Cone<opposite(S)> dual_cone(const Cone<S>& c);

template <Side S>
Cone<S> intersect(const Cone<S>& a, const Cone<S>& b);

std::string to_string(const NCone& c);
std::string to_string(const MCone& c);

}  // namespace milnor
