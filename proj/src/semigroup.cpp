#include "milnor/semigroup.hpp"

#include <algorithm>

#include "milnor/kernels.hpp"

namespace milnor {

template <Side S>
std::vector<Cone<S>> pulling_triangulation(const Cone<S>& c) {
  if (c.dim() < 3 || c.is_simplicial()) return {c};
  const auto& apex = c.rays().front();
  std::vector<Cone<S>> out;
  for (const auto& f : c.facet_normals()) {
    if (pair_any<S>(f, apex) == 0) continue;
    std::vector<Vec3<S>> gens{apex};
    for (const auto& r : c.rays()) {
      if (pair_any<S>(f, r) == 0) gens.push_back(r);
    }
    out.push_back(Cone<S>::generated_by(gens));
  }
  std::sort(out.begin(), out.end());
  return out;
}

template std::vector<NCone> pulling_triangulation<Side::N>(const NCone&);
template std::vector<MCone> pulling_triangulation<Side::M>(const MCone&);

HilbertBasis hilbert_basis(const MCone& c) {
  HilbertBasis hb;
  if (c.dim() == 0) return hb;
  if (c.dim() == 1) {
    hb.elements = c.rays();
    return hb;
  }
  std::vector<MVec> candidates = c.rays();
  for (const auto& s : pulling_triangulation(c)) {
    kernels::SimplexLattice lat;
    for (const auto& r : s.rays()) lat.rays.push_back(r.c);
    if (s.dim() == 3) {
      lat.basis = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    } else {
      auto [b1, b2] = kernel_basis(s.equations().front().c);
      lat.basis = {b1, b2};
    }
    for (const auto& p : kernels::parallelepiped_points(lat)) {
      MVec v(p);
      if (!v.is_zero()) candidates.push_back(v);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  auto mask = kernels::irreducible_mask(candidates, c);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (mask[i]) hb.elements.push_back(candidates[i]);
  }
  return hb;
}

std::vector<NVec> hilbert_basis_n(const NCone& c) {
  std::vector<MVec> rays;
  for (const auto& r : c.rays()) rays.push_back(transpose(r));
  auto hb = hilbert_basis(MCone::generated_by(rays));
  std::vector<NVec> out;
  for (const auto& e : hb.elements) out.push_back(transpose(e));
  return out;
}

NewtonPolyhedron companion_polyhedron(const HilbertBasis& hb, const NCone& sigma) {
  return NewtonPolyhedron(sigma, hb.elements);
}

}  // namespace milnor
