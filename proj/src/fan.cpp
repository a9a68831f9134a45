#include "milnor/fan.hpp"

#include <algorithm>
#include <map>

#include "milnor/kernels.hpp"

namespace milnor {

Fan::Fan(NCone support, std::vector<NCone> maximal) : support_(std::move(support)), maximal_(std::move(maximal)) {
  std::sort(maximal_.begin(), maximal_.end());
  maximal_.erase(std::unique(maximal_.begin(), maximal_.end()), maximal_.end());
  for (const auto& c : maximal_) rays_.insert(rays_.end(), c.rays().begin(), c.rays().end());
  std::sort(rays_.begin(), rays_.end());
  rays_.erase(std::unique(rays_.begin(), rays_.end()), rays_.end());
}

std::vector<NCone> Fan::cones(int d) const {
  std::vector<NCone> out;
  for (const auto& c : maximal_) {
    auto fs = c.faces(d);
    out.insert(out.end(), fs.begin(), fs.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Fan::is_simplicial() const {
  return std::all_of(maximal_.begin(), maximal_.end(), [](const NCone& c) { return c.is_simplicial(); });
}

int Fan::ray_index(const NVec& r) const {
  auto it = std::lower_bound(rays_.begin(), rays_.end(), r);
  if (it == rays_.end() || !(*it == r)) return -1;
  return static_cast<int>(it - rays_.begin());
}

std::vector<std::string> Fan::violations() const {
  std::vector<std::string> out;
  if (maximal_.empty()) out.push_back("fan has no cones");
  for (const auto& c : maximal_) {
    if (c.dim() != 3) out.push_back("maximal cone " + to_string(c) + " is not three-dimensional");
    for (const auto& r : c.rays()) {
      if (!support_.contains(r)) out.push_back("ray " + to_string(r) + " lies outside the support");
    }
  }
  for (const auto& [i, j] : kernels::improper_pairs(maximal_)) {
    out.push_back("cones " + to_string(maximal_[i]) + " and " + to_string(maximal_[j]) + " meet improperly");
  }
  // Each wall is shared by two maximal cones, each boundary 2-cone belongs to one.
  std::map<NCone, int> incidence;
  for (const auto& c : maximal_) {
    for (const auto& f : c.faces(2)) ++incidence[f];
  }
  for (const auto& [f, count] : incidence) {
    bool boundary = !support_.in_relative_interior(f.interior_point());
    int expected = boundary ? 1 : 2;
    if (count != expected) {
      out.push_back("2-cone " + to_string(f) + " lies in " + std::to_string(count) + " maximal cones");
    }
  }
  return out;
}

NCone minimal_containing_cone(const NCone& t, const Fan& fan) {
  NVec x = t.interior_point();
  for (const auto& c : fan.maximal_cones()) {
    if (!c.contains(x)) continue;
    std::vector<NVec> on;
    for (const auto& r : c.rays()) {
      bool ok = true;
      for (const auto& f : c.facet_normals()) {
        if (pairing(f, x) == 0 && pairing(f, r) != 0) {
          ok = false;
          break;
        }
      }
      if (ok) on.push_back(r);
    }
    NCone face = NCone::generated_by(on);
    for (const auto& r : t.rays()) {
      if (!face.contains(r)) throw std::invalid_argument("minimal_containing_cone: cone straddles several cones");
    }
    return face;
  }
  throw std::invalid_argument("minimal_containing_cone: cone " + to_string(t) + " is outside the fan support");
}

NCone minimal_face_of(const NCone& sigma, const NVec& x) {
  if (!sigma.contains(x)) throw std::invalid_argument("minimal_face_of: vector outside the cone");
  Fan f(sigma, {sigma});
  return minimal_containing_cone(NCone::generated_by({x}), f);
}

Fan common_refinement(const Fan& a, const Fan& b) {
  if (!(a.support() == b.support())) throw std::invalid_argument("common_refinement: fans have different supports");
  std::vector<NCone> cells;
  for (const auto& ca : a.maximal_cones()) {
    for (const auto& cb : b.maximal_cones()) {
      NCone c = intersect(ca, cb);
      if (c.dim() == 3) cells.push_back(std::move(c));
    }
  }
  return Fan(a.support(), std::move(cells));
}

bool refines(const Fan& fine, const Fan& coarse) {
  if (!(fine.support() == coarse.support())) return false;
  for (const auto& c : fine.maximal_cones()) {
    bool inside = false;
    for (const auto& d : coarse.maximal_cones()) {
      if (std::all_of(c.rays().begin(), c.rays().end(), [&](const NVec& r) { return d.contains(r); })) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

Fan trivial_fan(const NCone& sigma) { return Fan(sigma, {sigma}); }

}  // namespace milnor
