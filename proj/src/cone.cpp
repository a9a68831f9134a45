#include "milnor/cone.hpp"

#include <algorithm>

namespace milnor {

namespace {

template <Side S>
std::vector<Vec3<S>> dedupe_primitive(const std::vector<Vec3<S>>& vs) {
  std::vector<Vec3<S>> out;
  out.reserve(vs.size());
  for (const auto& v : vs) {
    if (!v.is_zero()) out.push_back(primitive(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <Side S>
Vec3<S> unit(std::size_t j) {
  Vec3<S> e{0, 0, 0};
  e[j] = 1;
  return e;
}

}  // namespace

template <Side S>
Cone<S> Cone<S>::generated_by(std::vector<Vec> generators) {
  auto gens = dedupe_primitive(generators);
  Cone c;
  int r = rank_of(gens);
  if (r == 0) {
    c.build_description();
    return c;
  }
  if (r == 1) {
    if (gens.size() != 1) throw NotStronglyConvex("cone contains a line");
    c.rays_ = gens;
  } else if (r == 2) {
    bool found = false;
    for (std::size_t i = 0; i < gens.size() && !found; ++i) {
      for (std::size_t j = i + 1; j < gens.size() && !found; ++j) {
        auto w = transpose(cross(gens[i], gens[j]));
        if (w.is_zero()) continue;
        bool ok = true;
        for (const auto& g : gens) {
          if (dot_same(transpose(cross(g, gens[j])), w) < 0 || dot_same(transpose(cross(gens[i], g)), w) < 0) {
            ok = false;
            break;
          }
        }
        if (ok) {
          c.rays_ = {gens[i], gens[j]};
          found = true;
        }
      }
    }
    if (!found) throw NotStronglyConvex("two-dimensional generators do not span a pointed cone");
  } else {
    std::vector<Dual> facets;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        Dual n = cross(gens[i], gens[j]);
        if (n.is_zero()) continue;
        bool nonneg = true, nonpos = true;
        for (const auto& g : gens) {
          int s = sgn(pair_any<S>(n, g));
          if (s < 0) nonneg = false;
          if (s > 0) nonpos = false;
        }
        if (nonneg) facets.push_back(primitive(n));
        if (nonpos) facets.push_back(primitive(-n));
      }
    }
    facets = dedupe_primitive(facets);
    for (const auto& g : gens) {
      bool in_all = true;
      for (const auto& f : facets) {
        if (pair_any<S>(f, g) != 0) {
          in_all = false;
          break;
        }
      }
      if (in_all) throw NotStronglyConvex("cone contains a line");
    }
    for (const auto& g : gens) {
      int count = 0;
      for (const auto& f : facets) {
        if (pair_any<S>(f, g) == 0) ++count;
      }
      if (count >= 2) c.rays_.push_back(g);
    }
  }
  std::sort(c.rays_.begin(), c.rays_.end());
  c.build_description();
  return c;
}

template <Side S>
void Cone<S>::build_description() {
  dim_ = rank_of(rays_);
  ineqs_.clear();
  eqs_.clear();
  if (dim_ == 0) {
    for (std::size_t j = 0; j < 3; ++j) eqs_.push_back(unit<opposite(S)>(j));
  } else if (dim_ == 1) {
    const Vec& r = rays_[0];
    for (std::size_t j = 0; j < 3; ++j) {
      Dual e = cross(r, unit<S>(j));
      if (!e.is_zero()) eqs_.push_back(primitive(e));
    }
    eqs_ = dedupe_primitive(eqs_);
    ineqs_.push_back(primitive(transpose(r)));
  } else if (dim_ == 2) {
    const Vec& r1 = rays_[0];
    const Vec& r2 = rays_[1];
    Dual n = cross(r1, r2);
    eqs_.push_back(primitive(n));
    ineqs_.push_back(primitive(cross(transpose(n), r1)));
    ineqs_.push_back(primitive(cross(r2, transpose(n))));
  } else {
    std::vector<Dual> facets;
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      for (std::size_t j = i + 1; j < rays_.size(); ++j) {
        Dual n = cross(rays_[i], rays_[j]);
        if (n.is_zero()) continue;
        bool nonneg = true, nonpos = true;
        for (const auto& g : rays_) {
          int s = sgn(pair_any<S>(n, g));
          if (s < 0) nonneg = false;
          if (s > 0) nonpos = false;
        }
        if (nonneg) facets.push_back(primitive(n));
        if (nonpos) facets.push_back(primitive(-n));
      }
    }
    ineqs_ = dedupe_primitive(facets);
  }
}

template <Side S>
Cone<S> Cone<S>::from_halfspaces(const std::vector<Dual>& inequalities) {
  return generated_by(extreme_rays<S>(inequalities));
}

template <Side S>
bool Cone<S>::contains(const Vec& x) const {
  for (const auto& e : eqs_) {
    if (pair_any<S>(e, x) != 0) return false;
  }
  for (const auto& a : ineqs_) {
    if (pair_any<S>(a, x) < 0) return false;
  }
  return true;
}

template <Side S>
bool Cone<S>::in_relative_interior(const Vec& x) const {
  if (dim_ == 0) return x.is_zero();
  for (const auto& e : eqs_) {
    if (pair_any<S>(e, x) != 0) return false;
  }
  for (const auto& a : ineqs_) {
    if (pair_any<S>(a, x) <= 0) return false;
  }
  return true;
}

template <Side S>
std::vector<typename Cone<S>::Dual> Cone<S>::halfspaces() const {
  std::vector<Dual> out = ineqs_;
  for (const auto& e : eqs_) {
    out.push_back(e);
    out.push_back(-e);
  }
  return out;
}

template <Side S>
typename Cone<S>::Vec Cone<S>::interior_point() const {
  Vec s{0, 0, 0};
  for (const auto& r : rays_) s += r;
  return s;
}

template <Side S>
std::vector<Cone<S>> Cone<S>::faces(int d) const {
  std::vector<Cone> out;
  if (d < 0 || d > dim_) return out;
  if (d == dim_) return {*this};
  if (d == 0) return {Cone()};
  if (d == 1) {
    for (const auto& r : rays_) out.push_back(generated_by({r}));
    return out;
  }
  // d == 2 < dim_ == 3
  for (const auto& f : ineqs_) {
    std::vector<Vec> on;
    for (const auto& r : rays_) {
      if (pair_any<S>(f, r) == 0) on.push_back(r);
    }
    out.push_back(generated_by(on));
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <Side S>
bool Cone<S>::has_face(const Cone& f) const {
  for (const auto& g : faces(f.dim())) {
    if (g == f) return true;
  }
  return false;
}

template <Side S>
Int Cone<S>::multiplicity() const {
  if (!is_simplicial()) throw std::logic_error("multiplicity of a non-simplicial cone");
  if (dim_ <= 1) return 1;
  if (dim_ == 2) return minor_gcd(rays_[0].c, rays_[1].c);
  Int d = det3(rays_[0], rays_[1], rays_[2]);
  return abs(d);
}

template <Side S>
bool Cone<S>::is_regular() const {
  return is_simplicial() && multiplicity() == 1;
}

template <Side S>
std::vector<Vec3<S>> extreme_rays(const std::vector<Vec3<opposite(S)>>& inequalities) {
  auto ineqs = dedupe_primitive(inequalities);
  std::vector<Vec3<S>> out;
  for (std::size_t i = 0; i < ineqs.size(); ++i) {
    for (std::size_t j = i + 1; j < ineqs.size(); ++j) {
      Vec3<S> r = cross(ineqs[i], ineqs[j]);
      if (r.is_zero()) continue;
      for (int s = 0; s < 2; ++s) {
        Vec3<S> d = s == 0 ? r : -r;
        bool ok = true;
        for (const auto& a : ineqs) {
          if (pair_any<S>(a, d) < 0) {
            ok = false;
            break;
          }
        }
        if (ok) out.push_back(primitive(d));
      }
    }
  }
  return dedupe_primitive(out);
}

template <Side S>
Cone<opposite(S)> dual_cone(const Cone<S>& c) {
  if (c.dim() != 3) throw std::invalid_argument("dual_cone: the dual of a lower-dimensional cone contains a line");
  return Cone<opposite(S)>::generated_by(c.facet_normals());
}

template <Side S>
Cone<S> intersect(const Cone<S>& a, const Cone<S>& b) {
  auto h = a.halfspaces();
  auto hb = b.halfspaces();
  h.insert(h.end(), hb.begin(), hb.end());
  return Cone<S>::generated_by(extreme_rays<S>(h));
}

template <Side S>
static std::string cone_str(const Cone<S>& c) {
  std::string s = "<";
  for (std::size_t i = 0; i < c.rays().size(); ++i) {
    if (i) s += ",";
    s += to_string(c.rays()[i]);
  }
  return s + ">";
}

std::string to_string(const NCone& c) { return cone_str(c); }
std::string to_string(const MCone& c) { return cone_str(c); }

template class Cone<Side::N>;
template class Cone<Side::M>;
template std::vector<NVec> extreme_rays<Side::N>(const std::vector<MVec>&);
template std::vector<MVec> extreme_rays<Side::M>(const std::vector<NVec>&);
template MCone dual_cone<Side::N>(const NCone&);
template NCone dual_cone<Side::M>(const MCone&);
template NCone intersect<Side::N>(const NCone&, const NCone&);
template MCone intersect<Side::M>(const MCone&, const MCone&);

}  // namespace milnor
