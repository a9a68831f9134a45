#include "milnor/adapted_fan.hpp"

#include <algorithm>
#include <map>

#include "milnor/hj_strings.hpp"
#include "milnor/semigroup.hpp"

namespace milnor {

int ClassifiedFan::two_cone_index(int a, int b) const {
  if (a > b) std::swap(a, b);
  std::array<int, 2> key{a, b};
  auto it = std::lower_bound(two_cones.begin(), two_cones.end(), key,
                             [](const TwoConeInfo& t, const std::array<int, 2>& k) { return t.rays < k; });
  if (it == two_cones.end() || it->rays != key) return -1;
  return static_cast<int>(it - two_cones.begin());
}

std::vector<NVec> hj_subdivision_rays(const NVec& a, const NVec& b) {
  MVec n = cross(a, b);
  if (n.is_zero()) throw std::invalid_argument("hj_subdivision_rays: rays are parallel");
  auto [e1, e2] = kernel_basis(primitive(n).c);
  NVec b1(e1), b2(e2);
  MVec w = cross(b1, b2);
  Int w2 = dot_same(w, w);
  auto coords = [&](const NVec& r) {
    return std::array<Int, 2>{Int(dot_same(cross(r, b2), w) / w2), Int(dot_same(cross(b1, r), w) / w2)};
  };
  auto A = coords(a), B = coords(b);
  // T maps A to (0, 1).
  Int g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), A[0].get_mpz_t(), A[1].get_mpz_t());
  if (g != 1) throw std::invalid_argument("hj_subdivision_rays: ray is not primitive");
  std::array<std::array<Int, 2>, 2> t{{{A[1], -A[0]}, {x, y}}};
  auto apply = [](const std::array<std::array<Int, 2>, 2>& m, const std::array<Int, 2>& v) {
    return std::array<Int, 2>{Int(m[0][0] * v[0] + m[0][1] * v[1]), Int(m[1][0] * v[0] + m[1][1] * v[1])};
  };
  auto tb = apply(t, B);
  if (tb[0] < 0) {
    t[0][0] = -t[0][0];
    t[0][1] = -t[0][1];
    tb[0] = -tb[0];
  }
  Int nn = tb[0];
  if (nn == 1) return {};
  // Shear fixing (0, 1) so that B becomes (n, -q), 0 < q < n.
  Int q;
  Int negw = -tb[1];
  mpz_fdiv_r(q.get_mpz_t(), negw.get_mpz_t(), nn.get_mpz_t());
  Int k = (-q - tb[1]) / nn;
  t[1][0] += k * t[0][0];
  t[1][1] += k * t[0][1];
  auto ks = negative_cf(nn, q);
  Int det = t[0][0] * t[1][1] - t[0][1] * t[1][0];
  std::array<std::array<Int, 2>, 2> inv{{{t[1][1] * det, -t[0][1] * det}, {-t[1][0] * det, t[0][0] * det}}};
  std::vector<std::array<Int, 2>> u{{0, 1}, {1, 0}};
  for (const auto& kk : ks) {
    const auto& p = u[u.size() - 1];
    const auto& pp = u[u.size() - 2];
    u.push_back({Int(kk * p[0] - pp[0]), Int(kk * p[1] - pp[1])});
  }
  if (u.back()[0] != nn || u.back()[1] != -q) throw std::logic_error("hj_subdivision_rays: recurrence does not reach the far ray");
  std::vector<NVec> out;
  for (std::size_t i = 1; i + 1 < u.size(); ++i) {
    auto c = apply(inv, u[i]);
    out.push_back(c[0] * b1 + c[1] * b2);
  }
  return out;
}

namespace {

struct WorkFan {
  NCone sigma;
  std::vector<NVec> rays;
  std::vector<std::array<int, 3>> cones;

  int index_of(const NVec& r) const {
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (rays[i] == r) return static_cast<int>(i);
    }
    return -1;
  }

  int add_ray(const NVec& r) {
    int i = index_of(r);
    if (i >= 0) return i;
    rays.push_back(r);
    return static_cast<int>(rays.size()) - 1;
  }

  void add_cone(const NCone& c) {
    if (!c.is_simplicial() || c.dim() != 3) throw std::logic_error("WorkFan: cone is not a simplicial 3-cone");
    std::array<int, 3> idx{add_ray(c.rays()[0]), add_ray(c.rays()[1]), add_ray(c.rays()[2])};
    std::sort(idx.begin(), idx.end());
    cones.push_back(idx);
  }

  void stellar(const NVec& rho) {
    if (index_of(rho) >= 0) throw std::logic_error("stellar subdivision at an existing ray " + to_string(rho));
    int k = add_ray(rho);
    std::vector<std::array<int, 3>> out;
    bool hit = false;
    for (const auto& c : cones) {
      const NVec& a = rays[c[0]];
      const NVec& b = rays[c[1]];
      const NVec& d = rays[c[2]];
      Int det = det3(a, b, d);
      int s = sgn(det);
      std::array<Int, 3> lam{det3(rho, b, d) * s, det3(a, rho, d) * s, det3(a, b, rho) * s};
      if (lam[0] < 0 || lam[1] < 0 || lam[2] < 0) {
        out.push_back(c);
        continue;
      }
      hit = true;
      for (std::size_t i = 0; i < 3; ++i) {
        if (lam[i] == 0) continue;
        auto nc = c;
        nc[i] = k;
        std::sort(nc.begin(), nc.end());
        out.push_back(nc);
      }
    }
    if (!hit) throw std::logic_error("stellar subdivision at a ray outside the fan");
    cones = std::move(out);
  }

  Fan to_fan() const {
    std::vector<NCone> cs;
    cs.reserve(cones.size());
    for (const auto& c : cones) cs.push_back(NCone::generated_by({rays[c[0]], rays[c[1]], rays[c[2]]}));
    return Fan(sigma, std::move(cs));
  }
};

WorkFan triangulated(const Fan& fan) {
  WorkFan w{fan.support(), {}, {}};
  for (const auto& c : fan.maximal_cones()) {
    for (const auto& t : pulling_triangulation(c)) w.add_cone(t);
  }
  return w;
}

int affine_dim(const std::vector<MVec>& pts) {
  std::vector<MVec> d;
  for (const auto& p : pts) d.push_back(p - pts.front());
  return rank_of(d);
}

FaceMeasures measures_at(const NewtonPolyhedron& pf, const NVec& v, bool compact) {
  PolyFace face;
  face.points = pf.argmin(v);
  face.compact = compact;
  if (compact) return lattice_measures(face);
  FaceMeasures m;
  m.dim = affine_dim(face.points);
  return m;
}

bool forbidden_point(const NCone& sigma, const std::vector<NCone>& faces2, const std::vector<bool>& vf, const NVec& p) {
  NCone mf = minimal_face_of(sigma, p);
  if (mf.dim() != 2) return false;
  auto it = std::find(faces2.begin(), faces2.end(), mf);
  return !vf[static_cast<std::size_t>(it - faces2.begin())];
}

bool needs_regular_three_cone(const ClassifiedFan& c, const std::array<int, 3>& t) {
  for (int i : t) {
    if (c.rays[i].pertinent) return true;
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      int k = c.two_cone_index(t[i], t[j]);
      const auto& info = c.two_cones[k];
      if (info.cutting || info.pertinent) return true;
    }
  }
  return false;
}

std::vector<NCone> offending_cones(const ClassifiedFan& c) {
  std::vector<NCone> out;
  const auto& rays = c.fan.rays();
  for (const auto& t : c.two_cones) {
    if ((t.cutting || t.pertinent) && !t.regular) out.push_back(NCone::generated_by({rays[t.rays[0]], rays[t.rays[1]]}));
  }
  std::sort(out.begin(), out.end());
  std::vector<NCone> threes;
  for (const auto& t : c.three_cones) {
    NCone cone = NCone::generated_by({rays[t[0]], rays[t[1]], rays[t[2]]});
    if (!cone.is_regular() && needs_regular_three_cone(c, t)) threes.push_back(cone);
  }
  std::sort(threes.begin(), threes.end());
  out.insert(out.end(), threes.begin(), threes.end());
  return out;
}

Int max_multiplicity_after(const NCone& c, const NVec& p) {
  Int best = 0;
  const auto& r = c.rays();
  if (c.dim() == 2) {
    for (std::size_t i = 0; i < 2; ++i) {
      Int m = minor_gcd(p.c, r[1 - i].c);
      if (m > best) best = m;
    }
    return best;
  }
  for (std::size_t i = 0; i < 3; ++i) {
    auto q = r;
    q[i] = p;
    Int m = abs(det3(q[0], q[1], q[2]));
    if (m > best) best = m;
  }
  return best;
}

NVec choose_point(const NCone& offender, const ClassifiedFan& c, const std::vector<NCone>& faces2) {
  std::vector<NVec> candidates;
  for (const auto& h : hilbert_basis_n(offender)) {
    if (std::find(offender.rays().begin(), offender.rays().end(), h) != offender.rays().end()) continue;
    if (forbidden_point(c.fan.support(), faces2, c.zero_locus_faces, h)) continue;
    candidates.push_back(h);
  }
  if (candidates.empty()) throw std::logic_error("no admissible subdivision point in " + to_string(offender));
  std::sort(candidates.begin(), candidates.end());
  NVec best = candidates.front();
  Int best_m = max_multiplicity_after(offender, best);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    Int m = max_multiplicity_after(offender, candidates[i]);
    if (m < best_m) {
      best_m = m;
      best = candidates[i];
    }
  }
  return best;
}

void audit_fan(const Fan& fan, const std::string& stage, std::vector<std::string>& audit) {
  for (const auto& v : fan.violations()) audit.push_back(stage + ": " + v);
}

}  // namespace

ClassifiedFan classify(const Fan& fan, const SupportedFunction& f, const NewtonPolyhedron& pf, const NewtonPolyhedron& pg) {
  ClassifiedFan c;
  c.fan = fan;
  const NCone& sigma = fan.support();
  auto faces2 = sigma.faces(2);
  for (const auto& face : faces2) c.zero_locus_faces.push_back(vanishes_on_orbit(f, face));
  for (const auto& r : fan.rays()) {
    RayInfo info;
    info.ray = r;
    NCone mf = minimal_face_of(sigma, r);
    if (mf.dim() == 3) {
      info.place = RayPlace::Interior;
    } else if (mf.dim() == 2) {
      info.place = RayPlace::BoundaryFace;
      info.sigma_face = static_cast<int>(std::find(faces2.begin(), faces2.end(), mf) - faces2.begin());
    } else {
      info.place = RayPlace::BoundaryRay;
    }
    info.hf = pf.height(r);
    info.hg = pg.height(r);
    info.delta_f = measures_at(pf, r, info.place == RayPlace::Interior);
    info.pertinent = info.place == RayPlace::Interior && info.delta_f.dim >= 1;
    c.rays.push_back(std::move(info));
  }
  for (const auto& t : fan.cones(2)) {
    TwoConeInfo info;
    info.rays = {fan.ray_index(t.rays()[0]), fan.ray_index(t.rays()[1])};
    std::sort(info.rays.begin(), info.rays.end());
    NVec v = t.interior_point();
    info.interior = sigma.in_relative_interior(v);
    RayPlace p0 = c.rays[info.rays[0]].place, p1 = c.rays[info.rays[1]].place;
    info.cutting = info.interior && ((p0 == RayPlace::Interior && p1 == RayPlace::BoundaryFace) ||
                                     (p1 == RayPlace::Interior && p0 == RayPlace::BoundaryFace));
    info.delta_f = measures_at(pf, v, info.interior);
    info.pertinent = info.interior && info.delta_f.dim >= 1;
    info.regular = t.is_regular();
    c.two_cones.push_back(std::move(info));
  }
  std::sort(c.two_cones.begin(), c.two_cones.end(), [](const TwoConeInfo& a, const TwoConeInfo& b) { return a.rays < b.rays; });
  for (const auto& t : fan.maximal_cones()) {
    std::array<int, 3> idx{fan.ray_index(t.rays()[0]), fan.ray_index(t.rays()[1]), fan.ray_index(t.rays()[2])};
    std::sort(idx.begin(), idx.end());
    c.three_cones.push_back(idx);
  }
  std::sort(c.three_cones.begin(), c.three_cones.end());
  return c;
}

std::vector<std::string> regularity_defects(const ClassifiedFan& c) {
  std::vector<std::string> out;
  if (!c.fan.is_simplicial()) out.push_back("fan is not simplicial");
  for (const auto& cone : offending_cones(c)) out.push_back("cone " + to_string(cone) + " must be regular");
  for (const auto& r : c.rays) {
    if (r.place == RayPlace::BoundaryFace && !c.zero_locus_faces[static_cast<std::size_t>(r.sigma_face)]) {
      out.push_back("ray " + to_string(r.ray) + " subdivides a face outside the zero locus");
    }
  }
  return out;
}

AdaptedFanResult build_adapted_fan(const SupportedFunction& f, const NewtonPolyhedron& pf, const NewtonPolyhedron& pg,
                                   const AdaptedFanOptions& opts) {
  AdaptedFanResult res;
  res.sigma_f = normal_fan(pf);
  res.sigma_g = normal_fan(pg);
  audit_fan(res.sigma_f, "normal fan of f", res.audit);
  audit_fan(res.sigma_g, "normal fan of g", res.audit);
  res.fbar = common_refinement(res.sigma_f, res.sigma_g);
  audit_fan(res.fbar, "common refinement", res.audit);
  if (!refines(res.fbar, res.sigma_f) || !refines(res.fbar, res.sigma_g)) res.audit.push_back("common refinement: not a refinement");

  WorkFan work = triangulated(res.fbar);
  // Regularize interior 2-cones lying in walls of the normal fan of f. A wall on the boundary of
  // sigma selects a half-line face, on whose orbit f is a monomial, so it is left alone.
  {
    Fan tri = work.to_fan();
    for (const auto& t : tri.cones(2)) {
      if (t.is_regular()) continue;
      if (!f.sigma.in_relative_interior(t.interior_point())) continue;
      if (minimal_containing_cone(t, res.sigma_f).dim() != 2) continue;
      for (const auto& r : hj_subdivision_rays(t.rays()[0], t.rays()[1])) {
        work.stellar(r);
        if (++res.subdivisions > opts.subdivision_budget) throw BudgetExhausted("subdivision budget exhausted");
      }
    }
  }
  res.fhat = work.to_fan();
  audit_fan(res.fhat, "wall regularization", res.audit);
  if (!refines(res.fhat, res.fbar)) res.audit.push_back("wall regularization: not a refinement");

  auto faces2 = f.sigma.faces(2);
  for (;;) {
    Fan current = work.to_fan();
    ClassifiedFan cls = classify(current, f, pf, pg);
    auto offenders = offending_cones(cls);
    if (offenders.empty()) {
      res.adapted = std::move(cls);
      break;
    }
    NVec p = choose_point(offenders.front(), cls, faces2);
    work.stellar(p);
    if (++res.subdivisions > opts.subdivision_budget) throw BudgetExhausted("subdivision budget exhausted");
    if (opts.audit_each_subdivision) audit_fan(work.to_fan(), "subdivision at " + to_string(p), res.audit);
  }
  audit_fan(res.adapted.fan, "adapted fan", res.audit);
  if (!refines(res.adapted.fan, res.fhat)) res.audit.push_back("adapted fan: not a refinement");
  for (const auto& d : regularity_defects(res.adapted)) res.audit.push_back("adapted fan: " + d);
  return res;
}

}  // namespace milnor
