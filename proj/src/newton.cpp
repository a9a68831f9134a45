#include "milnor/newton.hpp"

#include <algorithm>
#include <stdexcept>

#include "milnor/kernels.hpp"

namespace milnor {

NewtonPolyhedron::NewtonPolyhedron(NCone sigma, std::vector<MVec> support) : sigma_(std::move(sigma)) {
  if (sigma_.dim() != 3) throw std::invalid_argument("NewtonPolyhedron: cone must be three-dimensional");
  if (support.empty()) throw std::invalid_argument("NewtonPolyhedron: empty support");
  dual_ = dual_cone(sigma_);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  for (const auto& s : support) {
    if (!dual_.contains(s)) throw std::invalid_argument("NewtonPolyhedron: support point " + to_string(s) + " is outside the dual cone");
  }
  support_ = std::move(support);
  for (const auto& s : support_) {
    std::vector<MVec> ineqs = dual_.rays();
    for (const auto& t : support_) {
      if (!(t == s)) ineqs.push_back(t - s);
    }
    NCone c = NCone::generated_by(extreme_rays<Side::N>(ineqs));
    if (c.dim() == 3) {
      vertices_.push_back(s);
      vertex_cones_.push_back(std::move(c));
    }
  }
}

Int NewtonPolyhedron::height(const NVec& v) const {
  if (!sigma_.contains(v)) throw std::invalid_argument("height: direction " + to_string(v) + " is outside the cone");
  return kernels::serial::min_pairings(support_, {v}).front();
}

std::vector<MVec> NewtonPolyhedron::argmin(const NVec& v) const {
  Int h = height(v);
  std::vector<MVec> out;
  for (const auto& s : support_) {
    if (pairing(s, v) == h) out.push_back(s);
  }
  return out;
}

Fan normal_fan(const NewtonPolyhedron& p) { return Fan(p.sigma(), p.vertex_cones()); }

namespace {

int affine_dim(const std::vector<MVec>& pts) {
  std::vector<MVec> d;
  for (const auto& p : pts) d.push_back(p - pts.front());
  return rank_of(d);
}

}  // namespace

PolyFace face_for_cone(const NewtonPolyhedron& p, const Fan& normal, const NCone& t) {
  for (const auto& r : t.rays()) {
    if (!p.sigma().contains(r)) throw std::invalid_argument("face_for_cone: cone is not inside sigma");
  }
  PolyFace face;
  face.normal_cone = minimal_containing_cone(t, normal);
  NVec v = t.interior_point();
  face.points = p.argmin(v);
  face.dim = affine_dim(face.points);
  face.compact = p.sigma().in_relative_interior(v);
  return face;
}

std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto turn = [](const Point2& o, const Point2& a, const Point2& b) {
    return Int((a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x));
  };
  std::vector<Point2> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& q : pts) {
    while (k >= 2 && turn(h[k - 2], h[k - 1], q) <= 0) --k;
    h[k++] = q;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && turn(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

Int normalized_area(const std::vector<Point2>& pts) {
  auto h = convex_hull(pts);
  if (h.size() < 3) return 0;
  Int s = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto& a = h[i];
    const auto& b = h[(i + 1) % h.size()];
    s += a.x * b.y - a.y * b.x;
  }
  return abs(s);
}

Int mixed_volume_2d(const std::vector<Point2>& p, const std::vector<Point2>& q) {
  if (p.empty() || q.empty()) throw std::invalid_argument("mixed_volume_2d: empty polygon");
  auto hp = convex_hull(p), hq = convex_hull(q);
  std::vector<Point2> sum;
  for (const auto& a : hp) {
    for (const auto& b : hq) sum.push_back({a.x + b.x, a.y + b.y});
  }
  Int twice = normalized_area(sum) - normalized_area(hp) - normalized_area(hq);
  if (!mpz_even_p(twice.get_mpz_t())) throw std::logic_error("mixed_volume_2d: odd mixed area");
  return twice / 2;
}

Int mixed_volume_at(const NewtonPolyhedron& f, const NewtonPolyhedron& g, const NVec& v) {
  Chart2D chart = orthogonal_chart(v);
  auto project = [&](const std::vector<MVec>& pts) {
    MVec base = pts.front();
    std::vector<Point2> out;
    for (const auto& p : pts) out.push_back(chart.to_chart(p - base));
    return out;
  };
  return mixed_volume_2d(project(f.argmin(v)), project(g.argmin(v)));
}

FaceMeasures lattice_measures(const PolyFace& face) {
  if (!face.compact) throw std::invalid_argument("lattice_measures: face is not compact");
  if (face.points.empty()) throw std::invalid_argument("lattice_measures: empty face");
  FaceMeasures m;
  m.dim = affine_dim(face.points);
  if (m.dim == 0) return m;
  if (m.dim == 1) {
    const MVec& p0 = face.points.front();
    MVec d{0, 0, 0};
    for (const auto& p : face.points) {
      if (!(p == p0)) {
        d = primitive(p - p0);
        break;
      }
    }
    std::size_t j = 0;
    while (d[j] == 0) ++j;
    Int lo = 0, hi = 0;
    for (const auto& p : face.points) {
      Int t = (p - p0)[j] / d[j];
      if (t < lo) lo = t;
      if (t > hi) hi = t;
    }
    m.length = hi - lo;
    return m;
  }
  if (m.dim != 2) throw std::logic_error("lattice_measures: face of dimension three");
  Chart2D chart = face_chart(face.points);
  std::vector<Point2> pts;
  for (const auto& p : face.points) pts.push_back(chart.to_chart(p));
  auto h = convex_hull(pts);
  m.volume = normalized_area(h);
  Int b = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto& a = h[i];
    const auto& c = h[(i + 1) % h.size()];
    Int dx = c.x - a.x, dy = c.y - a.y, g;
    mpz_gcd(g.get_mpz_t(), dx.get_mpz_t(), dy.get_mpz_t());
    b += g;
  }
  m.boundary = b;
  // Pick: 2A = 2i + b - 2.
  m.interior = (m.volume - b + 2) / 2;
  return m;
}

bool vanishes_on_orbit(const SupportedFunction& f, const NCone& face) {
  for (const auto& s : f.support) {
    bool orth = std::all_of(face.rays().begin(), face.rays().end(), [&](const NVec& r) { return pairing(s, r) == 0; });
    if (orth) return false;
  }
  return true;
}

HypothesisReport check_hypotheses(const SupportedFunction& f) {
  HypothesisReport rep;
  MCone dual = dual_cone(f.sigma);
  for (const auto& s : f.support) {
    if (!dual.contains(s)) rep.violations.push_back({HypothesisKind::SupportOutsideDual, "support point " + to_string(s) + " is outside the dual cone"});
    if (s.is_zero()) rep.violations.push_back({HypothesisKind::ZeroInSupport, "the function does not vanish at the origin"});
  }
  // Each 2-face of the dual cone is orthogonal to a ray of sigma.
  for (const auto& u : f.sigma.rays()) {
    bool met = std::any_of(f.support.begin(), f.support.end(), [&](const MVec& s) { return pairing(s, u) == 0; });
    if (!met) rep.violations.push_back({HypothesisKind::Unsuitable, "support misses the dual face orthogonal to " + to_string(u)});
  }
  for (const auto& tau : f.sigma.faces(2)) {
    if (tau.is_regular()) continue;
    if (!vanishes_on_orbit(f, tau)) {
      rep.violations.push_back({HypothesisKind::SmoothingViolated, "support meets the dual face of the singular face " + to_string(tau)});
    }
  }
  return rep;
}

bool NndReport::nondegenerate() const {
  return std::none_of(faces.begin(), faces.end(), [](const FaceCheck& c) { return c.verdict == FaceVerdict::Degenerate; });
}

std::string to_string(FaceVerdict v) {
  switch (v) {
    case FaceVerdict::Nondegenerate:
      return "nondegenerate";
    case FaceVerdict::Degenerate:
      return "degenerate";
    case FaceVerdict::AssumedGeneric:
      return "assumed-generic";
  }
  return "?";
}

namespace {

FaceVerdict check_face(const std::vector<MVec>& pts, int dim, const SupportedFunction& f) {
  if (f.coefficients.empty()) return FaceVerdict::AssumedGeneric;
  std::vector<GaussRational> coeffs;
  for (const auto& p : pts) {
    auto it = std::find(f.support.begin(), f.support.end(), p);
    const auto& c = f.coefficients[static_cast<std::size_t>(it - f.support.begin())];
    if (!c) return FaceVerdict::AssumedGeneric;
    coeffs.push_back(*c);
  }
  bool singular = false;
  if (dim == 1) {
    MVec p0 = *std::min_element(pts.begin(), pts.end());
    MVec d{0, 0, 0};
    for (const auto& p : pts) {
      if (!(p == p0)) d = primitive(p - p0);
    }
    std::size_t j = 0;
    while (d[j] == 0) ++j;
    std::vector<std::pair<std::pair<Int, Int>, GaussRational>> terms;
    for (std::size_t i = 0; i < pts.size(); ++i) terms.push_back({{(pts[i] - p0)[j] / d[j], 0}, coeffs[i]});
    BPoly b = bpoly_from_terms(terms);
    singular = has_repeated_torus_root(b.at(0));
  } else {
    Chart2D chart = face_chart(pts);
    std::vector<std::pair<std::pair<Int, Int>, GaussRational>> terms;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Point2 q = chart.to_chart(pts[i]);
      terms.push_back({{q.x, q.y}, coeffs[i]});
    }
    singular = has_torus_singularity(bpoly_from_terms(terms));
  }
  return singular ? FaceVerdict::Degenerate : FaceVerdict::Nondegenerate;
}

}  // namespace

NndReport check_nnd(const SupportedFunction& f) {
  if (!f.coefficients.empty() && f.coefficients.size() != f.support.size()) {
    throw std::invalid_argument("check_nnd: coefficient list does not match the support");
  }
  NewtonPolyhedron p(f.sigma, f.support);
  Fan fan = normal_fan(p);
  std::vector<std::vector<MVec>> seen;
  NndReport rep;
  for (int d = 1; d <= 2; ++d) {
    for (const auto& c : fan.cones(d)) {
      NVec v = c.interior_point();
      if (!f.sigma.in_relative_interior(v)) continue;
      auto pts = p.argmin(v);
      if (std::find(seen.begin(), seen.end(), pts) != seen.end()) continue;
      seen.push_back(pts);
      int dim = affine_dim(pts);
      if (dim == 0) continue;
      rep.faces.push_back({pts, dim, check_face(pts, dim, f)});
    }
  }
  return rep;
}

}  // namespace milnor
