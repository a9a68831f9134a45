#include "milnor/graph_pipeline.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace milnor {

namespace {

Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

std::size_t to_count(const Int& v, const char* what) {
  if (v < 0 || !v.fits_ulong_p() || v > 1000000) throw std::length_error(std::string("count out of range: ") + what);
  return v.get_ui();
}

// Union-find used to test acyclicity of multigraphs.
class Forest {
 public:
  explicit Forest(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // False when the edge closes a cycle.
  bool join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

CurveConfigGraph build_gcdt(const ClassifiedFan& cf, const NewtonPolyhedron& pf, const NewtonPolyhedron& pg) {
  CurveConfigGraph g;
  const auto& rays = cf.fan.rays();
  std::vector<int> exc_of(cf.two_cones.size(), -1);
  for (std::size_t k = 0; k < cf.two_cones.size(); ++k) {
    const auto& t = cf.two_cones[k];
    if (!t.cutting) continue;
    int inner = cf.rays[t.rays[0]].place == RayPlace::Interior ? t.rays[0] : t.rays[1];
    int outer = inner == t.rays[0] ? t.rays[1] : t.rays[0];
    CurveVertex v;
    v.kind = CurveKind::Exceptional;
    v.m1 = cf.rays[outer].hf;
    v.m2 = cf.rays[inner].hf;
    v.n2 = cf.rays[inner].hg;
    v.source = "<" + to_string(rays[outer]) + "," + to_string(rays[inner]) + ">";
    exc_of[k] = static_cast<int>(g.vertices.size());
    g.vertices.push_back(v);
  }
  std::vector<std::vector<int>> strict_of(rays.size());
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const auto& r = cf.rays[i];
    if (!r.pertinent) continue;
    std::size_t comps = 1;
    Int genus = 0;
    if (r.delta_f.dim == 2) {
      genus = r.delta_f.interior;
    } else {
      comps = to_count(r.delta_f.length, "strict components");
    }
    for (std::size_t c = 0; c < comps; ++c) {
      CurveVertex v;
      v.kind = CurveKind::Strict;
      v.genus = genus;
      v.m1 = 1;
      v.m2 = r.hf;
      v.n2 = r.hg;
      v.source = to_string(rays[i]);
      v.component = static_cast<int>(c);
      strict_of[i].push_back(static_cast<int>(g.vertices.size()));
      g.vertices.push_back(v);
    }
  }
  // Exceptional curves meeting inside one 3-cone.
  for (const auto& t : cf.three_cones) {
    std::vector<int> cut;
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        int k = cf.two_cone_index(t[a], t[b]);
        if (cf.two_cones[k].cutting) cut.push_back(k);
      }
    }
    for (std::size_t a = 0; a < cut.size(); ++a) {
      for (std::size_t b = a + 1; b < cut.size(); ++b) {
        const auto& ca = cf.two_cones[cut[a]].rays;
        const auto& cb = cf.two_cones[cut[b]].rays;
        int shared = (ca[0] == cb[0] || ca[0] == cb[1]) ? ca[0] : ca[1];
        Sign s = cf.rays[shared].place == RayPlace::Interior ? Sign::Minus : Sign::Plus;
        g.edges.push_back({exc_of[cut[a]], exc_of[cut[b]], s, 1});
      }
    }
  }
  // Exceptional curves meeting the strict transform.
  for (std::size_t k = 0; k < cf.two_cones.size(); ++k) {
    const auto& t = cf.two_cones[k];
    if (!t.cutting || !t.pertinent) continue;
    int inner = cf.rays[t.rays[0]].place == RayPlace::Interior ? t.rays[0] : t.rays[1];
    const auto& comps = strict_of[inner];
    if (comps.empty()) throw std::logic_error("pertinent cutting cone with a non-pertinent interior ray");
    std::size_t l = to_count(t.delta_f.length, "intersection points");
    if (comps.size() == 1) {
      g.edges.push_back({exc_of[k], comps[0], Sign::Minus, l});
    } else {
      if (comps.size() != l) throw std::logic_error("strict components do not match the edge length of the cutting cone");
      for (int c : comps) g.edges.push_back({exc_of[k], c, Sign::Minus, 1});
    }
  }
  // Strict curves meeting each other.
  for (const auto& t : cf.two_cones) {
    if (!t.pertinent) continue;
    const auto& r0 = cf.rays[t.rays[0]];
    const auto& r1 = cf.rays[t.rays[1]];
    if (r0.place != RayPlace::Interior || r1.place != RayPlace::Interior) continue;
    const auto& c0 = strict_of[t.rays[0]];
    const auto& c1 = strict_of[t.rays[1]];
    if (c0.empty() || c1.empty()) throw std::logic_error("pertinent 2-cone with a non-pertinent ray");
    std::size_t l = to_count(t.delta_f.length, "intersection points");
    if (c0.size() == 1 && c1.size() == 1) {
      g.edges.push_back({c0[0], c1[0], Sign::Plus, l});
    } else if (c0.size() == 1 || c1.size() == 1) {
      const auto& single = c0.size() == 1 ? c0 : c1;
      const auto& many = c0.size() == 1 ? c1 : c0;
      if (many.size() != l) throw std::logic_error("strict components do not match the edge length");
      for (int c : many) g.edges.push_back({single[0], c, Sign::Plus, 1});
    } else {
      if (c0.size() != l || c1.size() != l) throw std::logic_error("paired strict components have different counts");
      if (r0.delta_f.length != t.delta_f.length || r1.delta_f.length != t.delta_f.length) {
        throw std::logic_error("paired strict components come from different faces");
      }
      for (std::size_t i = 0; i < l; ++i) g.edges.push_back({c0[i], c1[i], Sign::Plus, 1});
    }
  }
  // Arrowheads: strict transform of g.
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const auto& comps = strict_of[i];
    if (comps.empty()) continue;
    Int v = mixed_volume_at(pf, pg, rays[i]);
    Int per = v;
    if (comps.size() > 1) {
      Int l(static_cast<unsigned long>(comps.size()));
      if (!mpz_divisible_p(v.get_mpz_t(), l.get_mpz_t())) throw std::logic_error("arrowhead count is not divisible by the number of components");
      per = v / l;
    }
    std::size_t n = to_count(per, "arrowheads");
    for (int c : comps) {
      for (std::size_t a = 0; a < n; ++a) {
        CurveVertex arrow;
        arrow.kind = CurveKind::Arrowhead;
        arrow.m1 = 1;
        arrow.m2 = 0;
        arrow.n2 = 1;
        arrow.source = g.vertices[static_cast<std::size_t>(c)].source;
        arrow.component = static_cast<int>(a);
        int id = static_cast<int>(g.vertices.size());
        g.vertices.push_back(arrow);
        g.edges.push_back({c, id, Sign::Plus, 1});
      }
    }
  }
  return g;
}

std::vector<std::string> gcdt_violations(const CurveConfigGraph& g) {
  std::vector<std::string> out;
  const std::size_t n = g.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& v = g.vertices[i];
    if (v.kind == CurveKind::Exceptional && v.genus != 0) out.push_back("exceptional vertex " + v.source + " has positive genus");
    if (v.kind != CurveKind::Exceptional && v.m1 != 1) out.push_back("vertex " + v.source + " has m1 != 1");
    if (v.genus > 0 && v.m1 != 1) out.push_back("vertex " + v.source + " of positive genus has m1 != 1");
  }
  Forest exc(n), heavy(n);
  std::vector<std::size_t> exc_degree(n, 0);
  for (const auto& e : g.edges) {
    const auto& a = g.vertices[static_cast<std::size_t>(e.u)];
    const auto& b = g.vertices[static_cast<std::size_t>(e.v)];
    bool both_exc = a.kind == CurveKind::Exceptional && b.kind == CurveKind::Exceptional;
    for (std::size_t c = 0; c < e.count; ++c) {
      if (both_exc) {
        exc_degree[static_cast<std::size_t>(e.u)]++;
        exc_degree[static_cast<std::size_t>(e.v)]++;
        if (!exc.join(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v))) {
          out.push_back("exceptional curves " + a.source + " and " + b.source + " close a cycle");
        }
      }
      if (a.m1 != 1 && b.m1 != 1 && !heavy.join(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v))) {
        out.push_back("cycle avoiding every vertex with m1 = 1 through " + a.source);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (exc_degree[i] > 2) out.push_back("exceptional curve " + g.vertices[i].source + " meets more than two others");
  }
  return out;
}

namespace {

struct Incidence {
  int other;
  Sign sign;
  std::size_t count;
};

}  // namespace

MultResult build_gmult(const CurveConfigGraph& g) {
  const std::size_t n = g.vertices.size();
  std::vector<std::vector<Incidence>> adj(n);
  for (const auto& e : g.edges) {
    if (e.u == e.v) throw std::logic_error("curve configuration graph has a loop");
    adj[static_cast<std::size_t>(e.u)].push_back({e.v, e.sign, e.count});
    adj[static_cast<std::size_t>(e.v)].push_back({e.u, e.sign, e.count});
  }
  MultResult res;
  std::vector<std::vector<int>> copies(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& v = g.vertices[i];
    if (v.kind == CurveKind::Arrowhead) {
      copies[i].push_back(static_cast<int>(res.graph.vertices.size()));
      res.graph.vertices.push_back({true, 0, 1, v.source});
      continue;
    }
    Int nc = gcd_int(v.m1, v.m2);
    Int g12 = nc;
    Int valence = 0;
    Int weighted = 0;
    for (const auto& inc : adj[i]) {
      const auto& w = g.vertices[static_cast<std::size_t>(inc.other)];
      Int mi;
      if (inc.sign == Sign::Plus) {
        if (w.m1 != v.m1) throw std::logic_error("+ neighbor of " + v.source + " has a different first entry");
        mi = w.m2;
      } else {
        if (w.m2 != v.m2 || w.n2 != v.n2) throw std::logic_error("- neighbor of " + v.source + " has a different second pair");
        mi = w.m1;
      }
      nc = gcd_int(nc, mi);
      Int nu(static_cast<unsigned long>(inc.count));
      valence += nu;
      weighted += gcd_int(g12, mi) * nu;
    }
    Int rhs = (2 - 2 * v.genus - valence) * g12 + weighted;
    Int num = 2 * nc - rhs;
    if (!mpz_divisible_p(num.get_mpz_t(), Int(2 * nc).get_mpz_t())) {
      throw std::logic_error("genus equation has no integral solution at " + v.source);
    }
    Int genus = num / (2 * nc);
    if (genus < 0) throw std::logic_error("genus equation gives a negative genus at " + v.source);
    Int mu = v.m1 * v.n2 / g12;
    std::size_t count = to_count(nc, "vertex copies");
    for (std::size_t c = 0; c < count; ++c) {
      copies[i].push_back(static_cast<int>(res.graph.vertices.size()));
      res.graph.vertices.push_back({false, genus, mu, v.source + (count > 1 ? "#" + std::to_string(c) : "")});
    }
  }
  auto add_chain = [&](int from, int to, const HJString& s) {
    int prev = from;
    for (std::size_t i = 0; i < s.length(); ++i) {
      int id = static_cast<int>(res.graph.vertices.size());
      res.graph.vertices.push_back({false, 0, s.mus[i + 1], "string"});
      res.graph.edges.push_back({prev, id, s.sign, 1});
      prev = id;
    }
    res.graph.edges.push_back({prev, to, s.sign, 1});
  };
  for (const auto& e : g.edges) {
    const auto& u = g.vertices[static_cast<std::size_t>(e.u)];
    const auto& v = g.vertices[static_cast<std::size_t>(e.v)];
    Int d;
    HJString proto;
    if (e.sign == Sign::Plus) {
      d = gcd3(u.m2, u.m1, v.m2);
      proto = build_string(Sign::Plus, u.m1 / d, u.m2 / d, v.m2 / d, 0, u.n2, v.n2);
    } else {
      d = gcd3(u.m2, u.m1, v.m1);
      proto = build_string(Sign::Minus, u.m2 / d, u.m1 / d, v.m1 / d, u.n2, 0, 0);
    }
    const auto& cu = copies[static_cast<std::size_t>(e.u)];
    const auto& cv = copies[static_cast<std::size_t>(e.v)];
    if (proto.mus.back() != res.graph.vertices[static_cast<std::size_t>(cu[0])].mu ||
        proto.mus.front() != res.graph.vertices[static_cast<std::size_t>(cv[0])].mu) {
      throw std::logic_error("string end multiplicities disagree with " + u.source + " -- " + v.source);
    }
    std::size_t strings = to_count(d, "strings per edge");
    if (strings % cu.size() != 0 || strings % cv.size() != 0) {
      throw std::logic_error("strings cannot be distributed uniformly between " + u.source + " and " + v.source);
    }
    for (std::size_t rep = 0; rep < e.count; ++rep) {
      for (std::size_t j = 0; j < strings; ++j) {
        add_chain(cv[j % cv.size()], cu[j % cu.size()], proto);
        res.strings.push_back(proto);
      }
    }
  }
  return res;
}

PlumbGraph build_gplomb(const MultGraph& g) {
  const std::size_t n = g.vertices.size();
  std::vector<Int> sum(n, 0);
  for (const auto& e : g.edges) {
    const auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
    sum[u] += value(e.sign) * g.vertices[v].mu;
    sum[v] += value(e.sign) * g.vertices[u].mu;
  }
  PlumbGraph p;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& v = g.vertices[i];
    if (v.arrowhead) continue;
    if (!mpz_divisible_p(sum[i].get_mpz_t(), v.mu.get_mpz_t())) {
      throw std::logic_error("self-intersection is not integral at " + v.origin);
    }
    p.vertices.push_back({static_cast<int>(i), v.genus, Int(-sum[i] / v.mu)});
  }
  for (const auto& e : g.edges) {
    if (g.vertices[static_cast<std::size_t>(e.u)].arrowhead || g.vertices[static_cast<std::size_t>(e.v)].arrowhead) continue;
    p.edges.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.sign, 1});
  }
  p.normalize();
  return p;
}

std::vector<std::string> balance_violations(const MultGraph& m, const PlumbGraph& p) {
  std::vector<std::string> out;
  std::vector<Int> sum(m.vertices.size(), 0);
  for (const auto& e : m.edges) {
    const auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
    sum[u] += value(e.sign) * m.vertices[v].mu;
    sum[v] += value(e.sign) * m.vertices[u].mu;
  }
  for (const auto& v : p.vertices) {
    const auto i = static_cast<std::size_t>(v.id);
    Int defect = v.euler * m.vertices[i].mu + sum[i];
    if (defect != 0) out.push_back("vertex " + std::to_string(v.id) + " has balance defect " + defect.get_str());
  }
  return out;
}

}  // namespace milnor
