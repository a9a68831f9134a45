#pragma once

// Brute-force cross-checks of every stage of one pipeline run.

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "milnor/io.hpp"
#include "milnor/pipeline.hpp"
#include "oracles/oracles.hpp"

namespace oracle {

enum class Status { Pass, Fail, Skip };

struct CheckResult {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
};

inline const char* status_name(Status s) { return s == Status::Pass ? "PASS" : s == Status::Fail ? "FAIL" : "SKIP"; }

inline bool all_passed(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs)
    if (r.status == Status::Fail) return false;
  return true;
}

namespace detail {

class Recorder {
 public:
  explicit Recorder(std::string name) : name_(std::move(name)) {}
  void fail(const std::string& what) {
    if (++failures_ <= 5) os_ << (failures_ > 1 ? "; " : "") << what;
  }
  void count() { ++checked_; }
  CheckResult result() const {
    CheckResult r{name_, failures_ ? Status::Fail : Status::Pass, os_.str()};
    if (!failures_) r.detail = std::to_string(checked_) + " checked";
    else r.detail = std::to_string(failures_) + " of " + std::to_string(checked_) + " failed: " + r.detail;
    return r;
  }

 private:
  std::string name_;
  std::ostringstream os_;
  long failures_ = 0;
  long checked_ = 0;
};

inline std::vector<P3> support64(const std::vector<milnor::MVec>& s) {
  std::vector<P3> out;
  for (const auto& m : s) out.push_back(to64(m));
  return out;
}

inline std::vector<P3> argmin(const std::vector<P3>& support, const P3& v) {
  I h = height(support, v);
  std::vector<P3> out;
  for (const auto& s : support)
    if (dot(s, v) == h) out.push_back(s);
  return out;
}

}  // namespace detail

inline CheckResult check_hilbert_basis(const milnor::ProblemInput& pi, const milnor::Artifacts& a) {
  detail::Recorder rec("hilbert_basis vs bounded-box enumeration");
  std::vector<P3> rays;
  auto dual = milnor::dual_cone(pi.f.sigma);
  for (const auto& r : dual.rays()) rays.push_back(to64(r));
  std::vector<P3> brute;
  try {
    brute = hilbert_basis(rays);
  } catch (const std::length_error&) {
    return {rec.result().name, Status::Skip, "enumeration box too large"};
  }
  rec.count();
  auto lib = detail::support64(a.hilbert.elements);
  if (lib != brute) rec.fail("library has " + std::to_string(lib.size()) + " elements, enumeration " + std::to_string(brute.size()));
  return rec.result();
}

inline CheckResult check_lattice_measures(const milnor::NewtonPolyhedron& p) {
  detail::Recorder rec("lattice_measures vs enumeration");
  auto fan = milnor::normal_fan(p);
  for (int d : {1, 2})
    for (const auto& c : fan.cones(d)) {
      auto face = milnor::face_for_cone(p, fan, c);
      if (!face.compact || face.dim == 0) continue;
      rec.count();
      auto lib = milnor::lattice_measures(face);
      auto ref = face_measures(face);
      bool same = lib.dim == ref.dim && lib.length == ref.length && lib.interior == ref.interior &&
                  (face.dim != 2 || (lib.boundary == ref.boundary && lib.volume == ref.volume));
      if (!same) rec.fail("face at " + milnor::to_string(c));
    }
  return rec.result();
}

inline CheckResult check_heights(const milnor::ProblemInput& pi, const milnor::Artifacts& a) {
  detail::Recorder rec("height linearity and product additivity");
  auto sf = detail::support64(pi.f.support);
  auto sg = detail::support64(a.hilbert.elements);
  std::vector<milnor::MVec> prod;
  for (const auto& x : pi.f.support)
    for (const auto& y : a.hilbert.elements) prod.push_back(x + y);
  std::sort(prod.begin(), prod.end());
  prod.erase(std::unique(prod.begin(), prod.end()), prod.end());
  milnor::NewtonPolyhedron pfg(pi.f.sigma, prod);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(0, 4);
  auto linear_on = [&](const milnor::Fan& fan, const std::vector<P3>& sup, const milnor::NewtonPolyhedron& poly, const char* what) {
    for (const auto& c : fan.maximal_cones()) {
      std::vector<P3> rs;
      for (const auto& r : c.rays()) rs.push_back(to64(r));
      for (int trial = 0; trial < 8; ++trial) {
        P3 v{0, 0, 0};
        I expect = 0;
        for (const auto& r : rs) {
          I k = coef(rng) + (trial == 0);
          v = add(v, {k * r[0], k * r[1], k * r[2]});
          expect += k * height(sup, r);
        }
        rec.count();
        if (height(sup, v) != expect) rec.fail(std::string(what) + " not linear on " + milnor::to_string(c));
        if (to64(poly.height(milnor::NVec(v[0], v[1], v[2]))) != height(sup, v)) rec.fail(std::string(what) + " height differs");
      }
    }
  };
  linear_on(a.fans.sigma_f, sf, *a.pf, "h_f");
  linear_on(a.fans.sigma_g, sg, *a.pg, "h_g");
  for (const auto& c : a.fans.fbar.maximal_cones()) {
    auto v = c.interior_point();
    rec.count();
    if (pfg.height(v) != a.pf->height(v) + a.pg->height(v)) rec.fail("h_fg != h_f + h_g at " + milnor::to_string(v));
  }
  auto product_fan = milnor::normal_fan(pfg);
  rec.count();
  if (product_fan.maximal_cones() != a.fans.fbar.maximal_cones()) rec.fail("common refinement differs from the normal fan of the product");
  return rec.result();
}

inline CheckResult check_mixed_volumes(const milnor::ProblemInput& pi, const milnor::Artifacts& a) {
  detail::Recorder rec("mixed volumes vs Minkowski areas");
  auto sf = detail::support64(pi.f.support);
  auto sg = detail::support64(a.hilbert.elements);
  for (const auto& r : a.fans.adapted.rays) {
    if (!r.pertinent) continue;
    P3 v = to64(r.ray);
    rec.count();
    I ref = mixed_volume_3d(detail::argmin(sf, v), detail::argmin(sg, v), v);
    if (to64(milnor::mixed_volume_at(*a.pf, *a.pg, r.ray)) != ref) rec.fail("at " + milnor::to_string(r.ray));
  }
  return rec.result();
}

inline CheckResult check_strings(const milnor::Artifacts& a) {
  detail::Recorder rec("HJ recurrence closure");
  for (const auto& s : a.gmult.strings) {
    rec.count();
    if (!milnor::closure_holds(s) || !string_recurrence(s)) rec.fail("string (" + s.a.get_str() + ";" + s.b.get_str() + "," + s.c.get_str() + ")");
    if (!s.ks.empty()) {
      std::vector<I> ks;
      for (const auto& k : s.ks) ks.push_back(to64(k));
      auto [p, q] = back_substitute(ks);
      if (p != to64(s.delta) || q != to64(s.alpha)) rec.fail("expansion of " + s.delta.get_str() + "/" + s.alpha.get_str());
    }
  }
  return rec.result();
}

inline CheckResult check_negative_cf(I max_p = 50) {
  detail::Recorder rec("negative_cf back-substitution");
  for (I p = 1; p <= max_p; ++p)
    for (I q = 0; q < p; ++q) {
      if (q == 0 && p != 1) continue;
      if (q > 0 && std::gcd(p, q) != 1) continue;
      rec.count();
      auto ks = milnor::negative_cf(p, q);
      if (q == 0) {
        if (!ks.empty()) rec.fail("1/0");
        continue;
      }
      std::vector<I> k64;
      for (const auto& k : ks) {
        if (k < 2) rec.fail("entry below 2 in " + std::to_string(p) + "/" + std::to_string(q));
        k64.push_back(to64(k));
      }
      if (k64.empty() || back_substitute(k64) != std::pair<I, I>{p, q}) rec.fail(std::to_string(p) + "/" + std::to_string(q));
    }
  return rec.result();
}

inline CheckResult check_fans(const milnor::Artifacts& a, I box = 4) {
  detail::Recorder rec("fan validity and partition sampling");
  for (const auto* f : {&a.fans.sigma_f, &a.fans.sigma_g, &a.fans.fbar, &a.fans.fhat, &a.fans.adapted.fan}) {
    rec.count();
    for (const auto& v : f->violations()) rec.fail(v);
  }
  for (const auto& s : a.fans.audit) rec.fail(s);
  for (const auto* f : {&a.fans.fhat, &a.fans.adapted.fan}) {
    rec.count();
    auto bad = fan_partition_defects(*f, box);
    if (!bad.empty()) rec.fail(std::to_string(bad.size()) + " sample points not covered exactly once");
  }
  return rec.result();
}

inline CheckResult check_regularity(const milnor::Artifacts& a) {
  detail::Recorder rec("adapted fan regularity audit");
  const auto& c = a.fans.adapted;
  std::vector<P3> rays;
  for (const auto& r : c.rays) rays.push_back(to64(r.ray));
  for (const auto& t : c.two_cones) {
    if (!t.cutting && !t.pertinent) continue;
    rec.count();
    if (gcd3(crs(rays[t.rays[0]], rays[t.rays[1]])) != 1) rec.fail("2-cone " + std::to_string(t.rays[0]) + "," + std::to_string(t.rays[1]));
  }
  for (const auto& t : c.three_cones) {
    bool needs = false;
    for (int i : t) needs = needs || c.rays[i].pertinent;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const auto& info = c.two_cones[c.two_cone_index(t[i], t[j])];
        needs = needs || info.cutting || info.pertinent;
      }
    if (!needs) continue;
    rec.count();
    if (std::abs(dot(crs(rays[t[0]], rays[t[1]]), rays[t[2]])) != 1) rec.fail("3-cone not regular");
  }
  for (const auto& d : milnor::regularity_defects(c)) rec.fail(d);
  return rec.result();
}

inline CheckResult check_balance(const milnor::Artifacts& a) {
  detail::Recorder rec("plumbing balance");
  rec.count();
  auto bad = unbalanced(a.gmult.graph, a.gplomb);
  if (!bad.empty()) rec.fail(std::to_string(bad.size()) + " vertices unbalanced");
  for (const auto& s : milnor::balance_violations(a.gmult.graph, a.gplomb)) rec.fail(s);
  return rec.result();
}

inline CheckResult check_reduction(const milnor::Artifacts& a) {
  detail::Recorder rec("reduce idempotence, replay and determinant");
  rec.count();
  if (!(milnor::reduce(a.reduced).first == a.reduced)) rec.fail("not idempotent");
  if (!(milnor::replay(a.gplomb, a.trace) == a.reduced)) rec.fail("replay differs");
  auto inv = milnor::invariants(a.reduced);
  if (inv.matrix.size() <= 9) {
    std::vector<std::vector<I>> m;
    for (const auto& row : inv.matrix) {
      std::vector<I> r;
      for (const auto& x : row) r.push_back(to64(x));
      m.push_back(r);
    }
    rec.count();
    if (std::abs(cofactor_det(m)) != to64(inv.abs_det)) rec.fail("|det| differs from cofactor expansion");
  }
  return rec.result();
}

inline CheckResult check_serialization(const milnor::ProblemInput& pi, const milnor::Artifacts& a) {
  detail::Recorder rec("determinism and round trips");
  auto b = milnor::run(pi);
  for (auto s : {milnor::Stage::Fan, milnor::Stage::Gcdt, milnor::Stage::Gmult, milnor::Stage::Gplomb, milnor::Stage::Reduced})
    for (auto e : {milnor::Emit::Json, milnor::Emit::Dot}) {
      rec.count();
      if (milnor::render(a, s, e) != milnor::render(b, s, e)) rec.fail("two runs differ at " + milnor::to_string(s));
    }
  using milnor::to_json;
  auto same = [&](const milnor::Json& x, const milnor::Json& y, const char* what) {
    rec.count();
    if (x.dump() != y.dump()) rec.fail(std::string("round trip of ") + what);
  };
  auto jf = to_json(a.fans.adapted);
  same(jf, to_json(milnor::fan_from_json(milnor::Json::parse(jf.dump()))), "fan");
  auto jc = to_json(a.gcdt);
  same(jc, to_json(milnor::gcdt_from_json(milnor::Json::parse(jc.dump()))), "gcdt");
  auto jm = to_json(a.gmult);
  same(jm, to_json(milnor::gmult_from_json(milnor::Json::parse(jm.dump()))), "gmult");
  auto jp = to_json(a.gplomb, "gplomb");
  same(jp, to_json(milnor::plumb_from_json(milnor::Json::parse(jp.dump())), "gplomb"), "gplomb");
  auto jr = to_json(a.reduced, "reduced");
  same(jr, to_json(milnor::plumb_from_json(milnor::Json::parse(jr.dump())), "reduced"), "reduced");
  auto jt = to_json(a.trace);
  same(jt, to_json(milnor::trace_from_json(milnor::Json::parse(jt.dump()))), "trace");
  return rec.result();
}

inline std::vector<CheckResult> instance_checks(const milnor::ProblemInput& pi, const milnor::Artifacts& a) {
  return {check_hilbert_basis(pi, a), check_lattice_measures(*a.pf), check_heights(pi, a), check_mixed_volumes(pi, a),
          check_strings(a),           check_negative_cf(),           check_fans(a),         check_regularity(a),
          check_balance(a),           check_reduction(a),            check_serialization(pi, a)};
}

}  // namespace oracle
