#include <doctest.h>

#include <random>

#include "milnor/newton.hpp"
#include "oracles/oracles.hpp"

using namespace milnor;

namespace {

NCone octant() { return NCone::generated_by({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }
NCone example_cone() { return NCone::generated_by({{0, 1, 2}, {0, 1, 0}, {1, 1, -1}, {1, 0, 0}}); }
const std::vector<MVec> brieskorn{{2, 0, 0}, {0, 3, 0}, {0, 0, 5}};
const std::vector<MVec> example_support{{1, 1, 2}, {2, 0, 1}, {0, 2, 0}, {0, 4, -2}};

SupportedFunction with_coefficients(NCone sigma, std::vector<MVec> support, std::vector<long> cs) {
  SupportedFunction f{std::move(sigma), std::move(support), {}};
  for (long c : cs) f.coefficients.emplace_back(GaussRational{Rational(c), Rational(0)});
  return f;
}

bool has_kind(const HypothesisReport& r, HypothesisKind k) {
  for (const auto& v : r.violations)
    if (v.kind == k) return true;
  return false;
}

}  // namespace

TEST_CASE("heights of the Brieskorn polyhedron") {
  NewtonPolyhedron p(octant(), brieskorn);
  CHECK(p.height(NVec(1, 1, 1)) == 2);
  CHECK(p.height(NVec(15, 10, 6)) == 30);
  CHECK(p.argmin(NVec(15, 10, 6)) == std::vector<MVec>{{0, 0, 5}, {0, 3, 0}, {2, 0, 0}});
  CHECK(p.height(NVec(1, 0, 0)) == 0);
  CHECK(p.vertices() == std::vector<MVec>{{0, 0, 5}, {0, 3, 0}, {2, 0, 0}});
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> d(0, 20);
  std::vector<oracle::P3> s;
  for (const auto& m : brieskorn) s.push_back(oracle::to64(m));
  for (int k = 0; k < 200; ++k) {
    oracle::P3 v{d(rng), d(rng), d(rng)};
    CHECK(p.height(NVec(v[0], v[1], v[2])) == oracle::height(s, v));
  }
}

TEST_CASE("normal fan of the Brieskorn polyhedron") {
  NewtonPolyhedron p(octant(), brieskorn);
  auto fan = normal_fan(p);
  CHECK(fan.violations().empty());
  CHECK(fan.rays().size() == 4);
  CHECK(fan.ray_index(NVec(15, 10, 6)) >= 0);
  CHECK(fan.maximal_cones().size() == 3);
  CHECK(fan.cones(2).size() == 6);
  // Each maximal cone is a domain of linearity of the height.
  for (const auto& c : fan.maximal_cones()) {
    auto v = c.rays()[0], w = c.rays()[1];
    CHECK(p.height(v + w) == p.height(v) + p.height(w));
  }
}

TEST_CASE("single-vertex polyhedron has the trivial fan") {
  NewtonPolyhedron p(octant(), {{1, 1, 1}});
  auto fan = normal_fan(p);
  CHECK(fan.maximal_cones() == std::vector<NCone>{octant()});
  auto face = face_for_cone(p, fan, octant());
  CHECK(face.dim == 0);
  CHECK(face.points == std::vector<MVec>{{1, 1, 1}});
}

TEST_CASE("faces selected by cones") {
  NewtonPolyhedron p(octant(), brieskorn);
  auto fan = normal_fan(p);
  auto tri = face_for_cone(p, fan, NCone::generated_by({{15, 10, 6}}));
  CHECK(tri.dim == 2);
  CHECK(tri.compact);
  CHECK(tri.points == std::vector<MVec>{{0, 0, 5}, {0, 3, 0}, {2, 0, 0}});
  auto edge = face_for_cone(p, fan, NCone::generated_by({{15, 10, 6}, {1, 0, 0}}));
  CHECK(edge.dim == 1);
  CHECK(edge.compact);
  CHECK(edge.points == std::vector<MVec>{{0, 0, 5}, {0, 3, 0}});
  auto far = face_for_cone(p, fan, NCone::generated_by({{1, 0, 0}}));
  CHECK(!far.compact);
  CHECK_THROWS(face_for_cone(p, fan, NCone::generated_by({{1, 1, 1}, {1, 0, 0}})));
}

TEST_CASE("lattice measures") {
  PolyFace edge{{{2, 0, 0}, {0, 3, 0}}, 1, true, {}};
  auto e = lattice_measures(edge);
  CHECK(e.length == 1);
  CHECK(e.interior == 0);
  PolyFace long_edge{{{0, 0, 0}, {4, 2, 6}}, 1, true, {}};
  CHECK(lattice_measures(long_edge).length == 2);
  PolyFace tri{brieskorn, 2, true, {}};
  auto t = lattice_measures(tri);
  CHECK(t.interior == 0);
  // The plane 15x + 10y + 6z = 30 meets the octant in exactly three lattice points.
  int points = 0;
  for (long x = 0; x <= 2; ++x)
    for (long y = 0; y <= 3; ++y)
      for (long z = 0; z <= 5; ++z) points += 15 * x + 10 * y + 6 * z == 30;
  CHECK(points == 3);
  CHECK(t.boundary == 3);
  CHECK(t.volume == 1);
  PolyFace square{{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}, 2, true, {}};
  auto s = lattice_measures(square);
  CHECK(s.volume == 2);
  CHECK(s.interior == 0);
  CHECK(s.boundary == 4);
  CHECK(s.volume == 2 * s.interior + s.boundary - 2);
  PolyFace big{{{0, 0, 0}, {3, 0, 3}, {0, 3, 0}}, 2, true, {}};
  auto b = lattice_measures(big);
  auto r = oracle::face_measures(big);
  CHECK(b.interior == r.interior);
  CHECK(b.boundary == r.boundary);
  CHECK(b.volume == r.volume);
  PolyFace open{{{0, 0, 0}}, 0, false, {}};
  CHECK_THROWS(lattice_measures(open));
}

TEST_CASE("mixed volumes in the plane") {
  std::vector<Point2> square{{0, 0}, {1, 0}, {0, 1}, {1, 1}}, segment{{0, 0}, {1, 0}};
  CHECK(mixed_volume_2d(square, segment) == 1);
  CHECK(mixed_volume_2d(square, square) == normalized_area(square));
  std::vector<Point2> tri{{0, 0}, {2, 0}, {0, 3}};
  CHECK(mixed_volume_2d(tri, tri) == 6);
  std::mt19937 rng(9);
  std::uniform_int_distribution<long> c(0, 4), n(1, 5);
  for (int k = 0; k < 200; ++k) {
    std::vector<Point2> p, q;
    std::vector<oracle::P2> p64, q64;
    for (long i = n(rng); i-- > 0;) {
      long x = c(rng), y = c(rng);
      p.push_back({x, y});
      p64.push_back({x, y});
    }
    for (long i = n(rng); i-- > 0;) {
      long x = c(rng), y = c(rng);
      q.push_back({x, y});
      q64.push_back({x, y});
    }
    CHECK(mixed_volume_2d(p, q) == mixed_volume_2d(q, p));
    CHECK(mixed_volume_2d(p, q) == oracle::mixed_volume(p64, q64));
  }
}

TEST_CASE("hypotheses") {
  SupportedFunction ex{example_cone(), example_support, {}};
  CHECK(check_hypotheses(ex).ok());
  SupportedFunction xy{octant(), {{1, 1, 0}}, {}};
  auto r = check_hypotheses(xy);
  CHECK(has_kind(r, HypothesisKind::Unsuitable));
  CHECK(r.violations.size() == 2);
  SupportedFunction pair{octant(), {{2, 0, 0}, {0, 2, 0}}, {}};
  CHECK(check_hypotheses(pair).ok());
  auto bad = example_support;
  bad.push_back({1, 0, 0});
  SupportedFunction smooth{example_cone(), bad, {}};
  CHECK(has_kind(check_hypotheses(smooth), HypothesisKind::SmoothingViolated));
  SupportedFunction outside{octant(), {{2, 0, 0}, {0, 2, 0}, {0, -1, 3}}, {}};
  CHECK(has_kind(check_hypotheses(outside), HypothesisKind::SupportOutsideDual));
  SupportedFunction unit{octant(), {{0, 0, 0}, {1, 0, 0}}, {}};
  CHECK(has_kind(check_hypotheses(unit), HypothesisKind::ZeroInSupport));
}

TEST_CASE("Newton nondegeneracy") {
  CHECK(check_nnd(with_coefficients(octant(), brieskorn, {1, 1, 1})).nondegenerate());
  CHECK(check_nnd(with_coefficients(example_cone(), example_support, {1, 1, 1, 1})).nondegenerate());
  // (x + y)^2 + z^2: the edge x^2 + 2xy + y^2 has a double root.
  auto sq = with_coefficients(octant(), {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {0, 0, 2}}, {1, 2, 1, 1});
  auto rep = check_nnd(sq);
  CHECK(!rep.nondegenerate());
  bool edge_flagged = false;
  for (const auto& f : rep.faces)
    if (f.verdict == FaceVerdict::Degenerate && f.dim == 1) edge_flagged = true;
  CHECK(edge_flagged);
  SupportedFunction generic{octant(), brieskorn, {}};
  auto g = check_nnd(generic);
  CHECK(g.nondegenerate());
  for (const auto& f : g.faces)
    if (f.dim > 0) CHECK(f.verdict == FaceVerdict::AssumedGeneric);
}
