#include <doctest.h>

#include "milnor/adapted_fan.hpp"
#include "milnor/semigroup.hpp"
#include "oracles/oracles.hpp"

using namespace milnor;

namespace {

NCone octant() { return NCone::generated_by({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }
NCone example_cone() { return NCone::generated_by({{0, 1, 2}, {0, 1, 0}, {1, 1, -1}, {1, 0, 0}}); }

struct Setup {
  SupportedFunction f;
  NewtonPolyhedron pf;
  NewtonPolyhedron pg;
};

Setup setup(NCone sigma, std::vector<MVec> support) {
  SupportedFunction f{sigma, support, {}};
  NewtonPolyhedron pf(sigma, support);
  auto pg = companion_polyhedron(hilbert_basis(dual_cone(sigma)), sigma);
  return {f, pf, pg};
}

void check_adapted(const AdaptedFanResult& r) {
  CHECK(r.audit.empty());
  CHECK(r.fhat.is_simplicial());
  CHECK(r.adapted.fan.violations().empty());
  CHECK(regularity_defects(r.adapted).empty());
  CHECK(refines(r.fbar, r.sigma_f));
  CHECK(refines(r.fbar, r.sigma_g));
  CHECK(refines(r.fhat, r.fbar));
  CHECK(refines(r.adapted.fan, r.fhat));
  CHECK(oracle::fan_partition_defects(r.adapted.fan, 5).empty());
  for (const auto& t : r.adapted.two_cones)
    if (t.cutting) CHECK(t.regular);
}

}  // namespace

TEST_CASE("Brieskorn (2,3,5) adapted fan") {
  auto s = setup(octant(), {{2, 0, 0}, {0, 3, 0}, {0, 0, 5}});
  AdaptedFanOptions opts;
  opts.audit_each_subdivision = true;
  auto r = build_adapted_fan(s.f, s.pf, s.pg, opts);
  CHECK(r.sigma_g.rays().size() == 4);
  CHECK(r.sigma_g.ray_index(NVec(1, 1, 1)) >= 0);
  CHECK(r.sigma_f.ray_index(NVec(15, 10, 6)) >= 0);
  CHECK(r.fbar.ray_index(NVec(1, 1, 1)) >= 0);
  CHECK(r.fbar.ray_index(NVec(15, 10, 6)) >= 0);
  check_adapted(r);
  int strict = 0;
  for (const auto& ray : r.adapted.rays) strict += ray.pertinent;
  CHECK(strict >= 1);
  // The height of f is linear on every cone of the adapted fan.
  for (const auto& c : r.adapted.fan.maximal_cones()) {
    Int sum = 0;
    NVec v(0, 0, 0);
    for (const auto& ray : c.rays()) {
      sum += s.pf.height(ray);
      v += ray;
    }
    CHECK(s.pf.height(v) == sum);
  }
}

TEST_CASE("example adapted fan") {
  auto s = setup(example_cone(), {{1, 1, 2}, {2, 0, 1}, {0, 2, 0}, {0, 4, -2}});
  AdaptedFanOptions opts;
  opts.audit_each_subdivision = true;
  auto r = build_adapted_fan(s.f, s.pf, s.pg, opts);
  check_adapted(r);
  CHECK(r.fhat.rays() == r.fbar.rays());
  bool cutting = false;
  for (const auto& t : r.adapted.two_cones) cutting = cutting || t.cutting;
  CHECK(cutting);
  // No ray lands inside the singular 2-face unless that face carries a ray of the fan of f.
  for (const auto& ray : r.adapted.rays)
    if (ray.place == RayPlace::BoundaryFace) CHECK(r.adapted.zero_locus_faces[static_cast<std::size_t>(ray.sigma_face)]);
}

TEST_CASE("subdivision budget is enforced") {
  auto s = setup(octant(), {{2, 0, 0}, {0, 3, 0}, {0, 0, 5}});
  AdaptedFanOptions opts;
  opts.subdivision_budget = 0;
  CHECK_THROWS_AS(build_adapted_fan(s.f, s.pf, s.pg, opts), BudgetExhausted);
}

TEST_CASE("smooth linear function needs no subdivision") {
  auto s = setup(octant(), {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto r = build_adapted_fan(s.f, s.pf, s.pg);
  check_adapted(r);
  CHECK(r.subdivisions == 0);
  CHECK(r.fbar.rays() == r.sigma_g.rays());
}
