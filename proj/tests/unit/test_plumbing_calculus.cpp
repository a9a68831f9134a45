#include <doctest.h>

#include <random>

#include "milnor/plumbing_calculus.hpp"
#include "oracles/oracles.hpp"

using namespace milnor;

namespace {

struct V {
  int id;
  long genus;
  long euler;
};

PlumbGraph make(const std::vector<V>& vs, const std::vector<std::pair<int, int>>& plus, const std::vector<std::pair<int, int>>& minus = {}) {
  PlumbGraph g;
  for (const auto& v : vs) g.vertices.push_back({v.id, v.genus, v.euler});
  for (auto [u, w] : plus) g.edges.push_back({u, w, Sign::Plus, 1});
  for (auto [u, w] : minus) g.edges.push_back({u, w, Sign::Minus, 1});
  g.normalize();
  return g;
}

PlumbGraph chain(const std::vector<long>& es) {
  std::vector<V> vs;
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < es.size(); ++i) {
    vs.push_back({static_cast<int>(i), 0, es[i]});
    if (i > 0) edges.emplace_back(static_cast<int>(i) - 1, static_cast<int>(i));
  }
  return make(vs, edges);
}

// E8 with the node at 0 and arms of one, two and four vertices.
PlumbGraph e8() {
  std::vector<V> vs;
  for (int i = 0; i < 8; ++i) vs.push_back({i, 0, -2});
  return make(vs, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {6, 7}});
}

bool single(const PlumbGraph& g, long genus, long euler) {
  return g.vertices.size() == 1 && g.edges.empty() && g.vertices[0].genus == genus && g.vertices[0].euler == euler;
}

Int det_oracle(const PlumbGraph& g) {
  auto m = invariants(g).matrix;
  std::vector<std::vector<long>> a;
  for (const auto& row : m) {
    std::vector<long> r;
    for (const auto& x : row) r.push_back(x.get_si());
    a.push_back(r);
  }
  return std::abs(oracle::cofactor_det(a));
}

}  // namespace

TEST_CASE("blow-down in the middle of a chain") {
  auto g = chain({-2, -1, -2});
  REQUIRE(can_blow_down(g, 1));
  auto h = blow_down(g, 1);
  REQUIRE(h.vertices.size() == 2);
  CHECK(h.vertices[0].euler == -1);
  CHECK(h.vertices[1].euler == -1);
  REQUIRE(h.edges.size() == 1);
  // New edge sign is -e * eps1 * eps2 for the blown-down vertex.
  CHECK(h.edges[0].sign == Sign::Plus);
  CHECK(invariants(g).abs_det == invariants(h).abs_det);
  CHECK(invariants(g).abs_det == 0);
}

TEST_CASE("chain [-2]-[-1]-[-2] reduces to [0]") {
  auto [r, t] = reduce(chain({-2, -1, -2}));
  CHECK(single(r, 0, 0));
  CHECK(t.steps.size() == 2);
  auto inv = invariants(r);
  CHECK(inv.abs_det == 0);
  CHECK(inv.h1_supported);
  CHECK(inv.h1_rank == 1);
  CHECK(inv.h1_torsion.empty());
}

TEST_CASE("leaf blow-down") {
  auto [r, t] = reduce(chain({-1, -3}));
  CHECK(single(r, 0, -2));
  CHECK(invariants(r).abs_det == 2);
  CHECK(oracle::chain_det({-1, -3}) == 2);
}

TEST_CASE("isolated units disappear") {
  CHECK(reduce(make({{0, 0, -1}}, {})).first.vertices.empty());
  CHECK(reduce(make({{0, 0, 1}}, {})).first.vertices.empty());
  auto [r, t] = reduce(make({{0, 0, 0}}, {}));
  CHECK(single(r, 0, 0));
  CHECK(t.steps.empty());
}

TEST_CASE("E8 and its blow-ups") {
  auto g = e8();
  auto inv = invariants(g);
  CHECK(inv.abs_det == 1);
  CHECK(inv.negative_definite);
  CHECK(inv.plus_forest);
  CHECK(inv.h1_rank == 0);
  CHECK(inv.h1_torsion.empty());
  auto [r, t] = reduce(g);
  CHECK(r == g);
  CHECK(t.steps.empty());
  // A [-1] leaf on vertex 7 and a [-1] inserted on the edge 0-1.
  auto blown = make({{0, 0, -3}, {1, 0, -3}, {2, 0, -2}, {3, 0, -2}, {4, 0, -2}, {5, 0, -2}, {6, 0, -2}, {7, 0, -3}, {8, 0, -1}, {9, 0, -1}},
                    {{0, 9}, {9, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}});
  CHECK(invariants(blown).abs_det == 1);
  auto [rb, tb] = reduce(blown);
  CHECK(rb.vertices.size() == 8);
  for (const auto& v : rb.vertices) CHECK(v.euler == -2);
  CHECK(invariants(rb).abs_det == 1);
  CHECK(replay(blown, tb) == rb);
}

TEST_CASE("zero chain absorption") {
  auto g = chain({-2, 0, -3});
  REQUIRE(can_absorb_zero_chain(g, 1));
  auto h = absorb_zero_chain(g, 1);
  CHECK(single(h, 0, -5));
  CHECK(invariants(g).abs_det == 5);
  CHECK(det_oracle(g) == 5);
  auto genus = make({{0, 1, -1}, {1, 0, 0}, {2, 2, -2}}, {{0, 1}, {1, 2}});
  CHECK(single(absorb_zero_chain(genus, 1), 3, -3));
}

TEST_CASE("zero leaf absorption splits off branches and handles") {
  auto g = make({{0, 0, 0}, {1, 1, -1}, {2, 0, -2}, {3, 0, -3}}, {{0, 1}, {1, 2}, {1, 3}});
  REQUIRE(can_absorb_zero_leaf(g, 0));
  auto h = absorb_zero_leaf(g, 0);
  CHECK(h.vertices.size() == 4);
  CHECK(h.edges.empty());
  int handles = 0;
  for (const auto& v : h.vertices) handles += v.genus == 0 && v.euler == 0;
  CHECK(handles == 2);
  CHECK(!can_absorb_zero_leaf(make({{0, 0, 0}, {1, 0, -1}, {2, 0, -2}}, {{0, 1}, {1, 2}, {1, 2}}), 0));
}

TEST_CASE("flip is an involution and preserves the determinant") {
  auto g = make({{0, 0, -2}, {1, 0, -2}, {2, 0, -2}}, {{0, 1}, {0, 2}}, {{1, 2}});
  auto f = flip_vertex(g, 0);
  CHECK(flip_vertex(f, 0) == g);
  CHECK(invariants(f).abs_det == invariants(g).abs_det);
  CHECK(det_oracle(g) == invariants(g).abs_det);
}

TEST_CASE("reduction is idempotent and replayable on random chains") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<long> e(-4, 1), n(1, 7);
  for (int k = 0; k < 200; ++k) {
    std::vector<long> es;
    std::vector<oracle::I> es64;
    for (long i = n(rng); i-- > 0;) {
      es.push_back(e(rng));
      es64.push_back(es.back());
    }
    auto g = chain(es);
    CHECK(invariants(g).abs_det == oracle::chain_det(es64));
    auto [r, t] = reduce(g);
    CHECK(replay(g, t) == r);
    auto [r2, t2] = reduce(r);
    CHECK(r2 == r);
    CHECK(t2.steps.empty());
    if (invariants(r).plus_forest) CHECK(invariants(r).abs_det == invariants(g).abs_det);
  }
}

TEST_CASE("planarity") {
  CHECK(is_planar(e8()).planar);
  CHECK(is_planar(e8()).decisive);
  std::vector<V> vs;
  std::vector<std::pair<int, int>> k5;
  for (int i = 0; i < 5; ++i) {
    vs.push_back({i, 0, -4});
    for (int j = i + 1; j < 5; ++j) k5.emplace_back(i, j);
  }
  auto p = is_planar(make(vs, k5));
  CHECK(!p.planar);
  CHECK(!p.decisive);
  std::vector<V> ws;
  std::vector<std::pair<int, int>> k33;
  for (int i = 0; i < 6; ++i) ws.push_back({i, 0, -3});
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) k33.emplace_back(i, j);
  CHECK(!is_planar(make(ws, k33)).planar);
  auto cycle = make({{0, 0, -3}, {1, 0, -3}, {2, 0, -3}}, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(is_planar(cycle).planar);
  CHECK(is_planar(cycle).decisive);
}

TEST_CASE("integer linear algebra") {
  CHECK(bareiss_det({{2, 4}, {6, 8}}) == -8);
  CHECK(smith_diagonal({{2, 4}, {6, 8}}) == std::vector<Int>{2, 4});
  CHECK(bareiss_det({{0, 1}, {1, 0}}) == -1);
  std::mt19937 rng(2);
  std::uniform_int_distribution<long> d(-4, 4);
  for (int k = 0; k < 50; ++k) {
    std::vector<std::vector<Int>> m(4, std::vector<Int>(4));
    std::vector<std::vector<long>> m64(4, std::vector<long>(4));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m[i][j] = m64[i][j] = d(rng);
    CHECK(bareiss_det(m) == oracle::cofactor_det(m64));
    auto diag = smith_diagonal(m);
    Int prod = 1;
    for (const auto& x : diag) prod *= x;
    // Only nonzero invariant factors are listed.
    if (diag.size() == 4) CHECK(prod == std::abs(oracle::cofactor_det(m64)));
    else CHECK(oracle::cofactor_det(m64) == 0);
  }
}
