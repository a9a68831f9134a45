#include "milnor/plumbing_calculus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace milnor {

const PlumbVertex* PlumbGraph::find(int id) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), id,
                             [](const PlumbVertex& p, int i) { return p.id < i; });
  return it != vertices.end() && it->id == id ? &*it : nullptr;
}

PlumbVertex* PlumbGraph::find(int id) {
  return const_cast<PlumbVertex*>(std::as_const(*this).find(id));
}

void PlumbGraph::normalize() {
  std::sort(vertices.begin(), vertices.end(), [](const PlumbVertex& a, const PlumbVertex& b) { return a.id < b.id; });
  std::vector<Edge> flat;
  for (const auto& e : edges) {
    Edge x = e;
    if (x.u > x.v) std::swap(x.u, x.v);
    x.count = 1;
    for (std::size_t k = 0; k < e.count; ++k) flat.push_back(x);
  }
  std::sort(flat.begin(), flat.end(), [](const Edge& a, const Edge& b) {
    return std::tuple(a.u, a.v, value(a.sign)) < std::tuple(b.u, b.v, value(b.sign));
  });
  edges = std::move(flat);
}

bool operator==(const PlumbGraph& a, const PlumbGraph& b) {
  if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size()) return false;
  for (std::size_t i = 0; i < a.vertices.size(); ++i) {
    const auto& x = a.vertices[i];
    const auto& y = b.vertices[i];
    if (x.id != y.id || x.genus != y.genus || x.euler != y.euler) return false;
  }
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    const auto& x = a.edges[i];
    const auto& y = b.edges[i];
    if (x.u != y.u || x.v != y.v || x.sign != y.sign || x.count != y.count) return false;
  }
  return true;
}

namespace {

std::vector<std::size_t> incident(const PlumbGraph& g, int v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    if (g.edges[i].u == v || g.edges[i].v == v) out.push_back(i);
  return out;
}

int valence(const PlumbGraph& g, int v) {
  int n = 0;
  for (const auto& e : g.edges) n += (e.u == v) + (e.v == v);
  return n;
}

bool has_loop(const PlumbGraph& g, int v) {
  return std::any_of(g.edges.begin(), g.edges.end(), [v](const Edge& e) { return e.u == v && e.v == v; });
}

int other_end(const Edge& e, int v) { return e.u == v ? e.v : e.u; }

const PlumbVertex& at(const PlumbGraph& g, int v) {
  const auto* p = g.find(v);
  if (!p) throw std::invalid_argument("no vertex with id " + std::to_string(v));
  return *p;
}

void erase_vertex(PlumbGraph& g, int v) {
  g.vertices.erase(std::remove_if(g.vertices.begin(), g.vertices.end(), [v](const PlumbVertex& p) { return p.id == v; }),
                   g.vertices.end());
  g.edges.erase(std::remove_if(g.edges.begin(), g.edges.end(), [v](const Edge& e) { return e.u == v || e.v == v; }),
                g.edges.end());
}

std::string describe(const PlumbGraph& g, const std::vector<int>& ids) {
  std::ostringstream os;
  bool first = true;
  for (int id : ids) {
    const auto* p = g.find(id);
    if (!first) os << "; ";
    first = false;
    if (!p) {
      os << "v" << id << " removed";
      continue;
    }
    os << "v" << id << " e=" << p->euler.get_str() << " g=" << p->genus.get_str() << " nbrs=";
    bool f2 = true;
    for (auto i : incident(g, id)) {
      const auto& e = g.edges[i];
      if (!f2) os << ",";
      f2 = false;
      os << symbol(e.sign) << other_end(e, id);
    }
    if (f2) os << "none";
  }
  return os.str();
}

// Connected components by vertex id, skipping the given vertices.
std::map<int, int> components(const PlumbGraph& g, const std::set<int>& skip = {}) {
  std::map<int, int> comp;
  int next = 0;
  for (const auto& p : g.vertices) {
    if (skip.count(p.id) || comp.count(p.id)) continue;
    std::queue<int> q;
    q.push(p.id);
    comp[p.id] = next;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (const auto& e : g.edges) {
        if (e.u != x && e.v != x) continue;
        int y = other_end(e, x);
        if (skip.count(y) || comp.count(y)) continue;
        comp[y] = next;
        q.push(y);
      }
    }
    ++next;
  }
  return comp;
}

// Vertices to flip so that a breadth-first spanning forest has only + edges.
std::vector<int> forest_flips(const PlumbGraph& g) {
  std::map<int, int> parity;
  std::vector<int> flips;
  for (const auto& root : g.vertices) {
    if (parity.count(root.id)) continue;
    parity[root.id] = 0;
    std::queue<int> q;
    q.push(root.id);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      std::vector<std::pair<int, Sign>> nbrs;
      for (const auto& e : g.edges)
        if ((e.u == x) != (e.v == x)) nbrs.emplace_back(other_end(e, x), e.sign);
      std::sort(nbrs.begin(), nbrs.end(),
                [](const auto& a, const auto& b) { return std::pair(a.first, value(a.second)) < std::pair(b.first, value(b.second)); });
      for (const auto& [y, s] : nbrs) {
        if (parity.count(y)) continue;
        parity[y] = parity[x] ^ (s == Sign::Minus ? 1 : 0);
        if (parity[y]) flips.push_back(y);
        q.push(y);
      }
    }
  }
  std::sort(flips.begin(), flips.end());
  return flips;
}

bool plus_forest(const PlumbGraph& g) {
  return is_forest(g) && std::all_of(g.edges.begin(), g.edges.end(), [](const Edge& e) { return e.sign == Sign::Plus; });
}

std::vector<std::vector<Int>> intersection_matrix(const PlumbGraph& g) {
  std::map<int, std::size_t> idx;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) idx[g.vertices[i].id] = i;
  std::vector<std::vector<Int>> a(g.vertices.size(), std::vector<Int>(g.vertices.size(), Int(0)));
  for (std::size_t i = 0; i < g.vertices.size(); ++i) a[i][i] = g.vertices[i].euler;
  for (const auto& e : g.edges) {
    auto i = idx.at(e.u), j = idx.at(e.v);
    Int s = value(e.sign) * static_cast<long>(e.count);
    if (i == j) {
      a[i][i] += 2 * s;
    } else {
      a[i][j] += s;
      a[j][i] += s;
    }
  }
  return a;
}

// Leading principal minors via fraction-free elimination without pivoting; true when all are > 0.
bool positive_definite(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  Int prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    prev = m[k][k];
  }
  return true;
}

// Sum of 1 + 2g over vertices; strictly decreases under every move other than R0.
Int weight(const PlumbGraph& g) {
  Int w = 0;
  for (const auto& p : g.vertices) w += 1 + 2 * p.genus;
  return w;
}

using Move = PlumbGraph (*)(const PlumbGraph&, int);

Move move_of(const std::string& name) {
  if (name == "R0") return flip_vertex;
  if (name == "R1") return blow_down;
  if (name == "R3") return absorb_zero_chain;
  if (name == "R6") return absorb_zero_leaf;
  throw std::invalid_argument("unknown move " + name);
}

}  // namespace

bool is_forest(const PlumbGraph& g) {
  auto comp = components(g);
  std::set<int> ids;
  for (auto& [v, c] : comp) ids.insert(c);
  for (const auto& e : g.edges)
    if (e.u == e.v || e.count != 1) return false;
  return g.edges.size() + ids.size() == g.vertices.size();
}

PlumbGraph flip_vertex(const PlumbGraph& g, int v) {
  at(g, v);
  PlumbGraph r = g;
  for (auto& e : r.edges)
    if ((e.u == v) != (e.v == v)) e.sign = -e.sign;
  r.normalize();
  return r;
}

bool can_blow_down(const PlumbGraph& g, int v) {
  const auto* p = g.find(v);
  return p && p->genus == 0 && (p->euler == 1 || p->euler == -1) && valence(g, v) <= 2 && !has_loop(g, v);
}

PlumbGraph blow_down(const PlumbGraph& g, int v) {
  if (!can_blow_down(g, v)) throw std::invalid_argument("blow-down needs a genus-0 vertex with e = +-1 and valence <= 2");
  const Int eps = at(g, v).euler;
  auto inc = incident(g, v);
  PlumbGraph r = g;
  std::vector<std::pair<int, Sign>> nbrs;
  for (auto i : inc) nbrs.emplace_back(other_end(g.edges[i], v), g.edges[i].sign);
  for (const auto& [w, s] : nbrs) r.find(w)->euler -= eps;
  erase_vertex(r, v);
  if (nbrs.size() == 2) {
    Sign s = nbrs[0].second * nbrs[1].second;
    if (eps > 0) s = -s;
    r.edges.push_back({nbrs[0].first, nbrs[1].first, s, 1});
  }
  r.normalize();
  return r;
}

bool can_absorb_zero_chain(const PlumbGraph& g, int v) {
  const auto* p = g.find(v);
  if (!p || p->genus != 0 || p->euler != 0 || valence(g, v) != 2 || has_loop(g, v)) return false;
  auto inc = incident(g, v);
  return other_end(g.edges[inc[0]], v) != other_end(g.edges[inc[1]], v);
}

PlumbGraph absorb_zero_chain(const PlumbGraph& g, int v) {
  if (!can_absorb_zero_chain(g, v)) throw std::invalid_argument("0-chain absorption needs a genus-0 vertex with e = 0 and two distinct neighbours");
  auto inc = incident(g, v);
  if (g.edges[inc[0]].sign != Sign::Plus || g.edges[inc[1]].sign != Sign::Plus)
    throw std::invalid_argument("0-chain absorption needs both edges at the vertex to be +");
  int a = other_end(g.edges[inc[0]], v), b = other_end(g.edges[inc[1]], v);
  int keep = std::min(a, b), drop = std::max(a, b);
  PlumbGraph r = g;
  erase_vertex(r, v);
  const auto& d = at(g, drop);
  r.find(keep)->euler += d.euler;
  r.find(keep)->genus += d.genus;
  for (auto& e : r.edges) {
    if (e.u == drop) e.u = keep;
    if (e.v == drop) e.v = keep;
  }
  r.vertices.erase(std::remove_if(r.vertices.begin(), r.vertices.end(), [drop](const PlumbVertex& p) { return p.id == drop; }),
                   r.vertices.end());
  r.normalize();
  return r;
}

bool can_absorb_zero_leaf(const PlumbGraph& g, int v) {
  const auto* p = g.find(v);
  if (!p || p->genus != 0 || p->euler != 0 || valence(g, v) != 1) return false;
  int w = other_end(g.edges[incident(g, v)[0]], v);
  if (has_loop(g, w)) return false;
  auto comp = components(g, {v, w});
  std::set<int> seen;
  for (auto i : incident(g, w)) {
    int x = other_end(g.edges[i], w);
    if (x == v) continue;
    if (!seen.insert(comp.at(x)).second) return false;
  }
  return true;
}

PlumbGraph absorb_zero_leaf(const PlumbGraph& g, int v) {
  if (!can_absorb_zero_leaf(g, v)) throw std::invalid_argument("0-leaf absorption needs a genus-0 leaf with e = 0 whose neighbour separates its branches");
  int w = other_end(g.edges[incident(g, v)[0]], v);
  Int handles = 2 * at(g, w).genus;
  int next = g.vertices.empty() ? 0 : g.vertices.back().id + 1;
  PlumbGraph r = g;
  erase_vertex(r, v);
  erase_vertex(r, w);
  for (Int k = 0; k < handles; ++k) r.vertices.push_back({next++, Int(0), Int(0)});
  r.normalize();
  return r;
}

std::pair<PlumbGraph, ReductionTrace> reduce(const PlumbGraph& input) {
  PlumbGraph g = input;
  g.normalize();
  ReductionTrace trace;
  auto apply = [&](const std::string& name, int v, std::vector<int> watch) {
    PlumbGraph next = move_of(name)(g, v);
    ReductionStep step{name, {v}, describe(g, watch), describe(next, watch)};
    if (name != "R0" && weight(next) >= weight(g))
      throw std::logic_error("reduction move " + name + " did not decrease the weighted vertex count");
    if (name == "R1" && plus_forest(g) && plus_forest(next)) {
      if (abs(bareiss_det(intersection_matrix(g))) != abs(bareiss_det(intersection_matrix(next))))
        throw std::logic_error("blow-down changed |det| at vertex " + std::to_string(v));
    }
    trace.steps.push_back(std::move(step));
    g = std::move(next);
  };
  auto neighbourhood = [&](int v) {
    std::vector<int> ids{v};
    for (auto i : incident(g, v)) ids.push_back(other_end(g.edges[i], v));
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
  };
  for (;;) {
    for (int v : forest_flips(g)) apply("R0", v, {v});
    bool moved = false;
    for (const auto& p : g.vertices)
      if (can_blow_down(g, p.id)) {
        apply("R1", p.id, neighbourhood(p.id));
        moved = true;
        break;
      }
    if (moved) continue;
    for (const auto& p : g.vertices)
      if (can_absorb_zero_chain(g, p.id)) {
        int v = p.id;
        auto inc = incident(g, v);
        Sign s0 = g.edges[inc[0]].sign, s1 = g.edges[inc[1]].sign;
        if (s0 != s1) {
          int w = std::max(other_end(g.edges[inc[0]], v), other_end(g.edges[inc[1]], v));
          apply("R0", w, {w});
          inc = incident(g, v);
        }
        if (g.edges[inc[0]].sign == Sign::Minus) apply("R0", v, {v});
        apply("R3", v, neighbourhood(v));
        moved = true;
        break;
      }
    if (moved) continue;
    for (const auto& p : g.vertices)
      if (can_absorb_zero_leaf(g, p.id)) {
        apply("R6", p.id, neighbourhood(p.id));
        moved = true;
        break;
      }
    if (!moved) break;
  }
  return {g, trace};
}

PlumbGraph replay(const PlumbGraph& input, const ReductionTrace& t) {
  PlumbGraph g = input;
  g.normalize();
  for (const auto& s : t.steps) {
    if (s.site.size() != 1) throw std::invalid_argument("malformed reduction step");
    g = move_of(s.move)(g, s.site[0]);
  }
  return g;
}

Int bareiss_det(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<Int> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Pivot: nonzero entry of least absolute value in the remaining block.
    for (;;) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pi == rows || abs(m[i][j]) < abs(m[pi][pj]))) pi = i, pj = j;
      if (pi == rows) return diag;
      std::swap(m[t], m[pi]);
      for (auto& row : m) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Int q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Int q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold any entry not divisible by the pivot into row t.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(m[t][t]));
  }
  return diag;
}

GraphInvariants invariants(const PlumbGraph& input) {
  PlumbGraph g = input;
  g.normalize();
  GraphInvariants r;
  r.matrix = intersection_matrix(g);
  r.abs_det = abs(bareiss_det(r.matrix));
  auto neg = r.matrix;
  for (auto& row : neg)
    for (auto& x : row) x = -x;
  r.negative_definite = positive_definite(neg);
  r.plus_forest = plus_forest(g);
  if (r.plus_forest) {
    r.h1_supported = true;
    auto d = smith_diagonal(r.matrix);
    Int genus = 0;
    for (const auto& p : g.vertices) genus += p.genus;
    r.h1_rank = 2 * genus + Int(static_cast<long>(g.vertices.size() - d.size()));
    for (const auto& x : d)
      if (x > 1) r.h1_torsion.push_back(x);
  }
  return r;
}

PlanarityVerdict is_planar(const PlumbGraph& input) {
  PlumbGraph g = input;
  g.normalize();
  std::map<int, std::size_t> idx;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) idx[g.vertices[i].id] = i;
  std::set<std::pair<std::size_t, std::size_t>> simple;
  for (const auto& e : g.edges)
    if (e.u != e.v) simple.insert({idx.at(e.u), idx.at(e.v)});
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BG bg(g.vertices.size());
  for (auto [a, b] : simple) boost::add_edge(a, b, bg);
  PlanarityVerdict v;
  v.planar = boost::boyer_myrvold_planarity_test(bg);
  bool single_cycle = false;
  auto comp = components(g);
  std::set<int> cs;
  for (auto& [id, c] : comp) cs.insert(c);
  if (cs.size() == 1 && g.edges.size() == g.vertices.size() && g.vertices.size() >= 1)
    single_cycle = std::all_of(g.vertices.begin(), g.vertices.end(), [&](const PlumbVertex& p) { return valence(g, p.id) == 2; });
  v.decisive = is_forest(g) || single_cycle;
  return v;
}

}  // namespace milnor
