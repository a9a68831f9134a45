#include "milnor/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

namespace milnor::kernels {

namespace {

using Col = std::array<Int, 3>;

// Coordinates of each ray in the given lattice basis.
std::vector<std::vector<Int>> ray_coordinates(const SimplexLattice& s) {
  const std::size_t k = s.rays.size();
  if (k != s.basis.size() || k < 1 || k > 3) throw std::invalid_argument("parallelepiped: bad lattice data");
  std::vector<std::vector<Int>> coords(k, std::vector<Int>(k));
  if (k == 1) {
    NVec b(s.basis[0]);
    NVec r(s.rays[0]);
    Int len = integral_length(b);
    if (len == 0) throw std::invalid_argument("parallelepiped: zero basis");
    std::size_t j = 0;
    while (b[j] == 0) ++j;
    coords[0][0] = r[j] / b[j];
    return coords;
  }
  if (k == 2) {
    NVec b1(s.basis[0]), b2(s.basis[1]);
    MVec w = cross(b1, b2);
    Int w2 = dot_same(w, w);
    for (std::size_t j = 0; j < 2; ++j) {
      NVec r(s.rays[j]);
      Int x = dot_same(cross(r, b2), w);
      Int y = dot_same(cross(b1, r), w);
      if (!mpz_divisible_p(x.get_mpz_t(), w2.get_mpz_t()) || !mpz_divisible_p(y.get_mpz_t(), w2.get_mpz_t())) {
        throw std::invalid_argument("parallelepiped: ray outside the lattice");
      }
      coords[0][j] = x / w2;
      coords[1][j] = y / w2;
    }
    return coords;
  }
  NVec b0(s.basis[0]), b1(s.basis[1]), b2(s.basis[2]);
  Int d = det3(b0, b1, b2);
  for (std::size_t j = 0; j < 3; ++j) {
    NVec r(s.rays[j]);
    std::array<Int, 3> x{det3(r, b1, b2), det3(b0, r, b2), det3(b0, b1, r)};
    for (std::size_t i = 0; i < 3; ++i) {
      if (!mpz_divisible_p(x[i].get_mpz_t(), d.get_mpz_t())) throw std::invalid_argument("parallelepiped: ray outside the lattice");
      coords[i][j] = x[i] / d;
    }
  }
  return coords;
}

// Lower-triangular column Hermite form; returns the diagonal.
std::vector<Int> hermite_diagonal(std::vector<std::vector<Int>> a) {
  const std::size_t k = a.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (a[i][j] == 0) continue;
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[i][i].get_mpz_t(), a[i][j].get_mpz_t());
      Int p = a[i][j] / g, q = a[i][i] / g;
      for (std::size_t r = 0; r < k; ++r) {
        Int ci = s * a[r][i] + t * a[r][j];
        Int cj = -p * a[r][i] + q * a[r][j];
        a[r][i] = ci;
        a[r][j] = cj;
      }
    }
    if (a[i][i] == 0) throw std::invalid_argument("parallelepiped: rays are dependent");
  }
  std::vector<Int> diag(k);
  for (std::size_t i = 0; i < k; ++i) diag[i] = abs(a[i][i]);
  return diag;
}

// Inverse of a small integer matrix as adjugate / determinant.
struct SmallInverse {
  std::vector<std::vector<Int>> adj;
  Int det;
};

SmallInverse small_inverse(const std::vector<std::vector<Int>>& m) {
  const std::size_t k = m.size();
  SmallInverse inv;
  inv.adj.assign(k, std::vector<Int>(k));
  if (k == 1) {
    inv.det = m[0][0];
    inv.adj[0][0] = 1;
  } else if (k == 2) {
    inv.det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    inv.adj = {{m[1][1], -m[0][1]}, {-m[1][0], m[0][0]}};
  } else {
    auto c = [&](std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
      return Int(m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]);
    };
    inv.det = m[0][0] * c(1, 2, 1, 2) - m[0][1] * c(1, 2, 0, 2) + m[0][2] * c(1, 2, 0, 1);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        std::size_t r0 = j == 0 ? 1 : 0, r1 = j == 2 ? 1 : 2;
        std::size_t c0 = i == 0 ? 1 : 0, c1 = i == 2 ? 1 : 2;
        Int minor = c(r0, r1, c0, c1);
        inv.adj[i][j] = ((i + j) % 2 == 0) ? minor : Int(-minor);
      }
    }
  }
  return inv;
}

struct ParallelepipedPlan {
  std::vector<std::vector<Int>> coords;
  std::vector<Int> diag;
  SmallInverse inv;
  std::size_t count = 1;
};

ParallelepipedPlan plan(const SimplexLattice& s) {
  ParallelepipedPlan p;
  p.coords = ray_coordinates(s);
  p.diag = hermite_diagonal(p.coords);
  p.inv = small_inverse(p.coords);
  Int total = 1;
  for (const auto& h : p.diag) total *= h;
  if (!total.fits_ulong_p() || total > Int(50000000)) throw std::length_error("parallelepiped: too many points");
  p.count = total.get_ui();
  return p;
}

Col parallelepiped_point(const SimplexLattice& s, const ParallelepipedPlan& p, std::size_t index) {
  const std::size_t k = p.diag.size();
  std::vector<Int> x(k);
  for (std::size_t i = 0; i < k; ++i) {
    unsigned long h = p.diag[i].get_ui();
    x[i] = static_cast<unsigned long>(index % h);
    index /= h;
  }
  // lambda_j = (adj x)_j / det, reduced mod 1.
  Col point{0, 0, 0};
  Int det = abs(p.inv.det);
  int sdet = sgn(p.inv.det);
  for (std::size_t j = 0; j < k; ++j) {
    Int num = 0;
    for (std::size_t i = 0; i < k; ++i) num += p.inv.adj[j][i] * x[i];
    if (sdet < 0) num = -num;
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), det.get_mpz_t());
    for (std::size_t c = 0; c < 3; ++c) point[c] += r * s.rays[j][c];
  }
  for (std::size_t c = 0; c < 3; ++c) {
    if (!mpz_divisible_p(point[c].get_mpz_t(), det.get_mpz_t())) throw std::logic_error("parallelepiped: non-lattice point");
    point[c] /= det;
  }
  return point;
}

bool reducible(const std::vector<MVec>& candidates, const MCone& cone, std::size_t i) {
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    if (j == i) continue;
    if (candidates[j] == candidates[i] || candidates[j].is_zero()) continue;
    if (cone.contains(candidates[i] - candidates[j])) return true;
  }
  return false;
}

Int min_pairing(const std::vector<MVec>& support, const NVec& v) {
  if (support.empty()) throw std::invalid_argument("min_pairings: empty support");
  Int best = pairing(support[0], v);
  for (std::size_t i = 1; i < support.size(); ++i) {
    Int p = pairing(support[i], v);
    if (p < best) best = p;
  }
  return best;
}

bool proper_pair(const NCone& a, const NCone& b) {
  NCone c = intersect(a, b);
  return a.has_face(c) && b.has_face(c);
}

}  // namespace

namespace serial {

std::vector<Col> parallelepiped_points(const SimplexLattice& s) {
  auto p = plan(s);
  std::vector<Col> out;
  out.reserve(p.count);
  for (std::size_t i = 0; i < p.count; ++i) out.push_back(parallelepiped_point(s, p, i));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<bool> irreducible_mask(const std::vector<MVec>& candidates, const MCone& cone) {
  std::vector<bool> mask(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) mask[i] = !reducible(candidates, cone, i);
  return mask;
}

std::vector<Int> min_pairings(const std::vector<MVec>& support, const std::vector<NVec>& directions) {
  std::vector<Int> out;
  out.reserve(directions.size());
  for (const auto& v : directions) out.push_back(min_pairing(support, v));
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> improper_pairs(const std::vector<NCone>& cones) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      if (!proper_pair(cones[i], cones[j])) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace serial

namespace parallel {

std::vector<Col> parallelepiped_points(const SimplexLattice& s) {
  auto p = plan(s);
  std::vector<Col> out(p.count);
  const long n = static_cast<long>(p.count);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) out[i] = parallelepiped_point(s, p, static_cast<std::size_t>(i));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<bool> irreducible_mask(const std::vector<MVec>& candidates, const MCone& cone) {
  const long n = static_cast<long>(candidates.size());
  std::vector<char> flags(candidates.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < n; ++i) flags[i] = reducible(candidates, cone, static_cast<std::size_t>(i)) ? 0 : 1;
  return std::vector<bool>(flags.begin(), flags.end());
}

std::vector<Int> min_pairings(const std::vector<MVec>& support, const std::vector<NVec>& directions) {
  std::vector<Int> out(directions.size());
  const long n = static_cast<long>(directions.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) out[i] = min_pairing(support, directions[i]);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> improper_pairs(const std::vector<NCone>& cones) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const long n = static_cast<long>(cones.size());
#pragma omp parallel
  {
    std::vector<std::pair<std::size_t, std::size_t>> local;
#pragma omp for schedule(dynamic, 4) nowait
    for (long i = 0; i < n; ++i) {
      for (std::size_t j = static_cast<std::size_t>(i) + 1; j < cones.size(); ++j) {
        if (!proper_pair(cones[i], cones[j])) local.emplace_back(static_cast<std::size_t>(i), j);
      }
    }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace parallel

}  // namespace milnor::kernels
