#include "milnor/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace milnor {

Int gcd3(const Int& a, const Int& b, const Int& c) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

Int minor_gcd(const std::array<Int, 3>& a, const std::array<Int, 3>& b) {
  return integral_length(cross(NVec(a), NVec(b)));
}

namespace {

using Col = std::array<Int, 3>;

Int norm2(const Col& v) { return v[0] * v[0] + v[1] * v[1] + v[2] * v[2]; }
Int dot(const Col& a, const Col& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// Nearest integer to p/q, q > 0, ties toward -infinity.
Int round_div(const Int& p, const Int& q) {
  Int twice = 2 * p + q;
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), twice.get_mpz_t(), Int(2 * q).get_mpz_t());
  return r;
}

void make_sign_positive(Col& v) {
  for (const auto& x : v) {
    if (x != 0) {
      if (x < 0) {
        for (auto& y : v) y = -y;
      }
      return;
    }
  }
}

bool lex_greater(const Col& a, const Col& b) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

}  // namespace

std::pair<std::array<Int, 3>, std::array<Int, 3>> kernel_basis(const std::array<Int, 3>& n) {
  if (n[0] == 0 && n[1] == 0 && n[2] == 0) throw std::invalid_argument("kernel_basis: zero functional");
  std::array<Col, 3> u{Col{1, 0, 0}, Col{0, 1, 0}, Col{0, 0, 1}};
  Col row = n;
  for (std::size_t j = 1; j < 3; ++j) {
    if (row[0] == 0 && row[j] == 0) continue;
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), row[0].get_mpz_t(), row[j].get_mpz_t());
    Int a = row[j] / g;
    Int b = row[0] / g;
    Col c0, cj;
    for (std::size_t i = 0; i < 3; ++i) {
      c0[i] = s * u[0][i] + t * u[j][i];
      cj[i] = -a * u[0][i] + b * u[j][i];
    }
    u[0] = c0;
    u[j] = cj;
    row[0] = g;
    row[j] = 0;
  }
  Col b1 = u[1], b2 = u[2];
  // Lagrange reduction.
  for (;;) {
    if (norm2(b2) < norm2(b1)) std::swap(b1, b2);
    Int mu = round_div(dot(b1, b2), norm2(b1));
    if (mu == 0) break;
    for (std::size_t i = 0; i < 3; ++i) b2[i] -= mu * b1[i];
  }
  make_sign_positive(b1);
  make_sign_positive(b2);
  if (norm2(b1) == norm2(b2) && lex_greater(b2, b1)) std::swap(b1, b2);
  return {b1, b2};
}

Chart2D::Chart2D(MVec origin, MVec b1, MVec b2)
    : origin_(std::move(origin)), b1_(std::move(b1)), b2_(std::move(b2)) {
  w_ = cross(b1_, b2_);
  if (w_.is_zero()) throw std::invalid_argument("Chart2D: dependent basis");
  normal_ = primitive(w_);
  if (!(normal_ == w_ || normal_ == -w_)) throw std::invalid_argument("Chart2D: basis is not saturated");
  w_norm2_ = dot_same(w_, w_);
}

bool Chart2D::contains(const MVec& p) const { return pairing(p - origin_, normal_) == 0; }

Point2 Chart2D::to_chart(const MVec& p) const {
  if (!contains(p)) throw std::invalid_argument("Chart2D: point " + to_string(p) + " is off the plane");
  MVec d = p - origin_;
  Int x = dot_same(cross(d, b2_), w_);
  Int y = dot_same(cross(b1_, d), w_);
  if (!mpz_divisible_p(x.get_mpz_t(), w_norm2_.get_mpz_t()) ||
      !mpz_divisible_p(y.get_mpz_t(), w_norm2_.get_mpz_t())) {
    throw std::logic_error("Chart2D: non-integral chart coordinates");
  }
  return {x / w_norm2_, y / w_norm2_};
}

MVec Chart2D::from_chart(const Point2& q) const { return origin_ + q.x * b1_ + q.y * b2_; }

Chart2D orthogonal_chart(const NVec& n) {
  auto [b1, b2] = kernel_basis(primitive(n).c);
  return Chart2D(MVec{0, 0, 0}, MVec(b1), MVec(b2));
}

Chart2D face_chart(const std::vector<MVec>& points) {
  if (points.size() < 3) throw std::invalid_argument("face_chart: need at least three points");
  MVec origin = points.front();
  std::vector<MVec> diffs;
  diffs.reserve(points.size());
  for (const auto& p : points) diffs.push_back(p - origin);
  if (rank_of(diffs) != 2) throw std::invalid_argument("face_chart: points are not affinely two-dimensional");
  const MVec* d1 = nullptr;
  NVec n;
  for (const auto& d : diffs) {
    if (d.is_zero()) continue;
    if (!d1) {
      d1 = &d;
      continue;
    }
    n = cross(*d1, d);
    if (!n.is_zero()) break;
  }
  auto [b1, b2] = kernel_basis(primitive(n).c);
  return Chart2D(origin, MVec(b1), MVec(b2));
}

}  // namespace milnor
