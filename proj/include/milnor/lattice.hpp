#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace milnor {

using Int = mpz_class;
using Rational = mpq_class;

// N holds cone rays, M holds exponents; the pairing is only defined across sides.
enum class Side { N, M };

constexpr Side opposite(Side s) { return s == Side::N ? Side::M : Side::N; }

template <Side S>
struct Vec3 {
  std::array<Int, 3> c{};

  Vec3() = default;
  Vec3(Int x, Int y, Int z) : c{std::move(x), std::move(y), std::move(z)} {}
  explicit Vec3(const std::array<Int, 3>& a) : c(a) {}

  const Int& operator[](std::size_t i) const { return c[i]; }
  Int& operator[](std::size_t i) { return c[i]; }

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }

  friend bool operator==(const Vec3& a, const Vec3& b) {
    return a.c[0] == b.c[0] && a.c[1] == b.c[1] && a.c[2] == b.c[2];
  }
  friend bool operator<(const Vec3& a, const Vec3& b) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    }
    return false;
  }
  friend Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2]};
  }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2]};
  }
  friend Vec3 operator-(const Vec3& a) { return {-a.c[0], -a.c[1], -a.c[2]}; }
  friend Vec3 operator*(const Int& k, const Vec3& a) {
    return {k * a.c[0], k * a.c[1], k * a.c[2]};
  }
  Vec3& operator+=(const Vec3& o) {
    for (std::size_t i = 0; i < 3; ++i) c[i] += o.c[i];
    return *this;
  }
};

using NVec = Vec3<Side::N>;
using MVec = Vec3<Side::M>;

template <Side S>
std::string to_string(const Vec3<S>& v) {
  return "(" + v[0].get_str() + "," + v[1].get_str() + "," + v[2].get_str() + ")";
}

inline Int pairing(const MVec& m, const NVec& n) {
  return m[0] * n[0] + m[1] * n[1] + m[2] * n[2];
}

// Same-side scalar product, used only for orientation tests inside a plane.
template <Side S>
Int dot_same(const Vec3<S>& a, const Vec3<S>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// The cross product of two vectors on one side is a linear form on that side.
template <Side S>
Vec3<opposite(S)> cross(const Vec3<S>& a, const Vec3<S>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Coordinates reinterpreted on the other side (the standard bases are dual).
template <Side S>
Vec3<opposite(S)> transpose(const Vec3<S>& a) {
  return Vec3<opposite(S)>(a.c);
}

template <Side S>
Int det3(const Vec3<S>& a, const Vec3<S>& b, const Vec3<S>& c) {
  return dot_same(transpose(cross(a, b)), c);
}

template <Side S>
Int pair_any(const Vec3<opposite(S)>& f, const Vec3<S>& x) {
  return f[0] * x[0] + f[1] * x[1] + f[2] * x[2];
}

Int gcd3(const Int& a, const Int& b, const Int& c);

template <Side S>
Int integral_length(const Vec3<S>& v) {
  return gcd3(v[0], v[1], v[2]);
}

template <Side S>
Vec3<S> primitive(const Vec3<S>& v) {
  Int g = integral_length(v);
  if (g == 0) return v;
  return {v[0] / g, v[1] / g, v[2] / g};
}

template <Side S>
bool is_primitive(const Vec3<S>& v) {
  return integral_length(v) == 1;
}

// Rank of a family of vectors (0..3).
template <Side S>
int rank_of(const std::vector<Vec3<S>>& vs) {
  const Vec3<S>* first = nullptr;
  for (const auto& v : vs) {
    if (!v.is_zero()) {
      first = &v;
      break;
    }
  }
  if (!first) return 0;
  const Vec3<S>* second = nullptr;
  for (const auto& v : vs) {
    if (!cross(*first, v).is_zero()) {
      second = &v;
      break;
    }
  }
  if (!second) return 1;
  auto n = cross(*first, *second);
  for (const auto& v : vs) {
    if (pair_any<S>(n, v) != 0) return 3;
  }
  return 2;
}

struct Point2 {
  Int x;
  Int y;
  friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Point2& a, const Point2& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

// Affine unimodular chart of a lattice plane in M.
class Chart2D {
 public:
  Chart2D(MVec origin, MVec b1, MVec b2);

  const MVec& origin() const { return origin_; }
  const MVec& basis1() const { return b1_; }
  const MVec& basis2() const { return b2_; }
  // Normal functional of the plane (primitive).
  const NVec& normal() const { return normal_; }

  bool contains(const MVec& p) const;
  Point2 to_chart(const MVec& p) const;
  MVec from_chart(const Point2& q) const;

 private:
  MVec origin_, b1_, b2_;
  NVec normal_;
  NVec w_;       // b1 x b2, as a vector on the other side
  Int w_norm2_;  // |b1 x b2|^2
};

// Chart of the saturated plane lattice spanned by differences of coplanar points, with origin at the first point.
Chart2D face_chart(const std::vector<MVec>& points);

// Chart of {m : <m, n> = 0} for a nonzero functional n.
Chart2D orthogonal_chart(const NVec& n);

// Basis (b1, b2) of the kernel lattice of a nonzero integer functional, Gauss-reduced.
std::pair<std::array<Int, 3>, std::array<Int, 3>> kernel_basis(const std::array<Int, 3>& n);

// Gcd of the 2x2 minors of a 2x3 matrix; equals the index of the rows in their saturation.
Int minor_gcd(const std::array<Int, 3>& a, const std::array<Int, 3>& b);

}  // namespace milnor
