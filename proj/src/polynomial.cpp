#include "milnor/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace milnor {

GaussRational GaussRational::inverse() const {
  Rational n = re * re + im * im;
  if (n == 0) throw std::domain_error("GaussRational: division by zero");
  return {re / n, -im / n};
}

UPoly::UPoly(std::vector<GaussRational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(GaussRational c) { return UPoly({std::move(c)}); }

UPoly UPoly::monomial(GaussRational c, std::size_t degree) {
  std::vector<GaussRational> v(degree + 1);
  v[degree] = std::move(c);
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::derivative() const {
  std::vector<GaussRational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    Rational k(static_cast<unsigned long>(i));
    d.push_back({c_[i].re * k, c_[i].im * k});
  }
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  GaussRational inv = lead().inverse();
  return inv * *this;
}

UPoly UPoly::strip_variable_power() const {
  std::size_t k = 0;
  while (k < c_.size() && c_[k].is_zero()) ++k;
  return UPoly(std::vector<GaussRational>(c_.begin() + static_cast<long>(k), c_.end()));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<GaussRational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<GaussRational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return UPoly(std::move(v));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussRational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(v));
}

UPoly operator*(const GaussRational& k, const UPoly& a) {
  std::vector<GaussRational> v = a.c_;
  for (auto& x : v) x = k * x;
  return UPoly(std::move(v));
}

UDivision divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("UPoly: division by zero polynomial");
  std::vector<GaussRational> r = a.coeffs();
  long db = b.degree();
  long da = a.degree();
  if (da < db) return {UPoly(), a};
  std::vector<GaussRational> q(static_cast<std::size_t>(da - db + 1));
  GaussRational inv = b.lead().inverse();
  for (long i = da; i >= db; --i) {
    GaussRational f = r[static_cast<std::size_t>(i)] * inv;
    q[static_cast<std::size_t>(i - db)] = f;
    if (f.is_zero()) continue;
    for (long j = 0; j <= db; ++j) {
      auto& x = r[static_cast<std::size_t>(i - db + j)];
      x = x - f * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly gcd_cofactor(const UPoly& a, const UPoly& m) {
  UPoly r0 = m, r1 = divmod(a, m).remainder;
  UPoly s0, s1 = UPoly::constant({1, 0});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.is_zero()) return {};
  GaussRational inv = r0.lead().inverse();
  return divmod(inv * s0, m).remainder;
}

UPoly squarefree_part(const UPoly& a) {
  if (a.degree() <= 0) return a.monic();
  UPoly g = gcd(a, a.derivative());
  return divmod(a, g).quotient.monic();
}

BPoly trim(BPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

long t_degree(const BPoly& p) { return static_cast<long>(trim(p).size()) - 1; }

BPoly d_ds(const BPoly& p) {
  BPoly out;
  for (const auto& c : p) out.push_back(c.derivative());
  return trim(out);
}

BPoly d_dt(const BPoly& p) {
  BPoly out;
  for (std::size_t j = 1; j < p.size(); ++j) {
    Rational k(static_cast<unsigned long>(j));
    out.push_back(GaussRational{k, 0} * p[j]);
  }
  return trim(out);
}

BPoly bpoly_from_terms(const std::vector<std::pair<std::pair<Int, Int>, GaussRational>>& terms) {
  if (terms.empty()) return {};
  Int mi = terms[0].first.first, mj = terms[0].first.second;
  for (const auto& [e, c] : terms) {
    if (e.first < mi) mi = e.first;
    if (e.second < mj) mj = e.second;
  }
  BPoly p;
  for (const auto& [e, c] : terms) {
    Int i = e.first - mi, j = e.second - mj;
    if (!i.fits_ulong_p() || !j.fits_ulong_p() || i > 100000 || j > 100000) {
      throw std::length_error("bpoly_from_terms: exponent too large");
    }
    std::size_t ti = j.get_ui(), si = i.get_ui();
    if (p.size() <= ti) p.resize(ti + 1);
    p[ti] = p[ti] + UPoly::monomial(c, si);
  }
  return trim(p);
}

namespace {

UPoly exact_div(const UPoly& a, const UPoly& b) {
  auto d = divmod(a, b);
  if (!d.remainder.is_zero()) throw std::logic_error("resultant: inexact division");
  return d.quotient;
}

}  // namespace

UPoly resultant_t(const BPoly& a0, const BPoly& b0) {
  BPoly a = trim(a0), b = trim(b0);
  if (a.empty() || b.empty()) return {};
  const std::size_t m = a.size() - 1, n = b.size() - 1;
  const std::size_t size = m + n;
  if (size == 0) return UPoly::constant({1, 0});
  std::vector<std::vector<UPoly>> s(size, std::vector<UPoly>(size));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = a[m - k];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = b[n - k];
  }
  bool negate = false;
  UPoly prev = UPoly::constant({1, 0});
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (s[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < size && s[p][k].is_zero()) ++p;
      if (p == size) return {};
      std::swap(s[k], s[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        s[i][j] = exact_div(s[k][k] * s[i][j] - s[i][k] * s[k][j], prev);
      }
      s[i][k] = UPoly();
    }
    prev = s[k][k];
  }
  UPoly det = s[size - 1][size - 1];
  return negate ? GaussRational{-1, 0} * det : det;
}

bool has_repeated_torus_root(const UPoly& f) {
  UPoly g = f.strip_variable_power();
  if (g.degree() <= 0) return false;
  return gcd(g, g.derivative()).degree() >= 1;
}

namespace {

// Polynomials in t over Q(i)[s]/(g), g squarefree.
using APoly = std::vector<UPoly>;

struct Branch {
  UPoly modulus;
  APoly gcd;
};

UPoly mod(const UPoly& a, const UPoly& g) { return divmod(a, g).remainder; }

APoly reduce(APoly p, const UPoly& g) {
  for (auto& c : p) c = mod(c, g);
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

APoly scale(const APoly& p, const UPoly& k, const UPoly& g) {
  APoly out;
  for (const auto& c : p) out.push_back(mod(k * c, g));
  return reduce(out, g);
}

// Remainder of a by b when the leading coefficient of b has inverse inv modulo g.
APoly remainder(APoly a, const APoly& b, const UPoly& inv, const UPoly& g) {
  a = reduce(a, g);
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    std::size_t shift = a.size() - 1 - db;
    UPoly f = mod(a.back() * inv, g);
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = mod(a[shift + j] - f * b[j], g);
    a = reduce(a, g);
  }
  return a;
}

void split_gcd(const UPoly& g, const APoly& a0, const APoly& b0, std::vector<Branch>& out) {
  APoly a = reduce(a0, g), b = reduce(b0, g);
  if (b.empty()) {
    if (a.empty()) {
      out.push_back({g, {}});
      return;
    }
    UPoly h = gcd(a.back(), g);
    if (h.degree() > 0) {
      split_gcd(h, a, {}, out);
      split_gcd(divmod(g, h).quotient.monic(), a, {}, out);
      return;
    }
    out.push_back({g, scale(a, gcd_cofactor(a.back(), g), g)});
    return;
  }
  UPoly h = gcd(b.back(), g);
  if (h.degree() > 0) {
    split_gcd(h, a, b, out);
    split_gcd(divmod(g, h).quotient.monic(), a, b, out);
    return;
  }
  APoly r = remainder(a, b, gcd_cofactor(b.back(), g), g);
  split_gcd(g, b, r, out);
}

}  // namespace

bool has_torus_singularity(const BPoly& f0) {
  BPoly f = trim(f0);
  if (f.empty()) return true;
  // Divide out monomial factors.
  std::size_t tmin = 0;
  while (f[tmin].is_zero()) ++tmin;
  f.erase(f.begin(), f.begin() + static_cast<long>(tmin));
  std::size_t smin = SIZE_MAX;
  for (const auto& c : f) {
    if (c.is_zero()) continue;
    std::size_t k = 0;
    while (c.coeffs()[k].is_zero()) ++k;
    smin = std::min(smin, k);
  }
  for (auto& c : f) {
    if (c.is_zero()) continue;
    c = UPoly(std::vector<GaussRational>(c.coeffs().begin() + static_cast<long>(smin), c.coeffs().end()));
  }
  if (f.size() == 1) return has_repeated_torus_root(f[0]);
  BPoly ft = d_dt(f);
  BPoly fs = d_ds(f);
  UPoly r = resultant_t(f, ft);
  if (r.is_zero()) return true;
  UPoly g = squarefree_part(r).strip_variable_power();
  if (g.degree() <= 0) return false;
  std::vector<Branch> first;
  split_gcd(g, f, ft, first);
  std::vector<Branch> branches;
  for (const auto& br : first) split_gcd(br.modulus, br.gcd, fs, branches);
  for (const auto& br : branches) {
    if (br.gcd.empty()) return true;
    std::size_t d = br.gcd.size() - 1;
    if (d == 0) continue;
    UPoly h = br.modulus;
    for (std::size_t i = 0; i < d; ++i) h = gcd(h, br.gcd[i]);
    if (h.degree() < br.modulus.degree()) return true;
  }
  return false;
}

}  // namespace milnor
