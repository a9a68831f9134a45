#include "milnor/hj_strings.hpp"

#include <stdexcept>

namespace milnor {

std::vector<Int> negative_cf(const Int& p0, const Int& q0) {
  if (q0 < 0 || p0 <= q0) throw std::invalid_argument("negative_cf: need p > q >= 0");
  if (q0 == 0) {
    if (p0 != 1) throw std::invalid_argument("negative_cf: q = 0 requires p = 1");
    return {};
  }
  Int g;
  mpz_gcd(g.get_mpz_t(), p0.get_mpz_t(), q0.get_mpz_t());
  if (g != 1) throw std::invalid_argument("negative_cf: p and q are not coprime");
  std::vector<Int> ks;
  Int p = p0, q = q0;
  while (q != 0) {
    Int k;
    mpz_cdiv_q(k.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    ks.push_back(k);
    Int r = k * q - p;
    p = q;
    q = r;
  }
  return ks;
}

Rational evaluate_negative_cf(const std::vector<Int>& ks) {
  if (ks.empty()) throw std::invalid_argument("evaluate_negative_cf: empty expansion");
  Rational x(ks.back());
  for (std::size_t i = ks.size() - 1; i-- > 0;) x = Rational(ks[i]) - 1 / x;
  return x;
}

namespace {

Int gcd2(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int exact(const Int& num, const Int& den, const char* what) {
  if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw std::logic_error(std::string("build_string: non-integral ") + what);
  }
  return num / den;
}

}  // namespace

HJString build_string(Sign sign, const Int& a, const Int& b, const Int& c, const Int& n1, const Int& n2, const Int& n3) {
  if (a <= 0 || b < 0 || c < 0) throw std::invalid_argument("build_string: need a > 0 and b, c >= 0");
  HJString s;
  s.sign = sign;
  s.a = a;
  s.b = b;
  s.c = c;
  Int gab = gcd2(a, b), gac = gcd2(a, c);
  s.delta = exact(a, Int(gab * gac), "delta");
  bool found = false;
  for (Int al = 0; al < s.delta; ++al) {
    Int t = al * c * gab + b * gac;
    if (mpz_divisible_p(t.get_mpz_t(), a.get_mpz_t())) {
      if (found) throw std::logic_error("build_string: alpha is not unique");
      s.alpha = al;
      found = true;
    }
  }
  if (!found) throw std::logic_error("build_string: no admissible alpha");
  Int mu_end = exact(Int(b * n1 + a * n2), gab, "end multiplicity");
  Int mu_start = exact(Int(c * n1 + a * n3), gac, "start multiplicity");
  if (s.delta == 1) {
    s.mus = {mu_start, mu_end};
    return s;
  }
  s.ks = negative_cf(s.delta, s.alpha);
  s.mus.push_back(mu_start);
  s.mus.push_back(exact(Int(s.alpha * mu_start + mu_end), s.delta, "first multiplicity"));
  for (std::size_t i = 0; i < s.ks.size(); ++i) s.mus.push_back(s.ks[i] * s.mus[i + 1] - s.mus[i]);
  if (s.mus.back() != mu_end) throw std::logic_error("build_string: recurrence does not close");
  for (const auto& m : s.mus) {
    if (m <= 0) throw std::logic_error("build_string: non-positive multiplicity");
  }
  return s;
}

bool closure_holds(const HJString& s) {
  const std::size_t l = s.ks.size();
  if (s.mus.size() != l + 2) return false;
  for (std::size_t i = 1; i <= l; ++i) {
    if (s.ks[i - 1] * s.mus[i] != s.mus[i - 1] + s.mus[i + 1]) return false;
  }
  if (l > 0) {
    // Backward recurrence from the far end.
    Int next = s.mus[l + 1], cur = s.mus[l];
    for (std::size_t i = l; i >= 1; --i) {
      Int prev = s.ks[i - 1] * cur - next;
      next = cur;
      cur = prev;
    }
    if (cur != s.mus[0]) return false;
  }
  return true;
}

}  // namespace milnor
