#pragma once

#include <vector>

#include "milnor/graph_types.hpp"

namespace milnor {

// p/q = k1 - 1/(k2 - 1/(...)) with every k >= 2; requires p > q >= 0 and gcd(p, q) = 1.
std::vector<Int> negative_cf(const Int& p, const Int& q);
Rational evaluate_negative_cf(const std::vector<Int>& ks);

// Chain of rational curves replacing one intersection point, from the end of multiplicity mus[0]
// to the end of multiplicity mus.back(); the interior vertices carry mus[1..l].
struct HJString {
  Sign sign = Sign::Plus;
  Int a, b, c;
  Int delta, alpha;
  std::vector<Int> ks;
  std::vector<Int> mus;

  std::size_t length() const { return ks.size(); }
};

// Str(a; b, c | n1; n2, n3); throws std::logic_error when the recurrence does not close.
HJString build_string(Sign sign, const Int& a, const Int& b, const Int& c, const Int& n1, const Int& n2, const Int& n3);

// Recomputes the recurrence from both endpoints.
bool closure_holds(const HJString& s);

}  // namespace milnor
