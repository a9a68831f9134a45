#include <doctest.h>

#include "milnor/adapted_fan.hpp"
#include "milnor/hj_strings.hpp"
#include "oracles/instance_checks.hpp"

using namespace milnor;

TEST_CASE("negative continued fractions") {
  CHECK(negative_cf(5, 1) == std::vector<Int>{5});
  CHECK(negative_cf(5, 3) == std::vector<Int>{2, 3});
  CHECK(negative_cf(1, 0).empty());
  CHECK(evaluate_negative_cf({2, 3}) == Rational(5, 3));
  CHECK(evaluate_negative_cf({2, 2, 2}) == Rational(4, 3));
  CHECK(oracle::check_negative_cf(50).status == oracle::Status::Pass);
  CHECK_THROWS(negative_cf(4, 2));
  CHECK_THROWS(negative_cf(3, 5));
}

TEST_CASE("string with delta one is empty") {
  auto s = build_string(Sign::Plus, 1, 7, 4, 2, 3, 5);
  CHECK(s.delta == 1);
  CHECK(s.alpha == 0);
  CHECK(s.length() == 0);
  CHECK(closure_holds(s));
}

TEST_CASE("A1 string") {
  auto s = build_string(Sign::Plus, 2, 1, 1, 1, 0, 0);
  CHECK(s.delta == 2);
  CHECK(s.alpha == 1);
  CHECK(s.ks == std::vector<Int>{2});
  CHECK(s.mus == std::vector<Int>{1, 1, 1});
  CHECK(closure_holds(s));
  CHECK(oracle::string_recurrence(s));
}

TEST_CASE("string (5; 2, 3)") {
  auto s = build_string(Sign::Plus, 5, 2, 3, 1, 0, 0);
  CHECK(s.delta == 5);
  CHECK(s.alpha == 1);
  CHECK(s.ks == std::vector<Int>{5});
  CHECK(s.mus.front() == 3);
  CHECK(s.mus[1] == 1);
  CHECK(s.mus.back() == 2);
  CHECK(5 * s.mus[1] - s.mus.front() == s.mus.back());
  CHECK(closure_holds(s));
}

TEST_CASE("recurrence closes on a grid of parameters") {
  long checked = 0;
  for (long a = 1; a <= 7; ++a)
    for (long b = 1; b <= 7; ++b)
      for (long c = 1; c <= 7; ++c)
        for (long n1 = 1; n1 <= 3; ++n1) {
          if (std::gcd(std::gcd(a, b), c) != 1) continue;
          auto s = build_string(Sign::Plus, a, b, c, n1, 0, 0);
          ++checked;
          CHECK(closure_holds(s));
          CHECK(oracle::string_recurrence(s));
          for (const auto& k : s.ks) CHECK(k >= 2);
        }
  CHECK(checked > 100);
}

TEST_CASE("regular subdivision rays of a 2-cone") {
  CHECK(hj_subdivision_rays(NVec(1, 0, 0), NVec(0, 1, 0)).empty());
  CHECK(hj_subdivision_rays(NVec(1, 0, 0), NVec(1, 2, 0)) == std::vector<NVec>{{1, 1, 0}});
  auto rays = hj_subdivision_rays(NVec(0, 1, 0), NVec(5, -3, 0));
  // 5/3 = [2, 3]: two new rays, every consecutive pair regular.
  REQUIRE(rays.size() == 2);
  std::vector<NVec> chain{{0, 1, 0}};
  chain.insert(chain.end(), rays.begin(), rays.end());
  chain.push_back({5, -3, 0});
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) CHECK(NCone::generated_by({chain[i], chain[i + 1]}).is_regular());
}
