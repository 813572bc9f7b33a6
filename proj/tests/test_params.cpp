#include "doctest.h"

#include <numeric>

#include "pir/params.hpp"
#include "pir/errors.hpp"

using namespace pir;

TEST_CASE("derived parameters for the reference points") {
  SystemParams p = derive(3, 2, 3, 256, SchemeTag::A);
  CHECK(p.p == 1);
  CHECK(p.r == 1);
  CHECK(p.s == 2);
  CHECK(p.m == 1);
  CHECK(p.l == 2);
  CHECK(regime(p) == Regime::HighRate);

  p = derive(5, 3, 4, 256, SchemeTag::B);
  CHECK(p.p == 1);
  CHECK(p.r == 2);
  CHECK(p.s == 3);
  CHECK(p.m == 2);
  CHECK(p.l == 6);
  CHECK(regime(p) == Regime::HighRate);

  p = derive(5, 2, 4, 256, SchemeTag::B);
  CHECK(p.p == 1);
  CHECK(p.r == 3);
  CHECK(p.s == 2);
  CHECK(p.m == 3);
  CHECK(p.l == 6);
  CHECK(regime(p) == Regime::LowRate);

  p = derive(4, 2, 2, 256, SchemeTag::A);
  CHECK(p.p == 2);
  CHECK(p.r == 1);
  CHECK(p.s == 1);
  CHECK(p.m == 1);
  CHECK(p.l == 2);
  CHECK(regime(p) == Regime::Both);
}

TEST_CASE("k2 derivation") {
  SystemParams p = derive(3, 2, 2, 256, SchemeTag::K2);
  CHECK(p.m == 1);
  CHECK(p.l == 2);
  CHECK_THROWS_AS(derive(3, 2, 3, 256, SchemeTag::K2), InvalidParams);  // k != 2
  CHECK_THROWS_AS(derive(5, 2, 2, 256, SchemeTag::K2), InvalidParams);  // 2t < n
}

TEST_CASE("invalid parameter combinations") {
  CHECK_THROWS_AS(derive(3, 5, 2, 256, SchemeTag::A), InvalidParams);   // t > n
  CHECK_THROWS_AS(derive(3, 3, 2, 256, SchemeTag::A), InvalidParams);   // t == n
  CHECK_THROWS_AS(derive(3, 0, 2, 256, SchemeTag::A), InvalidParams);   // t == 0
  CHECK_THROWS_AS(derive(0, 0, 2, 256, SchemeTag::A), InvalidParams);
  CHECK_THROWS_AS(derive(5, 2, 2, 4, SchemeTag::A), InvalidParams);     // q < n
}

TEST_CASE("message size equals lcm(n-t, t) across a sweep") {
  for (int n = 2; n <= 10; ++n) {
    for (int t = 1; t < n; ++t) {
      CHECK(min_message_size(n, t) == std::lcm(n - t, t));
      SystemParams p = derive(n, t, 3, 65536, SchemeTag::A);
      CHECK(p.l == min_message_size(n, t));
      CHECK(p.r * p.p == n - t);
      CHECK(p.s * p.p == t);
      CHECK(std::gcd(p.r, p.s) == 1);
    }
  }
  CHECK_THROWS_AS(min_message_size(3, 3), InvalidParams);
}

TEST_CASE("string helpers") {
  CHECK(to_string(SchemeTag::A) == "a");
  CHECK(to_string(SchemeTag::B) == "b");
  CHECK(to_string(SchemeTag::K2) == "k2");
  CHECK(to_string(Regime::HighRate) == "high");
  CHECK(to_string(Regime::LowRate) == "low");
  CHECK(to_string(Regime::Both) == "both");
}
