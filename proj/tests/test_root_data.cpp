#include "glab/root_data.hpp"

#include "doctest.h"

#include <random>

using namespace glab;

TEST_CASE("grosshans height: pinned values") {
  RootDatum a1 = root_datum_a(1);
  CHECK(grosshans_height(a1, weight1(0)) == 0);
  CHECK(grosshans_height(a1, weight1(5)) == 5);
  CHECK(grosshans_height(a1, weight1(-3)) == -3);

  // A2: rho paired with the three positive coroots gives 1 + 1 + 2
  RootDatum a2 = root_datum_a(2);
  REQUIRE(a2.positive_roots.size() == 3);
  long by_hand = 0;
  Weight rho = a2.rho();
  for (const auto& f : a2.positive_coroot_functionals)
    by_hand += f[0] * rho.coords[0] + f[1] * rho.coords[1];
  CHECK(by_hand == 4);
  CHECK(grosshans_height(a2, rho) == 4);
}

TEST_CASE("dominance") {
  RootDatum a1 = root_datum_a(1);
  RootDatum a2 = root_datum_a(2);
  CHECK(is_dominant(a1, weight1(0)));
  CHECK(!is_dominant(a1, weight1(-1)));
  CHECK(!is_dominant(a2, Weight({2, -1})));
  CHECK(is_dominant(a2, Weight({2, 0})));
}

TEST_CASE("steinberg weights") {
  RootDatum a1 = root_datum_a(1);
  CHECK(steinberg_weight(a1, 1, 2) == weight1(1));
  CHECK(steinberg_weight(a1, 2, 3) == weight1(8));
  CHECK(steinberg_weight(a1, 3, 0) == weight1(3));
  CHECK_THROWS_AS(steinberg_weight(a1, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(steinberg_weight(a1, 1, -2), std::invalid_argument);
}

TEST_CASE("height is additive and nonnegative on dominant weights") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> dist(-6, 6);
  for (long rank = 1; rank <= 3; ++rank) {
    RootDatum d = root_datum_a(rank);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<long> a(rank), b(rank);
      for (long k = 0; k < rank; ++k) {
        a[k] = dist(rng);
        b[k] = dist(rng);
      }
      Weight wa(a), wb(b);
      CHECK(grosshans_height(d, wa + wb) == grosshans_height(d, wa) + grosshans_height(d, wb));
      if (is_dominant(d, wa)) CHECK(grosshans_height(d, wa) >= 0);
    }
    for (const Weight& alpha : d.positive_roots) CHECK(grosshans_height(d, alpha) > 0);
  }
}

TEST_CASE("steinberg weights are dominant") {
  for (long rank = 1; rank <= 3; ++rank) {
    RootDatum d = root_datum_a(rank);
    for (long r = 1; r <= 3; ++r)
      for (long p : {0L, 2L, 3L, 5L}) CHECK(is_dominant(d, steinberg_weight(d, r, p)));
  }
}
