#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ellm/error.hpp"
#include "ellm/progression.hpp"
#include "ellm/rng.hpp"

using namespace ellm;

TEST_CASE("progression values") {
  auto v = progression_values(Progression(Rat(0), Rat(0), 4));
  CHECK(v == std::vector<Rat>{Rat(0), Rat(0), Rat(2), Rat(6)});

  v = progression_values(Progression(Rat(1), Rat(2), 3));
  CHECK(v == std::vector<Rat>{Rat(1), Rat(3), Rat(7)});
  CHECK(v[0] + v[2] == 2 * v[1] + 2);

  v = progression_values(Progression(Rat(0), Rat(1), 5));
  CHECK(v == std::vector<Rat>{Rat(0), Rat(1), Rat(4), Rat(9), Rat(16)});

  CHECK_THROWS_AS(Progression(Rat(-1), Rat(0), 3), Error);
  CHECK_THROWS_AS(Progression(Rat(0), Rat(0), 0), Error);
}

TEST_CASE("recurrence holds exactly for random rational parameters") {
  SplitMix64 rng(31337);
  for (int t = 0; t < 500; ++t) {
    Rat a(rng.next_below(100000), 1 + rng.next_below(9999));
    Rat d(rng.next_below(100000), 1 + rng.next_below(9999));
    int m = 3 + static_cast<int>(rng.next_below(98));
    auto v = progression_values(Progression(a, d, m));
    CHECK(v[0] == a);
    CHECK(v[1] == a + d);
    for (int i = 1; i + 1 < m; ++i) REQUIRE(v[i - 1] + v[i + 1] == 2 * v[i] + 2);
  }
}

TEST_CASE("value bound") {
  CHECK(value_bound(PrimeModulus(5), Int(125)) == 31250);  // coupled regime: 2 m^2
  CHECK(value_bound(PrimeModulus(11), Int(5)) == 80);      // m q + m^2
  CHECK(value_bound(PrimeModulus(7), Int(1)) == 8);        // q + 1

  // all y_i < B over sampled (a,d) in [0,q)^2
  SplitMix64 rng(5);
  PrimeModulus q(11);
  for (int t = 0; t < 200; ++t) {
    Rat a(rng.next_below(11 * 1000), 1000);
    Rat d(rng.next_below(11 * 1000), 1000);
    int m = 1 + static_cast<int>(rng.next_below(12));
    Int bound = value_bound(q, Int(m));
    for (const Rat& y : progression_values(Progression(a, d, m))) CHECK(y < Rat(bound));
  }
}

TEST_CASE("residue pattern") {
  PrimeModulus q(5);
  auto coloring = generate_random_coloring(q, 3);
  auto pc = residue_pattern(coloring, Progression(Rat(0), Rat(0), 3));
  CHECK(pc.pattern.indices == std::vector<std::int64_t>{0, 0, 2});
  CHECK(pc.colors == std::vector<Color>{coloring.at(0), coloring.at(0), coloring.at(2)});

  pc = residue_pattern(coloring, Progression(Rat(9, 2), Rat(0), 2));
  CHECK(pc.pattern.indices == std::vector<std::int64_t>{4, 4});

  pc = residue_pattern(coloring, Progression(Rat(0), Rat(1), 4));
  CHECK(pc.pattern.indices == std::vector<std::int64_t>{0, 1, 4, 9});
  CHECK(pc.colors[3] == coloring.at(4));  // 9 mod 5
}

TEST_CASE("color pattern is invariant under a -> a+q and d -> d+q") {
  PrimeModulus q(7);
  auto coloring = generate_random_coloring(q, 17, 0.4);
  SplitMix64 rng(8);
  for (int t = 0; t < 100; ++t) {
    Rat a(rng.next_below(7000), 1000);
    Rat d(rng.next_below(7000), 1000);
    int m = 2 + static_cast<int>(rng.next_below(7));
    auto base = residue_pattern(coloring, Progression(a, d, m));
    CHECK(residue_pattern(coloring, Progression(a + 7, d, m)).colors == base.colors);
    CHECK(residue_pattern(coloring, Progression(a, d + 7, m)).colors == base.colors);
  }
}

TEST_CASE("distinct interval count") {
  PrimeModulus q(5);
  CHECK(pattern_distinct_interval_count(Progression(Rat(0), Rat(0), 3), q) == 2);
  // y_i = (i-1)^2; squares mod 5 are {0,1,4}
  CHECK(pattern_distinct_interval_count(Progression(Rat(0), Rat(1), 125), q) == 3);
  CHECK(pattern_distinct_interval_count(Progression(Rat(3), Rat(2), 1), q) == 1);
}
