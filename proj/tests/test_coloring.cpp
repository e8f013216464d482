#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ellm/coloring.hpp"
#include "ellm/error.hpp"
#include "ellm/rng.hpp"

using namespace ellm;

TEST_CASE("generation is deterministic in (q, seed)") {
  PrimeModulus q(5);
  for (std::uint64_t seed : {0ULL, 1ULL, 77ULL}) {
    auto c1 = generate_random_coloring(q, seed);
    auto c2 = generate_random_coloring(q, seed);
    CHECK(c1.colors() == c2.colors());
  }
  PrimeModulus q101(101);
  CHECK(generate_random_coloring(q101, 1).colors() != generate_random_coloring(q101, 2).colors());
}

TEST_CASE("red density converges to q^(-3/4) for q=5") {
  PrimeModulus q(5);
  const int seeds = 100000;
  std::uint64_t reds = 0;
  for (int s = 0; s < seeds; ++s) reds += generate_random_coloring(q, s).count(Color::Red);
  double freq = static_cast<double>(reds) / (5.0 * seeds);
  double expected = std::pow(5.0, -0.75);  // 0.29907...
  CHECK(std::abs(freq - expected) < 0.01);
}

TEST_CASE("mean red count for q=101 is about 101^(1/4)") {
  PrimeModulus q(101);
  const int seeds = 10000;
  std::uint64_t reds = 0;
  for (int s = 0; s < seeds; ++s) reds += generate_random_coloring(q, s).count(Color::Red);
  double mean = static_cast<double>(reds) / seeds;
  double expected = std::pow(101.0, 0.25);  // 3.170...
  CHECK(std::abs(mean - expected) / expected < 0.03);
}

TEST_CASE("p override changes the density") {
  PrimeModulus q(101);
  auto zero = generate_random_coloring(q, 3, 0.0);
  CHECK(zero.count(Color::Red) == 0);
  auto one = generate_random_coloring(q, 3, 1.0);
  CHECK(one.count(Color::Red) == 101);
  CHECK_THROWS_AS(generate_random_coloring(q, 3, 1.5), Error);
}

TEST_CASE("real lift floors into residues") {
  PrimeModulus q(5);
  auto coloring = generate_random_coloring(q, 11);
  RealLift lift(coloring);
  CHECK(lift.color_at(0.0) == coloring.at(0));
  CHECK(lift.color_at(5.5) == coloring.at(0));  // floor(q + 0.5) = q = 0 mod q
  CHECK(lift.color_at(3.99) == coloring.at(3));
  CHECK(lift.color_at(Rat(11, 2)) == coloring.at(0));
  CHECK(lift.color_at(Rat(399, 100)) == coloring.at(3));
  CHECK_THROWS_AS(lift.color_at(-0.5), Error);
  CHECK_THROWS_AS(lift.color_at(Rat(-1, 2)), Error);
}

TEST_CASE("lift periodicity: color(y) == color(y + q)") {
  PrimeModulus q(7);
  RealLift lift(generate_random_coloring(q, 5));
  SplitMix64 rng(99);
  for (int t = 0; t < 200; ++t) {
    Rat y(rng.next_below(1000000), 1 + rng.next_below(997));
    CHECK(lift.color_at(y) == lift.color_at(y + 7));
  }
}

TEST_CASE("color_point is spherical") {
  PrimeModulus q(7);
  RealLift lift(generate_random_coloring(q, 21));
  CHECK(lift.color_point(std::vector<double>{0.0, 0.0, 0.0}) == lift.color_at(0.0));
  CHECK(lift.color_point(std::vector<double>{1.0, 1.0, 1.0}) ==
        lift.base().at(3));  // |a|^2 = 3
  CHECK(lift.color_point(std::vector<double>{0.5, 0.5}) == lift.base().at(0));  // |a|^2 = 0.5
  // same norm, different points
  CHECK(lift.color_point(std::vector<double>{3.0, 4.0}) ==
        lift.color_point(std::vector<double>{5.0, 0.0}));
  CHECK(lift.color_point(std::vector<Rat>{Rat(3, 5), Rat(4, 5)}) ==
        lift.color_point(std::vector<Rat>{Rat(1), Rat(0)}));
  CHECK_THROWS_AS(lift.color_point(std::vector<double>{}), Error);
}

TEST_CASE("serialization round trip") {
  PrimeModulus q(13);
  auto coloring = generate_random_coloring(q, 123);
  auto back = deserialize(serialize(coloring));
  CHECK(back.colors() == coloring.colors());
  CHECK(back.q() == coloring.q());
  REQUIRE(back.provenance().has_value());
  CHECK(back.provenance()->seed == 123);

  auto hand = ZqColoring::solid(PrimeModulus(5), Color::Blue);
  std::string text = serialize(hand);
  CHECK(text == "zqcoloring v1\nq=5\ncolors=BBBBB\n");
  CHECK(deserialize(text).colors() == hand.colors());
}

TEST_CASE("deserialization rejects malformed documents distinctly") {
  auto code_of = [](const std::string& text) {
    try {
      deserialize(text);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Internal;
  };
  CHECK(code_of("zqcoloring v2\nq=5\ncolors=BBBBB\n") == Errc::BadHeader);
  CHECK(code_of("q=5\ncolors=BBBBB\n") == Errc::BadHeader);
  CHECK(code_of("zqcoloring v1\nq=5\ncolors=BBBB\n") == Errc::LengthMismatch);
  CHECK(code_of("zqcoloring v1\nq=9\ncolors=BBBBBBBBB\n") == Errc::NonPrimeModulus);
  CHECK(code_of("zqcoloring v1\nq=5\ncolors=BBXBB\n") == Errc::BadColorChar);
  CHECK(code_of("zqcoloring v1\nq=x\ncolors=BBBBB\n") == Errc::BadField);
}
