#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ellm/bounds.hpp"
#include "ellm/error.hpp"

using namespace ellm;

TEST_CASE("sign pattern bound") {
  CHECK(sign_pattern_bound(Int(2), 2, 1) == 2500);     // 50^2
  CHECK(sign_pattern_bound(Int(32), 2, 1) == 640000);  // (800)^2, m = 2 => M = 4 m^3 = 32
  // N=2, D=1, M=4m^3 gives (100 m^3)^2 = 10^4 m^6
  for (Int m = 1; m <= 20; ++m) {
    Int M = 4 * m * m * m;
    CHECK(sign_pattern_bound(M, 2, 1) == Int(10000) * boost::multiprecision::pow(m, 6));
  }
  CHECK_THROWS_AS(sign_pattern_bound(Int(1), 2, 1), Error);
  CHECK_THROWS_AS(sign_pattern_bound(Int(4), 1, 1), Error);
  CHECK_THROWS_AS(sign_pattern_bound(Int(4), 2, 0), Error);
}

TEST_CASE("expected red bound closed forms") {
  // q = 16: p = 1/8, bound = 3/512*256 + 9/64*16 = 1.5 + 2.25
  auto b16 = expected_red_bound(Int(16));
  CHECK(abs(b16.bound - Real("3.75")) < Real("1e-40"));
  // q = 10^8: 3e-2 + 9e-4
  auto b8 = expected_red_bound(Int(100000000));
  CHECK(abs(b8.bound - Real("0.0309")) < Real("1e-40"));
  // q = 24^4: majorant exactly 1/2
  auto b24 = expected_red_bound(Int(331776));
  CHECK(abs(b24.majorant - Real("0.5")) < Real("1e-45"));
  CHECK(b24.bound < b24.majorant);
  CHECK_THROWS_AS(expected_red_bound(Int(1)), Error);
}

TEST_CASE("expected red bound is decreasing and below its majorant") {
  Real prev;
  bool first = true;
  for (const Int& q : default_q_grid()) {
    auto b = expected_red_bound(q);
    CHECK(b.bound <= b.majorant);
    if (!first) CHECK(b.bound < prev);
    prev = b.bound;
    first = false;
  }
}

TEST_CASE("blue failure bound values") {
  // q=2, m=1: 10^4 (1 - 2^{-3/4})^{1/3}, cross-checked in double arithmetic
  double expected = 1e4 * std::pow(1.0 - std::pow(2.0, -0.75), 1.0 / 3.0);
  Real got = blue_failure_bound(Int(2), Int(1));
  CHECK(abs(got - Real(expected)) < Real("1e-9") * Real(expected));

  // coupled regime
  Int q16 = boost::multiprecision::pow(Int(10), 16);
  CHECK(blue_failure_bound(q16, q16 * q16 * q16) < Real(1) / 2);
  Int q4 = boost::multiprecision::pow(Int(10), 4);
  CHECK(blue_failure_bound(q4, q4 * q4 * q4) > Real(1) / 2);
}

TEST_CASE("log-space evaluation agrees with direct powering") {
  for (std::uint64_t q : {10ULL, 100ULL, 5000ULL, 10000ULL}) {
    for (std::uint64_t m : {1ULL, 10ULL, 1000ULL}) {
      Real direct = Real(10000) * pow(Real(m), 6) *
                    pow(Real(1) - pow(Real(q), Real(-0.75)), Real(q) / 6);
      Real logspace = blue_failure_bound(Int(q), Int(m));
      CHECK(abs(direct - logspace) <= abs(direct) * Real("1e-10"));
    }
  }
}

TEST_CASE("sufficiency search on the example grid") {
  std::vector<Int> grid;
  for (int e : {4, 8, 12, 16, 20}) grid.push_back(boost::multiprecision::pow(Int(10), e));
  auto report = find_sufficient_parameters(grid);
  CHECK(report.sufficient);
  CHECK(report.m == report.q * report.q * report.q);
  CHECK(report.q <= Int("46000000000000000"));  // 4.6e16
  CHECK(report.m <= boost::multiprecision::pow(Int(10), 50));
  CHECK(report.red_bound < Real(1) / 2);
  CHECK(report.blue_bound < Real(1) / 2);

  // unrefined search returns the grid point itself
  auto coarse = find_sufficient_parameters(grid, false);
  CHECK(coarse.q == boost::multiprecision::pow(Int(10), 16));

  CHECK_THROWS_AS(find_sufficient_parameters({Int(2)}), Error);
  try {
    find_sufficient_parameters({Int(2)});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SearchExhausted);
  }
}

TEST_CASE("empirical red solutions") {
  PrimeModulus q5(5);
  auto smoke = empirical_expected_red(q5, 1);
  CHECK(smoke.mean >= 0.0);
  CHECK(std::isfinite(smoke.mean));

  auto none = empirical_expected_red(q5, 50, 0, 0.0);
  CHECK(none.mean == 0.0);

  // light version of the q=101 comparison; the acceptance suite runs 10^4 seeds
  PrimeModulus q101(101);
  auto emp = empirical_expected_red(q101, 500);
  double ceiling = 3 * std::pow(101.0, -0.25) + 9 * std::pow(101.0, -0.5);
  CHECK(emp.mean <= ceiling + 3 * emp.stderr_mean);
}
