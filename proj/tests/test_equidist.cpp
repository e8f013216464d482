#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/constants/constants.hpp>

#include "ellm/equidist.hpp"
#include "ellm/error.hpp"
#include "ellm/prime.hpp"
#include "ellm/rng.hpp"

using namespace ellm;

namespace {

const std::vector<RealParam>& battery() {
  static const std::vector<RealParam> b = {
      RealParam::exact(Rat(0)),      RealParam::exact(Rat(1, 2)), RealParam::exact(Rat(17, 13)),
      RealParam::sqrt2(),            RealParam::e(),              RealParam::pi()};
  return b;
}

// reference scan at wide precision, independent of the library path
std::uint64_t reference_small_multiple(const RealWide& alpha, std::uint64_t q) {
  for (std::uint64_t k = 1; k <= q * q; ++k) {
    RealWide v = alpha * k;
    RealWide r = v - floor(v / q) * q;
    RealWide dist = r <= RealWide(q) / 2 ? r : RealWide(q) - r;
    if (dist <= RealWide(1) / q) return k;
  }
  return 0;
}

}  // namespace

TEST_CASE("find_small_multiple basics") {
  PrimeModulus q5(5);
  auto a0 = find_small_multiple(RealParam::exact(Rat(0)), q5);
  CHECK(a0.k == 1);
  CHECK(a0.branch == ApproxBranch::Coprime);
  CHECK(a0.eps.rational() == 0);

  auto a15 = find_small_multiple(RealParam::exact(Rat(1, 5)), q5);
  CHECK(a15.k == 1);  // |1/5| <= 1/5 already
  CHECK(a15.eps.rational() == Rat(1, 5));

  auto as = find_small_multiple(RealParam::sqrt2(), q5);
  CHECK(as.k == reference_small_multiple(boost::math::constants::root_two<RealWide>(), 5));
  CHECK(as.k <= 25);
}

TEST_CASE("multiple branch decomposition") {
  PrimeModulus q5(5);
  // alpha = 1/2: the scan reaches k = 10 = 2q, so s = 2, r = 1, eps' = 0
  auto a = find_small_multiple(RealParam::exact(Rat(1, 2)), q5);
  CHECK(a.k == 10);
  CHECK(a.branch == ApproxBranch::Multiple);
  REQUIRE(a.split.has_value());
  CHECK(a.split->s == 2);
  CHECK(a.split->r == 1);
  CHECK(a.split->eps_prime.rational() == 0);

  CHECK(branch_value_count(a, q5) == 3);  // {4i^2 + i mod 5} = {0, 3, 4}
}

TEST_CASE("pigeonhole guarantee on random alphas") {
  SplitMix64 rng(11);
  for (std::uint64_t q : {5ULL, 7ULL, 11ULL, 13ULL}) {
    PrimeModulus mod(q);
    for (int t = 0; t < 60; ++t) {
      RealParam alpha = RealParam::exact(
          Rat(static_cast<long long>(rng.next_signed(100000)), 1 + rng.next_below(9999)));
      auto a = find_small_multiple(alpha, mod);
      CHECK(a.k >= 1);
      CHECK(a.k <= q * q);
      if (a.branch == ApproxBranch::Multiple) {
        REQUIRE(a.split.has_value());
        Int g = boost::multiprecision::gcd(boost::multiprecision::abs(a.split->r),
                                           Int(a.split->s));
        CHECK(g == 1);
      }
    }
    for (int t = 0; t < 40; ++t) {
      // irrational-ish: sqrt2 * small rational offset
      RealWide v = boost::math::constants::root_two<RealWide>() * (1 + static_cast<int>(t)) / 7;
      RealParam alpha = RealParam::approximate(format_real(Real(v), 50), Real("1e-45"));
      auto a = find_small_multiple(alpha, mod);
      CHECK(a.k >= 1);
      CHECK(a.k <= q * q);
    }
  }
}

TEST_CASE("precision guards refuse coarse inputs") {
  PrimeModulus q5(5);
  CHECK_THROWS_AS(find_small_multiple(RealParam::approximate("0.5", Real("0.01")), q5), Error);
  try {
    find_small_multiple(RealParam::approximate("0.5", Real("0.01")), q5);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PrecisionInsufficient);
  }
  // boundary-sitting distance: alpha = 1/5 as a float with nonzero radius
  CHECK_THROWS_AS(find_small_multiple(RealParam::approximate("0.2", Real("1e-30")), q5), Error);
}

TEST_CASE("count_hit_intervals on squares") {
  QuadraticParams zero{RealParam::exact(Rat(0)), RealParam::exact(Rat(0))};
  CHECK(count_hit_intervals(zero, PrimeModulus(5), 125) == 3);  // {0,1,4}
  CHECK(count_hit_intervals(zero, PrimeModulus(7), 343) == 4);  // {0,1,2,4}

  QuadraticParams half{RealParam::exact(Rat(0)), RealParam::exact(Rat(1, 2))};
  CHECK(count_hit_intervals(half, PrimeModulus(5), 125) == 3);  // intervals {0,1,4}
}

TEST_CASE("verify_lemma_dist across the battery") {
  for (std::uint64_t q : {5ULL, 7ULL, 11ULL, 13ULL}) {
    PrimeModulus mod(q);
    for (const auto& alpha : battery()) {
      for (const auto& beta : battery()) {
        auto verdict = verify_lemma_dist({alpha, beta}, mod);
        CHECK(verdict.pass);
        CHECK(6 * verdict.hit_count >= q);
      }
    }
  }
  QuadraticParams zero{RealParam::exact(Rat(0)), RealParam::exact(Rat(0))};
  CHECK(verify_lemma_dist(zero, PrimeModulus(5)).hit_count == 3);
  CHECK(verify_lemma_dist(zero, PrimeModulus(7)).hit_count == 4);
  auto irr = verify_lemma_dist({RealParam::sqrt2(), RealParam::pi()}, PrimeModulus(11));
  CHECK(irr.pass);
  CHECK_THROWS_AS(verify_lemma_dist(zero, PrimeModulus(1009), 1000), Error);
}

TEST_CASE("distinct squares count is (q+1)/2") {
  CHECK(distinct_squares_count(PrimeModulus(5)) == 3);
  CHECK(distinct_squares_count(PrimeModulus(7)) == 4);
  CHECK(distinct_squares_count(PrimeModulus(3)) == 2);
  for (std::uint64_t q = 3; q <= 1000; q = next_prime_u64(q)) {
    REQUIRE(distinct_squares_count(PrimeModulus(q)) == (q + 1) / 2);
    if (q == 997) break;
  }
}

TEST_CASE("branch value count") {
  PrimeModulus q5(5);
  RationalApprox sq{5, ApproxBranch::Multiple, RealParam::exact(Rat(0)),
                    MultipleSplit{Int(0), 1, RealParam::exact(Rat(0))}};
  CHECK(branch_value_count(sq, q5) == 3);  // {i^2 mod 5} = {0,1,4}

  RationalApprox lin{5, ApproxBranch::Multiple, RealParam::exact(Rat(0)),
                     MultipleSplit{Int(1), 1, RealParam::exact(Rat(0))}};
  CHECK(branch_value_count(lin, q5) == 3);  // {i^2 + i mod 5} = {2,1,2,0,0}

  // exhaustive coprime (s, r) battery for q = 7: always at least q/2
  PrimeModulus q7(7);
  for (std::uint64_t s = 1; s <= 6; ++s) {
    for (std::int64_t r = 0; r <= 6; ++r) {
      if (boost::multiprecision::gcd(Int(r), Int(s)) != 1) continue;
      RationalApprox a{7 * s, ApproxBranch::Multiple, RealParam::exact(Rat(0)),
                       MultipleSplit{Int(r), s, RealParam::exact(Rat(0))}};
      auto count = branch_value_count(a, q7);
      CHECK(2 * count >= 7);
      CHECK(count >= 4);
    }
  }

  RationalApprox coprime{3, ApproxBranch::Coprime, RealParam::exact(Rat(0)), std::nullopt};
  CHECK_THROWS_AS(branch_value_count(coprime, q5), Error);
}

TEST_CASE("perturbation slack and interval dilation chain") {
  // Coprime branch: d(k*i*alpha, qZ) <= i * d(k*alpha, qZ) <= 1 for i <= q,
  // so the full polynomial hits at least a third of what x^2 + beta hits.
  for (std::uint64_t q : {5ULL, 7ULL, 11ULL, 13ULL}) {
    PrimeModulus mod(q);
    for (const auto& alpha : battery()) {
      auto approx = find_small_multiple(alpha, mod);
      if (approx.branch != ApproxBranch::Coprime) continue;
      Real eps = abs(approx.eps.value());
      CHECK(eps <= Real(1) / Real(q) + Real("1e-30"));
      for (std::uint64_t i = 1; i <= q; ++i) {
        Real shift = eps * i;
        CHECK(shift <= Real(1) + Real("1e-30"));
      }
      for (const auto& beta : battery()) {
        // V = intervals hit by p1(k i) = (k i)^2 + beta over i = 1..q
        std::uint64_t v = 0;
        {
          std::vector<bool> seen(q, false);
          for (std::uint64_t i = 1; i <= q; ++i) {
            Rat ki2((Int(approx.k) * i) * (Int(approx.k) * i));
            Rat val = beta.is_exact() ? ki2 + beta.rational() : ki2;  // beta shift
            std::uint64_t j;
            if (beta.is_exact()) {
              j = mod_pos(floor_rat(val), q);
            } else {
              Real real_val = Real(ki2) + beta.value();
              j = mod_pos(floor(real_val).convert_to<Int>(), q);
            }
            if (!seen[j]) {
              seen[j] = true;
              ++v;
            }
          }
        }
        CHECK(2 * v >= q);  // p1 hits at least q/2 intervals
        auto verdict = verify_lemma_dist({alpha, beta}, mod);
        CHECK(3 * verdict.hit_count >= v);  // dilation by distance one triples at most
      }
    }
  }
}
