#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ellm/numeric.hpp"
#include "ellm/prime.hpp"

namespace ellm {

// A real parameter, either an exact rational or a high-precision
// approximation with an explicit error radius. Operations that classify
// values into unit intervals refuse to answer when the radius could flip
// the classification.
class RealParam {
 public:
  RealParam() : exact_(true) {}  // exact zero

  static RealParam exact(const Rat& value);
  static RealParam exact_int(std::int64_t value) { return exact(Rat(value)); }
  static RealParam approximate(const std::string& decimal, const Real& radius);
  static RealParam sqrt2();
  static RealParam pi();
  static RealParam e();

  bool is_exact() const { return exact_; }
  const Rat& rational() const;       // exact parameters only
  const Real& value() const { return value_; }
  const Real& radius() const { return radius_; }
  std::string describe() const;

 private:
  bool exact_ = false;
  Rat rat_;
  Real value_;
  Real radius_;
};

// p(x) = x^2 + alpha*x + beta.
struct QuadraticParams {
  RealParam alpha;
  RealParam beta;
};

enum class ApproxBranch { Coprime, Multiple };

const char* branch_name(ApproxBranch b);

// The multiple-branch decomposition: k = s*q and alpha = r/s + eps' with
// gcd(r, s) = 1 and |eps'| <= 1/q^2.
struct MultipleSplit {
  Int r;
  std::uint64_t s;
  RealParam eps_prime;
};

struct RationalApprox {
  std::uint64_t k;  // smallest k <= q^2 with d(k*alpha, qZ) <= 1/q
  ApproxBranch branch;
  RealParam eps;  // signed distance of k*alpha to the nearest multiple of q
  std::optional<MultipleSplit> split;
};

// Pigeonhole search for the small multiple; scans k = 1..q^2 directly, so it
// is guarded to q <= guard_max_q.
RationalApprox find_small_multiple(const RealParam& alpha, const PrimeModulus& q,
                                   std::uint64_t guard_max_q = 1000);

// Number of intervals [j, j+1), 0 <= j < q, hit by {p(i) mod q : 1 <= i <= m}.
std::uint64_t count_hit_intervals(const QuadraticParams& params, const PrimeModulus& q,
                                  std::uint64_t m);

struct LemmaVerdict {
  std::uint64_t hit_count;
  bool pass;  // 6 * hit_count >= q
};

// Evaluates the m = q^3 distribution statement for one (alpha, beta).
LemmaVerdict verify_lemma_dist(const QuadraticParams& params, const PrimeModulus& q,
                               std::uint64_t guard_max_q = 1000);

// |{i^2 mod q : 1 <= i <= q}|, which equals (q+1)/2 for odd prime q.
std::uint64_t distinct_squares_count(const PrimeModulus& q);

// Distinct values mod q of p2(s*i) = s^2 i^2 + r*i over i = 1..q; at least
// q/2 of them, since p2(si) = p2(sj) forces s^2 (i+j) + r = 0 mod q.
std::uint64_t branch_value_count(const RationalApprox& approx, const PrimeModulus& q);

}  // namespace ellm
