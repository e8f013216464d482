#include "ellm/equidist.hpp"

#include <boost/math/constants/constants.hpp>
#include <vector>

#include "ellm/error.hpp"

namespace ellm {

namespace {

// Cushion for cpp_dec_float rounding, far below every 1/(2q^3) guard in scope.
Real arith_slack(const Real& v) { return (abs(v) + 1) * Real("1e-40"); }

const Real& named_radius() {
  static const Real r("1e-45");
  return r;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}

}  // namespace

RealParam RealParam::exact(const Rat& value) {
  RealParam p;
  p.exact_ = true;
  p.rat_ = value;
  p.value_ = Real(value);
  p.radius_ = 0;
  return p;
}

RealParam RealParam::approximate(const std::string& decimal, const Real& radius) {
  if (radius < 0) raise(Errc::DomainError, "radius must be nonnegative");
  RealParam p;
  p.exact_ = false;
  p.value_ = Real(decimal);
  p.radius_ = radius;
  return p;
}

RealParam RealParam::sqrt2() {
  RealParam p;
  p.exact_ = false;
  p.value_ = boost::math::constants::root_two<Real>();
  p.radius_ = named_radius();
  return p;
}

RealParam RealParam::pi() {
  RealParam p;
  p.exact_ = false;
  p.value_ = boost::math::constants::pi<Real>();
  p.radius_ = named_radius();
  return p;
}

RealParam RealParam::e() {
  RealParam p;
  p.exact_ = false;
  p.value_ = boost::math::constants::e<Real>();
  p.radius_ = named_radius();
  return p;
}

const Rat& RealParam::rational() const {
  if (!exact_) raise(Errc::DomainError, "parameter is not exact");
  return rat_;
}

std::string RealParam::describe() const {
  if (exact_) return format_rational(rat_);
  return format_real(value_, 50);
}

const char* branch_name(ApproxBranch b) {
  return b == ApproxBranch::Coprime ? "coprime" : "multiple";
}

// ---------------------------------------------------------------------------
// find_small_multiple
// ---------------------------------------------------------------------------

namespace {

RationalApprox finish_approx(std::uint64_t k, const RealParam& alpha, std::uint64_t q,
                             RealParam eps) {
  RationalApprox out;
  out.k = k;
  out.eps = std::move(eps);
  if (k % q != 0) {
    out.branch = ApproxBranch::Coprime;
    return out;
  }
  out.branch = ApproxBranch::Multiple;
  std::uint64_t s = k / q;
  MultipleSplit split;
  split.s = s;
  if (alpha.is_exact()) {
    Rat sa = alpha.rational() * Int(s);
    Int r = floor_rat(sa + Rat(1, 2));  // |s*alpha - r| <= 1/q^2 < 1/2, no ties
    Rat eps_prime = alpha.rational() - Rat(r, Int(s));
    Rat bound = Rat(1, Int(q) * Int(q));
    if (eps_prime > bound || eps_prime < -bound)
      raise(Errc::Internal, "|eps'| exceeds 1/q^2 in the multiple branch");
    split.r = r;
    split.eps_prime = RealParam::exact(eps_prime);
  } else {
    Real sa = alpha.value() * s;
    Real err = alpha.radius() * s + arith_slack(sa);
    Real r_real = floor(sa + Real(1) / 2);
    Int r = r_real.convert_to<Int>();
    Real inv_q2 = Real(1) / (Real(q) * Real(q));
    Real dist = abs(sa - Real(r));
    if (dist > inv_q2 + err)
      raise(Errc::Internal, "|eps'| exceeds 1/q^2 in the multiple branch");
    split.r = r;
    split.eps_prime = RealParam::approximate(format_real(alpha.value() - Real(r) / s, 55),
                                             alpha.radius() + err);
  }
  // A smaller k would qualify if r and s shared a factor, so minimality of k
  // forces coprimality.
  Int g = boost::multiprecision::gcd(boost::multiprecision::abs(split.r), Int(s));
  if (g != 1) raise(Errc::Internal, "r and s share a factor despite k minimality");
  out.split = std::move(split);
  return out;
}

}  // namespace

RationalApprox find_small_multiple(const RealParam& alpha, const PrimeModulus& q,
                                   std::uint64_t guard_max_q) {
  const std::uint64_t qv = q.value();
  if (qv > guard_max_q)
    raise(Errc::GuardExceeded, "direct k-scan is O(q^2); raise the guard explicitly if wanted");
  const std::uint64_t kmax = qv * qv;

  if (alpha.is_exact()) {
    const Rat& al = alpha.rational();
    Rat alq = al - Rat(floor_rat(al / Int(qv)) * Int(qv));  // alpha mod q, in [0,q)
    Rat threshold(1, qv);
    Rat half_q(qv, 2);
    Rat t(0);
    for (std::uint64_t k = 1; k <= kmax; ++k) {
      t += alq;
      if (t >= qv) t -= qv;
      Rat dist = t <= half_q ? t : Rat(qv) - t;
      if (dist <= threshold) {
        Rat eps = t <= half_q ? t : t - qv;
        return finish_approx(k, alpha, qv, RealParam::exact(eps));
      }
    }
    raise(Errc::Internal, "pigeonhole guarantee failed for exact alpha");
  }

  // float path: refuse upfront if the radius already swamps the comparisons
  Real q_real(qv);
  if (alpha.radius() > Real(1) / (2 * q_real * q_real * q_real))
    raise(Errc::PrecisionInsufficient,
          "alpha error radius exceeds 1/(2 q^3); supply more precision");
  Real al = alpha.value();
  Real alq = al - floor(al / q_real) * q_real;
  Real threshold = Real(1) / q_real;
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    Real v = alq * k;
    Real r = v - floor(v / q_real) * q_real;
    Real dist = r <= q_real / 2 ? r : q_real - r;
    Real err = alpha.radius() * k + arith_slack(v);
    if (dist <= threshold - err) {
      Real eps = r <= q_real / 2 ? r : r - q_real;
      return finish_approx(k, alpha, qv, RealParam::approximate(format_real(eps, 55), err));
    }
    if (dist <= threshold + err)
      raise(Errc::PrecisionInsufficient,
            "k=" + std::to_string(k) + " sits on the 1/q boundary at this radius");
  }
  raise(Errc::Internal, "pigeonhole guarantee failed for approximate alpha");
}

// ---------------------------------------------------------------------------
// interval counting
// ---------------------------------------------------------------------------

std::uint64_t count_hit_intervals(const QuadraticParams& params, const PrimeModulus& q,
                                  std::uint64_t m) {
  if (m < 1) raise(Errc::DomainError, "m must be >= 1");
  const std::uint64_t qv = q.value();
  std::vector<bool> hit(qv, false);
  std::uint64_t count = 0;

  if (params.alpha.is_exact() && params.beta.is_exact()) {
    const Rat& alpha = params.alpha.rational();
    const Rat& beta = params.beta.rational();
    for (std::uint64_t i = 1; i <= m; ++i) {
      Rat v = Rat(Int(i) * Int(i)) + alpha * Int(i) + beta;
      std::uint64_t j = mod_pos(floor_rat(v), qv);
      if (!hit[j]) {
        hit[j] = true;
        if (++count == qv) break;
      }
    }
    return count;
  }

  const Real alpha = params.alpha.value();
  const Real beta = params.beta.value();
  const Real ra = params.alpha.radius();
  const Real rb = params.beta.radius();
  for (std::uint64_t i = 1; i <= m; ++i) {
    Real v = (Real(i) + alpha) * i + beta;  // i^2 + alpha*i + beta
    Real rad = ra * i + rb + arith_slack(v);
    Real fl = floor(v);
    Real frac = v - fl;
    if (frac <= rad || Real(1) - frac <= rad)
      raise(Errc::PrecisionInsufficient,
            "p(" + std::to_string(i) + ") is too close to an interval boundary");
    std::uint64_t j = mod_pos(fl.convert_to<Int>(), qv);
    if (!hit[j]) {
      hit[j] = true;
      if (++count == qv) break;
    }
  }
  return count;
}

LemmaVerdict verify_lemma_dist(const QuadraticParams& params, const PrimeModulus& q,
                               std::uint64_t guard_max_q) {
  const std::uint64_t qv = q.value();
  if (qv > guard_max_q)
    raise(Errc::GuardExceeded, "m = q^3 enumeration guarded to q <= " + std::to_string(guard_max_q));
  std::uint64_t m = qv * qv * qv;
  std::uint64_t count = count_hit_intervals(params, q, m);
  return {count, 6 * count >= qv};
}

std::uint64_t distinct_squares_count(const PrimeModulus& q) {
  const std::uint64_t qv = q.value();
  if (qv > 100000000) raise(Errc::GuardExceeded, "square enumeration guarded to q <= 10^8");
  std::vector<bool> seen(qv, false);
  std::uint64_t count = 0;
  for (std::uint64_t i = 1; i <= qv; ++i) {
    std::uint64_t v = mulmod_u64(i % qv, i % qv, qv);
    if (!seen[v]) {
      seen[v] = true;
      ++count;
    }
  }
  return count;
}

std::uint64_t branch_value_count(const RationalApprox& approx, const PrimeModulus& q) {
  if (approx.branch != ApproxBranch::Multiple || !approx.split)
    raise(Errc::DomainError, "branch_value_count requires the multiple branch");
  const std::uint64_t qv = q.value();
  if (qv > 100000000) raise(Errc::GuardExceeded, "value enumeration guarded to q <= 10^8");
  const std::uint64_t s = approx.split->s % qv;
  const std::uint64_t s2 = mulmod_u64(s, s, qv);
  const std::uint64_t r = mod_pos(approx.split->r, qv);
  std::vector<bool> seen(qv, false);
  std::uint64_t count = 0;
  for (std::uint64_t i = 1; i <= qv; ++i) {
    std::uint64_t v = (mulmod_u64(s2, mulmod_u64(i, i, qv), qv) + mulmod_u64(r, i, qv)) % qv;
    if (!seen[v]) {
      seen[v] = true;
      ++count;
    }
  }
  return count;
}

}  // namespace ellm
