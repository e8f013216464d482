#include "ellm/bounds.hpp"

#include <algorithm>

#include "ellm/error.hpp"
#include "ellm/parallel.hpp"
#include "ellm/red_verifier.hpp"

namespace ellm {

namespace {

using W = RealWide;

// log(1+x) accurate to full working precision even when |x| is tiny.
W log1p_wide(const W& x) {
  if (x <= -1) raise(Errc::DomainError, "log1p domain");
  if (abs(x) > W(1) / 8) return log(1 + x);
  W term = x, sum = x;
  for (int k = 2; k < 400; ++k) {
    term *= -x;
    W add = term / k;
    sum += add;
    if (abs(add) <= abs(sum) * W("1e-110")) break;
  }
  return sum;
}

W pow_fractional(const W& base, const W& exponent) { return exp(exponent * log(base)); }

bool sufficient_pair(const Int& q, const Int& m) {
  W qr(q);
  W p = pow_fractional(qr, W(-3) / 4);
  W red = 3 * p * p * p * qr * qr + 9 * p * p * qr;
  W mr(m);
  W blue = exp(log(W(10000)) + 6 * log(mr) + qr / 6 * log1p_wide(-p));
  return red < W(1) / 2 && blue < W(1) / 2;
}

bool sufficient_q(const Int& q) { return sufficient_pair(q, q * q * q); }

}  // namespace

Int sign_pattern_bound(const Int& M, int N, int D) {
  if (N < 2 || M < N || D < 1)
    raise(Errc::DomainError, "sign pattern bound needs M >= N >= 2 and D >= 1");
  // ceil((50 D M / N)^N) in exact arithmetic
  Int num = boost::multiprecision::pow(Int(50) * D * M, static_cast<unsigned>(N));
  Int den = boost::multiprecision::pow(Int(N), static_cast<unsigned>(N));
  return (num + den - 1) / den;
}

RedBound expected_red_bound(const Int& q) {
  if (q < 2) raise(Errc::DomainError, "q must be >= 2");
  W qr(q);
  W p = pow_fractional(qr, W(-3) / 4);
  W bound = 3 * p * p * p * qr * qr + 9 * p * p * qr;
  W majorant = 12 * pow_fractional(qr, W(-1) / 4);
  if (bound > majorant * (1 + W("1e-90")))
    raise(Errc::Internal, "3p^3q^2 + 9p^2q exceeded its 12 q^(-1/4) majorant");
  return {Real(bound), Real(majorant)};
}

Real blue_failure_bound(const Int& q, const Int& m) {
  if (q < 2 || m < 1) raise(Errc::DomainError, "blue bound needs q >= 2, m >= 1");
  W qr(q), mr(m);
  W x = pow_fractional(qr, W(-3) / 4);
  W lg = log(W(10000)) + 6 * log(mr) + qr / 6 * log1p_wide(-x);
  return Real(exp(lg));
}

BoundsReport evaluate_bounds(const Int& q, const Int& m) {
  BoundsReport r;
  r.q = q;
  r.m = m;
  r.p = Real(pow_fractional(W(q), W(-3) / 4));
  r.red_bound = expected_red_bound(q).bound;
  r.blue_bound = blue_failure_bound(q, m);
  r.sufficient = r.red_bound < Real(1) / 2 && r.blue_bound < Real(1) / 2;
  return r;
}

std::vector<Int> default_q_grid() {
  // 10^4 .. 10^20, ratio 10^(1/4)
  std::vector<Int> grid;
  for (int k = 0; k <= 64; ++k) {
    W v = exp(log(W(10)) * (W(16 + k) / 4));
    grid.push_back((v + W(1) / 2).convert_to<Int>());
  }
  return grid;
}

BoundsReport find_sufficient_parameters(const std::vector<Int>& grid, bool refine) {
  if (grid.empty()) raise(Errc::DomainError, "grid must be nonempty");
  std::vector<Int> sorted(grid);
  std::sort(sorted.begin(), sorted.end());

  Int lower = 0;  // largest insufficient point seen
  Int found = 0;
  for (const Int& q : sorted) {
    if (q < 2) continue;
    if (sufficient_q(q)) {
      found = q;
      break;
    }
    lower = q;
  }
  if (found == 0) raise(Errc::SearchExhausted, "no sufficient q in the grid");

  if (refine && lower >= 2) {
    // bisect the minimal sufficient q to three significant digits, then take
    // the smallest 3-digit value that is still sufficient
    Int lo = lower, hi = found;
    while ((hi - lo) * 1000 > hi) {
      Int prod = lo * hi;
      Int mid = boost::multiprecision::sqrt(prod);
      if (mid <= lo || mid >= hi) break;
      if (sufficient_q(mid))
        hi = mid;
      else
        lo = mid;
    }
    Int rounded = round_up_3sig(hi);
    if (sufficient_q(rounded)) found = rounded;
    else found = hi;
  }

  Int m = found * found * found;
  Int m_cap = boost::multiprecision::pow(Int(10), 50);
  if (m > m_cap)
    raise(Errc::SearchExhausted, "smallest sufficient q forces m = q^3 > 10^50");
  BoundsReport report = evaluate_bounds(found, m);
  if (!report.sufficient) raise(Errc::Internal, "reported parameters failed re-verification");
  return report;
}

EmpiricalRed empirical_expected_red(const PrimeModulus& q, std::uint64_t seeds,
                                    std::uint64_t base_seed, std::optional<double> p_override) {
  if (seeds < 1) raise(Errc::DomainError, "need at least one seed");

  struct Partial {
    std::uint64_t sum = 0;
    std::uint64_t sum_sq = 0;
  };
  auto partials = run_chunked<Partial>(seeds, [&](std::uint64_t begin, std::uint64_t end) {
    Partial p;
    for (std::uint64_t s = begin; s < end; ++s) {
      ZqColoring coloring = generate_random_coloring(q, base_seed + s, p_override);
      std::uint64_t count = 0;
      for (int c = 1; c <= 3; ++c) count += find_red_solutions(coloring, c).size();
      p.sum += count;
      p.sum_sq += count * count;
    }
    return p;
  });

  std::uint64_t sum = 0, sum_sq = 0;
  for (const auto& p : partials) {
    sum += p.sum;
    sum_sq += p.sum_sq;
  }
  double n = static_cast<double>(seeds);
  double mean = static_cast<double>(sum) / n;
  double var = seeds > 1 ? (static_cast<double>(sum_sq) - n * mean * mean) / (n - 1) : 0.0;
  if (var < 0) var = 0;
  double sd = std::sqrt(var);
  return {mean, sd, sd / std::sqrt(n), seeds};
}

}  // namespace ellm
