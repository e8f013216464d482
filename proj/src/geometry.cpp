#include "ellm/geometry.hpp"

#include <cmath>

#include "ellm/error.hpp"
#include "ellm/parallel.hpp"
#include "ellm/red_verifier.hpp"

namespace ellm {

namespace {

Int lcm_int(const Int& a, const Int& b) { return a / boost::multiprecision::gcd(a, b) * b; }

constexpr std::int64_t kDenominator = 1 << 16;  // base-coordinate denominator
constexpr std::int64_t kDirRange = 1024;        // stereographic integer range

}  // namespace

RatLineCopy make_line_copy(const std::vector<Rat>& base, const std::vector<Rat>& direction,
                           int m) {
  if (base.empty() || base.size() != direction.size())
    raise(Errc::DomainError, "base and direction must share a dimension >= 1");
  if (m < 2) raise(Errc::DomainError, "a line copy needs m >= 2 points");
  Rat norm2 = 0;
  for (const Rat& x : direction) norm2 += x * x;
  if (norm2 != 1) raise(Errc::DomainError, "direction must have exact unit norm");

  RatLineCopy copy;
  copy.m = m;
  copy.base_den = 1;
  for (const Rat& x : base) copy.base_den = lcm_int(copy.base_den, boost::multiprecision::denominator(x));
  copy.dir_den = 1;
  for (const Rat& x : direction) copy.dir_den = lcm_int(copy.dir_den, boost::multiprecision::denominator(x));
  for (const Rat& x : base)
    copy.base_num.push_back(boost::multiprecision::numerator(x) *
                            (copy.base_den / boost::multiprecision::denominator(x)));
  for (const Rat& x : direction)
    copy.dir_num.push_back(boost::multiprecision::numerator(x) *
                           (copy.dir_den / boost::multiprecision::denominator(x)));
  return copy;
}

FloatLineCopy make_line_copy(const std::vector<double>& base,
                             const std::vector<double>& direction, int m) {
  if (base.empty() || base.size() != direction.size())
    raise(Errc::DomainError, "base and direction must share a dimension >= 1");
  if (m < 2) raise(Errc::DomainError, "a line copy needs m >= 2 points");
  double norm2 = 0;
  for (double x : direction) norm2 += x * x;
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-12)
    raise(Errc::DomainError, "direction norm deviates from 1 by more than 1e-12");
  return {base, direction, m};
}

std::vector<Rat> squared_distances(const RatLineCopy& copy) {
  const std::size_t n = copy.base_num.size();
  // coordinates of point i over the common denominator base_den * dir_den
  std::vector<Int> scaled_base(n), scaled_dir(n);
  for (std::size_t j = 0; j < n; ++j) {
    scaled_base[j] = copy.base_num[j] * copy.dir_den;
    scaled_dir[j] = copy.dir_num[j] * copy.base_den;
  }
  Int den = copy.base_den * copy.dir_den;
  Int den_sq = den * den;
  std::vector<Rat> out;
  out.reserve(copy.m);
  Int coord, acc;
  for (int i = 0; i < copy.m; ++i) {
    acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      coord = scaled_base[j] + scaled_dir[j] * i;
      acc += coord * coord;
    }
    out.emplace_back(acc, den_sq);
  }
  return out;
}

std::vector<double> squared_distances(const FloatLineCopy& copy) {
  std::vector<double> out;
  out.reserve(copy.m);
  for (int i = 0; i < copy.m; ++i) {
    double acc = 0;
    for (std::size_t j = 0; j < copy.base.size(); ++j) {
      double coord = copy.base[j] + copy.direction[j] * i;
      acc += coord * coord;
    }
    out.push_back(acc);
  }
  return out;
}

bool second_difference_identity(const std::vector<Rat>& x_sq) {
  for (std::size_t i = 1; i + 1 < x_sq.size(); ++i)
    if (x_sq[i - 1] + x_sq[i + 1] != 2 * x_sq[i] + 2) return false;
  return true;
}

bool second_difference_identity(const std::vector<double>& x_sq, double rel_tol) {
  for (std::size_t i = 1; i + 1 < x_sq.size(); ++i) {
    double lhs = x_sq[i - 1] + x_sq[i + 1];
    double rhs = 2 * x_sq[i] + 2;
    if (std::abs(lhs - rhs) > rel_tol * std::max(1.0, std::abs(rhs))) return false;
  }
  return true;
}

namespace {

// Direction = (2 e w_1, ..., 2 e w_{n-1}, |w|^2 - e^2) / (|w|^2 + e^2):
// the stereographic image of w/e, a unit vector with exact integer data.
void sample_direction(SplitMix64& rng, int n, std::vector<std::int64_t>& num,
                      std::int64_t& den) {
  std::vector<std::int64_t> w(n - 1);
  for (auto& x : w) x = rng.next_signed(kDirRange);
  std::int64_t e = 1 + static_cast<std::int64_t>(rng.next_below(kDirRange));
  std::int64_t wsq = 0;
  for (auto x : w) wsq += x * x;
  num.assign(n, 0);
  for (int j = 0; j + 1 < n; ++j) num[j] = 2 * e * w[j];
  num[n - 1] = wsq - e * e;
  den = wsq + e * e;
}

}  // namespace

RatLineCopy sample_rat_line_copy(SplitMix64& rng, int n, int m, std::int64_t range) {
  if (n < 1 || m < 2) raise(Errc::DomainError, "need n >= 1 and m >= 2");
  RatLineCopy copy;
  copy.m = m;
  copy.base_den = kDenominator;
  copy.base_num.reserve(n);
  for (int j = 0; j < n; ++j) copy.base_num.emplace_back(rng.next_signed(range * kDenominator));
  std::vector<std::int64_t> dnum;
  std::int64_t dden;
  sample_direction(rng, n, dnum, dden);
  copy.dir_den = dden;
  copy.dir_num.assign(dnum.begin(), dnum.end());
  return copy;
}

FloatLineCopy to_float_copy(const RatLineCopy& copy) {
  FloatLineCopy f;
  f.m = copy.m;
  double bden = copy.base_den.convert_to<double>();
  double dden = copy.dir_den.convert_to<double>();
  for (const Int& x : copy.base_num) f.base.push_back(x.convert_to<double>() / bden);
  for (const Int& x : copy.dir_num) f.direction.push_back(x.convert_to<double>() / dden);
  return f;
}

namespace {

struct TrialSampler {
  std::uint64_t q;
  int n;
  std::int64_t range;  // base coordinates uniform in [-range, range]

  // squared distances of the m points, exact; all integer until the final
  // rational assembly
  void squared_norms(SplitMix64& rng, int m, std::vector<Rat>& out) const {
    __int128 s_uu = 0, s_uv = 0;
    std::vector<std::int64_t> u(n);
    for (auto& x : u) x = rng.next_signed(range * kDenominator);
    std::vector<std::int64_t> v;
    std::int64_t w;
    sample_direction(rng, n, v, w);
    for (int j = 0; j < n; ++j) {
      s_uu += static_cast<__int128>(u[j]) * u[j];
      s_uv += static_cast<__int128>(u[j]) * v[j];
    }
    Int suu = int_from_i128(s_uu), suv = int_from_i128(s_uv);
    Int D(kDenominator), W(w);
    Int DW = D * W;
    Int den_sq = DW * DW;
    Int w_sq = W * W;
    out.clear();
    out.reserve(m);
    for (int k = 0; k < m; ++k) {
      // |u + k v|^2 = (s_uu W^2 + 2k s_uv D W + k^2 D^2 W^2) / (D W)^2
      Int num = suu * w_sq + 2 * k * suv * DW + Int(k) * k * den_sq;
      out.emplace_back(num, den_sq);
    }
  }
};

struct ScanPartial {
  std::uint64_t all_red = 0;
  std::uint64_t all_blue = 0;
  std::uint64_t boundary_skipped = 0;
  std::vector<GeoReport::BlueHit> hits;  // in trial order within the chunk
};

double boundary_band(double s) {
  double ulp = std::nextafter(s, std::numeric_limits<double>::infinity()) - s;
  return std::max(1e-9, 8 * ulp);
}

}  // namespace

GeoReport monte_carlo_red_check(const ZqColoring& coloring, int n, std::uint64_t trials,
                                std::uint64_t seed) {
  if (n < 2) raise(Errc::DomainError, "n must be >= 2");
  if (coloring.q() > (std::uint64_t(1) << 40))
    raise(Errc::DomainError, "sampling supports q < 2^40");
  if (!verify_red_free(coloring))
    raise(Errc::PreconditionViolated,
          "coloring admits red solutions; the all-red count would be meaningless");

  RealLift lift(coloring);
  TrialSampler sampler{coloring.q(), n, static_cast<std::int64_t>(coloring.q())};

  auto partials = run_chunked<ScanPartial>(trials, [&](std::uint64_t begin, std::uint64_t end) {
    ScanPartial part;
    std::vector<Rat> x_sq;
    for (std::uint64_t t = begin; t < end; ++t) {
      SplitMix64 rng = SplitMix64::substream(seed, t);
      sampler.squared_norms(rng, 3, x_sq);
      bool all_red = true;
      for (const Rat& s : x_sq) {
        if (lift.color_at(s) != Color::Red) {
          all_red = false;
          break;
        }
      }
      if (all_red) ++part.all_red;
    }
    return part;
  });

  GeoReport report;
  report.n = n;
  report.m = 3;
  report.trials = trials;
  for (const auto& p : partials) report.all_red += p.all_red;
  return report;
}

GeoReport monte_carlo_blue_scan(const ZqColoring& coloring, int n, int m,
                                std::uint64_t trials, std::uint64_t seed, bool float_mode,
                                std::size_t hits_cap) {
  if (n < 2) raise(Errc::DomainError, "n must be >= 2");
  if (m < 2) raise(Errc::DomainError, "m must be >= 2");
  if (coloring.q() > (std::uint64_t(1) << 40))
    raise(Errc::DomainError, "sampling supports q < 2^40");

  RealLift lift(coloring);
  TrialSampler sampler{coloring.q(), n, static_cast<std::int64_t>(coloring.q())};
  const std::uint64_t q = coloring.q();

  auto partials = run_chunked<ScanPartial>(trials, [&](std::uint64_t begin, std::uint64_t end) {
    ScanPartial part;
    std::vector<Rat> x_sq;
    for (std::uint64_t t = begin; t < end; ++t) {
      SplitMix64 rng = SplitMix64::substream(seed, t);
      sampler.squared_norms(rng, m, x_sq);
      bool all_blue = true;
      if (float_mode) {
        bool skipped = false;
        for (const Rat& s : x_sq) {
          double sd = s.convert_to<double>();
          double frac = sd - std::floor(sd);
          double band = boundary_band(sd);
          if (frac < band || frac > 1 - band) {
            skipped = true;
            break;
          }
          std::uint64_t residue = static_cast<std::uint64_t>(std::floor(sd)) % q;
          if (coloring.at(residue) != Color::Blue) {
            all_blue = false;
            break;
          }
        }
        if (skipped) {
          ++part.boundary_skipped;
          continue;
        }
      } else {
        for (const Rat& s : x_sq) {
          if (lift.color_at(s) != Color::Blue) {
            all_blue = false;
            break;
          }
        }
      }
      if (all_blue) {
        ++part.all_blue;
        if (part.hits.size() < hits_cap)
          part.hits.push_back({x_sq[0], x_sq[1] - x_sq[0]});
      }
    }
    return part;
  });

  GeoReport report;
  report.n = n;
  report.m = m;
  report.trials = trials;
  for (const auto& p : partials) {
    report.all_blue += p.all_blue;
    report.boundary_skipped += p.boundary_skipped;
    for (const auto& h : p.hits)
      if (report.blue_hits.size() < hits_cap) report.blue_hits.push_back(h);
  }
  return report;
}

}  // namespace ellm
