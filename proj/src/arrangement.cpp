#include "ellm/arrangement.hpp"

#include <map>
#include <set>

#include "ellm/error.hpp"
#include "ellm/rng.hpp"

namespace ellm {

std::vector<ArrangementLine> arrangement_lines(const PrimeModulus& q, int m) {
  if (m < 1) raise(Errc::DomainError, "m must be >= 1");
  if (q.value() > (std::uint64_t(1) << 20)) raise(Errc::GuardExceeded, "q too large for arrangement");
  std::vector<ArrangementLine> lines;
  const std::int64_t qv = static_cast<std::int64_t>(q.value());
  for (int i = 1; i <= m; ++i) {
    // a + (i-1) d = j - (i-1)(i-2) meets [0,q]^2 iff 0 <= j - (i-1)(i-2) <= i*q
    std::int64_t shift = std::int64_t(i - 1) * (i - 2);
    for (std::int64_t lhs = 0; lhs <= qv * i; ++lhs) lines.push_back({i, lhs + shift});
  }
  return lines;
}

namespace {

// A*a + B*d = C with A in {0,1}, B >= 0.
struct LineEq {
  std::int64_t A, B, C;
};

// cpp_rational requires a positive denominator
Rat make_rat(std::int64_t num, std::int64_t den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

}  // namespace

std::vector<CellWitness> enumerate_patterns(const PrimeModulus& q, int m,
                                            const EnumerationGuard& guard) {
  if (m < 1) raise(Errc::DomainError, "m must be >= 1");
  if (m > guard.max_m || q.value() > guard.max_q)
    raise(Errc::GuardExceeded, "enumeration guard: m <= " + std::to_string(guard.max_m) +
                                   ", q <= " + std::to_string(guard.max_q));
  const std::int64_t qv = static_cast<std::int64_t>(q.value());

  std::vector<LineEq> lines;
  for (const ArrangementLine& L : arrangement_lines(q, m)) {
    std::int64_t shift = std::int64_t(L.i - 1) * (L.i - 2);
    lines.push_back({1, L.i - 1, L.j - shift});
  }
  lines.push_back({1, 0, 0});
  lines.push_back({1, 0, qv});
  lines.push_back({0, 1, 0});
  lines.push_back({0, 1, qv});

  // All pairwise intersections inside the closed box, deduplicated exactly.
  std::set<std::pair<Rat, Rat>> vertices;
  for (std::size_t s = 0; s < lines.size(); ++s) {
    for (std::size_t t = s + 1; t < lines.size(); ++t) {
      const LineEq &l1 = lines[s], &l2 = lines[t];
      std::int64_t det = l1.A * l2.B - l2.A * l1.B;
      if (det == 0) continue;
      Rat a = make_rat(l1.C * l2.B - l2.C * l1.B, det);
      Rat d = make_rat(l1.A * l2.C - l2.A * l1.C, det);
      if (a >= 0 && a <= qv && d >= 0 && d <= qv) vertices.emplace(std::move(a), std::move(d));
    }
  }

  const Rat q_rat(qv);
  std::map<std::vector<std::int64_t>, CellWitness> found;

  auto eval_at = [&](const Rat& a, const Rat& d) {
    if (a < 0 || d < 0 || a >= q_rat || d >= q_rat) return;  // domain is half-open
    std::vector<std::int64_t> idx;
    idx.reserve(m);
    for (int i = 1; i <= m; ++i) {
      Rat y = a + d * Int(i - 1) + Rat(Int(i - 1) * Int(i - 2));
      idx.push_back(floor_rat(y).convert_to<std::int64_t>());
    }
    CellWitness w{a, d, idx};
    found.try_emplace(std::move(idx), std::move(w));
  };

  for (const auto& [va, vd] : vertices) {
    // Exact clearance: moving by (dx,dy) with |dx|,|dy| <= delta changes
    // A*a + B*d by at most delta*(A+B), so delta below min residual/(A+B)
    // never crosses a non-incident line.
    Rat delta;
    bool have = false;
    for (const LineEq& L : lines) {
      Rat resid = va * Int(L.A) + vd * Int(L.B) - Int(L.C);
      if (resid == 0) continue;
      if (resid < 0) resid = -resid;
      Rat clearance = resid / Int(L.A + L.B);
      if (!have || clearance < delta) {
        delta = clearance;
        have = true;
      }
    }
    if (!have) delta = Rat(1, 2);
    delta /= 2;

    eval_at(va, vd);
    for (int dx = -1; dx <= 1; ++dx) {
      for (int dy = -1; dy <= 1; ++dy) {
        if (dx == 0 && dy == 0) continue;
        eval_at(va + delta * dx, vd + delta * dy);
      }
    }
  }

  std::vector<CellWitness> out;
  out.reserve(found.size());
  for (auto& [key, w] : found) out.push_back(std::move(w));
  return out;
}

std::optional<BlueWitness> search_blue_progression(const ZqColoring& coloring, int m,
                                                   const EnumerationGuard& guard) {
  auto cells = enumerate_patterns(coloring.modulus(), m, guard);
  const std::uint64_t q = coloring.q();
  for (auto& cell : cells) {
    bool all_blue = true;
    for (std::int64_t idx : cell.indices) {
      if (coloring.at(static_cast<std::uint64_t>(idx) % q) != Color::Blue) {
        all_blue = false;
        break;
      }
    }
    if (!all_blue) continue;
    // re-verify by direct evaluation before returning
    PatternColors check = residue_pattern(coloring, Progression(cell.a, cell.d, m));
    if (check.pattern.indices != cell.indices)
      raise(Errc::Internal, "witness pattern failed re-evaluation");
    for (Color c : check.colors)
      if (c != Color::Blue) raise(Errc::Internal, "witness color failed re-evaluation");
    return BlueWitness{std::move(cell), std::move(check.colors)};
  }
  return std::nullopt;
}

std::optional<BlueWitness> sample_blue_oracle(const ZqColoring& coloring, int m,
                                              std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) raise(Errc::DomainError, "trials must be >= 1");
  if (m < 1) raise(Errc::DomainError, "m must be >= 1");
  const std::uint64_t q = coloring.q();
  if (q > (std::uint64_t(1) << 32)) raise(Errc::DomainError, "oracle sampling supports q < 2^32");
  const std::int64_t den = 1 << 16;

  for (std::uint64_t t = 0; t < trials; ++t) {
    SplitMix64 rng = SplitMix64::substream(seed, t);
    std::int64_t na = static_cast<std::int64_t>(rng.next_below(q * den));
    std::int64_t nd = static_cast<std::int64_t>(rng.next_below(q * den));
    bool all_blue = true;
    std::vector<std::int64_t> idx;
    idx.reserve(m);
    for (int i = 1; i <= m; ++i) {
      __int128 num = static_cast<__int128>(na) + static_cast<__int128>(i - 1) * nd +
                     static_cast<__int128>(den) * (i - 1) * (i - 2);
      std::int64_t fl = static_cast<std::int64_t>(num / den);
      idx.push_back(fl);
      if (coloring.at(static_cast<std::uint64_t>(fl) % q) != Color::Blue) {
        all_blue = false;
        break;
      }
    }
    if (!all_blue) continue;

    CellWitness cell{Rat(na, den), Rat(nd, den), idx};
    PatternColors check = residue_pattern(coloring, Progression(cell.a, cell.d, m));
    if (check.pattern.indices != cell.indices || check.colors != std::vector<Color>(m, Color::Blue))
      raise(Errc::Internal, "oracle witness failed self-check");
    return BlueWitness{std::move(cell), std::move(check.colors)};
  }
  return std::nullopt;
}

}  // namespace ellm
