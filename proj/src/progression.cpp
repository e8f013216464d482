#include "ellm/progression.hpp"

#include <set>

#include "ellm/error.hpp"

namespace ellm {

Progression::Progression(Rat a_, Rat d_, int m_) : a(std::move(a_)), d(std::move(d_)), m(m_) {
  if (m < 1) raise(Errc::DomainError, "progression length m must be >= 1");
  if (a < 0 || d < 0) raise(Errc::DomainError, "progression parameters must be nonnegative");
}

std::vector<Rat> progression_values(const Progression& p) {
  std::vector<Rat> values;
  values.reserve(p.m);
  for (int i = 1; i <= p.m; ++i) {
    // (i-1)(i-2) = i^2 - 3i + 2
    Int shift = Int(i - 1) * Int(i - 2);
    values.push_back(p.a + p.d * Int(i - 1) + Rat(shift));
  }
  return values;
}

Int value_bound(const PrimeModulus& q, const Int& m) {
  if (m < 1) raise(Errc::DomainError, "m must be >= 1");
  Int qi(q.value());
  if (m >= qi * qi * qi) return 2 * m * m;
  return m * qi + m * m;
}

namespace {

std::int64_t floor_to_i64(const Rat& y) {
  Int f = floor_rat(y);
  if (f < 0 || f >= (Int(1) << 62))
    raise(Errc::DomainError, "interval index out of the supported range");
  return f.convert_to<std::int64_t>();
}

}  // namespace

PatternColors residue_pattern(const ZqColoring& coloring, const Progression& p) {
  PatternColors out;
  out.pattern.indices.reserve(p.m);
  out.colors.reserve(p.m);
  for (const Rat& y : progression_values(p)) {
    std::int64_t idx = floor_to_i64(y);
    out.pattern.indices.push_back(idx);
    out.colors.push_back(coloring.at(static_cast<std::uint64_t>(idx) % coloring.q()));
  }
  return out;
}

std::uint64_t pattern_distinct_interval_count(const Progression& p, const PrimeModulus& q) {
  std::set<std::uint64_t> residues;
  for (const Rat& y : progression_values(p))
    residues.insert(mod_pos(floor_rat(y), q.value()));
  return residues.size();
}

}  // namespace ellm
