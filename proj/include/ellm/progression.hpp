#pragma once

#include <cstdint>
#include <vector>

#include "ellm/coloring.hpp"
#include "ellm/numeric.hpp"

namespace ellm {

// The quadratic sequence y_i = a + (i-1)*d + (i-1)(i-2), i = 1..m, which is
// exactly the solution family of y_{i-1} + y_{i+1} = 2*y_i + 2 with y_1 = a,
// y_2 = a + d.
struct Progression {
  Rat a;  // >= 0
  Rat d;  // >= 0
  int m;  // >= 1

  Progression(Rat a_, Rat d_, int m_);
};

std::vector<Rat> progression_values(const Progression& p);

// Upper bound B with y_i < B for every (a,d) in [0,q)^2: 2m^2 once m >= q^3
// (the coupled regime), m*q + m^2 otherwise.
Int value_bound(const PrimeModulus& q, const Int& m);

struct IntervalPattern {
  std::vector<std::int64_t> indices;  // floor(y_i)
  friend auto operator<=>(const IntervalPattern&, const IntervalPattern&) = default;
};

struct PatternColors {
  IntervalPattern pattern;
  std::vector<Color> colors;  // coloring at indices[i] mod q
};

PatternColors residue_pattern(const ZqColoring& coloring, const Progression& p);

// Number of distinct values of floor(y_i) mod q over i = 1..m.
std::uint64_t pattern_distinct_interval_count(const Progression& p, const PrimeModulus& q);

}  // namespace ellm
