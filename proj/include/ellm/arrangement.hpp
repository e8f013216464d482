#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ellm/progression.hpp"

namespace ellm {

// The line a + (i-1)*d = j - (i-1)(i-2) in the (a,d) parameter plane:
// points where y_i crosses the interval boundary j. For i = 1 the line is
// vertical (a = j).
struct ArrangementLine {
  int i;
  std::int64_t j;
};

// A realized interval pattern together with exact parameters in [0,q)^2
// that reproduce it.
struct CellWitness {
  Rat a, d;
  std::vector<std::int64_t> indices;
};

struct EnumerationGuard {
  int max_m = 64;
  std::uint64_t max_q = 64;
};

std::vector<ArrangementLine> arrangement_lines(const PrimeModulus& q, int m);

// All interval patterns realized by some (a,d) in [0,q)^2, deduplicated and
// sorted by pattern. Works by intersecting every pair of boundary lines
// (plus the four box edges), then evaluating the pattern exactly at each
// vertex and at eight rational perturbations of it whose magnitude is below
// the vertex's exact distance to every non-incident line. Every face of the
// arrangement inside the box has a corner with interior angle >= 60 degrees,
// so one of the eight compass directions lands in it.
std::vector<CellWitness> enumerate_patterns(const PrimeModulus& q, int m,
                                            const EnumerationGuard& guard = {});

struct BlueWitness {
  CellWitness cell;
  std::vector<Color> colors;  // all Blue, re-verified by direct evaluation
};

// First (in pattern order) enumerated witness whose m colors are all Blue;
// absence certifies that no (a,d) in [0,q)^2 yields an all-blue pattern.
std::optional<BlueWitness> search_blue_progression(const ZqColoring& coloring, int m,
                                                   const EnumerationGuard& guard = {});

// Independent randomized check: samples (a,d) uniformly over [0,q)^2 as
// rationals with denominator 2^16 and returns the first all-blue witness.
// Evaluation is pure 64-bit integer arithmetic, sharing nothing with the
// exact-rational path above.
std::optional<BlueWitness> sample_blue_oracle(const ZqColoring& coloring, int m,
                                              std::uint64_t trials, std::uint64_t seed);

}  // namespace ellm
