#pragma once

#include <cstdint>
#include <vector>

#include "ellm/coloring.hpp"
#include "ellm/numeric.hpp"
#include "ellm/rng.hpp"

namespace ellm {

// An isometric copy of the unit-spaced line: points base + (i-1)*direction,
// i = 1..m, with |direction| = 1. Exact copies are stored over common
// denominators with sum(dir_num^2) == dir_den^2, so every squared distance
// comes out as an exact rational.
struct RatLineCopy {
  std::vector<Int> base_num;
  Int base_den;
  std::vector<Int> dir_num;
  Int dir_den;
  int m;

  int dimension() const { return static_cast<int>(base_num.size()); }
  Rat base_coord(std::size_t j) const { return Rat(base_num[j], base_den); }
  Rat dir_coord(std::size_t j) const { return Rat(dir_num[j], dir_den); }
};

struct FloatLineCopy {
  std::vector<double> base;
  std::vector<double> direction;
  int m;

  int dimension() const { return static_cast<int>(base.size()); }
};

RatLineCopy make_line_copy(const std::vector<Rat>& base, const std::vector<Rat>& direction,
                           int m);
FloatLineCopy make_line_copy(const std::vector<double>& base,
                             const std::vector<double>& direction, int m);

// x_i^2 = |base + (i-1)*direction|^2, each computed by direct summation.
std::vector<Rat> squared_distances(const RatLineCopy& copy);
std::vector<double> squared_distances(const FloatLineCopy& copy);

// x_{i-1} + x_{i+1} = 2*x_i + 2 for all interior i.
bool second_difference_identity(const std::vector<Rat>& x_sq);
bool second_difference_identity(const std::vector<double>& x_sq, double rel_tol);

// Random copy: base coordinates uniform rationals in [-range, range] with
// denominator 2^16; direction from the rational parametrization of the unit
// sphere (stereographic image of an integer vector), so |direction| = 1
// exactly.
RatLineCopy sample_rat_line_copy(SplitMix64& rng, int n, int m, std::int64_t range);

FloatLineCopy to_float_copy(const RatLineCopy& copy);

struct GeoReport {
  int n = 0;
  int m = 0;
  std::uint64_t trials = 0;
  std::uint64_t all_red = 0;
  std::uint64_t all_blue = 0;
  std::uint64_t boundary_skipped = 0;

  struct BlueHit {
    Rat a, d;  // x1^2 and x2^2 - x1^2 of the hit, the progression parameters
  };
  std::vector<BlueHit> blue_hits;  // capped
};

// Samples `trials` random unit 3-point lines with exact rational squared
// norms and counts all-red copies. Refuses colorings that are not red-free;
// for red-free colorings any nonzero count is a bug.
GeoReport monte_carlo_red_check(const ZqColoring& coloring, int n, std::uint64_t trials,
                                std::uint64_t seed);

// Observational scan for all-blue m-point copies. float_mode trades the
// exact lift for double evaluation and skips any copy with a squared norm
// too close to an interval boundary to classify.
GeoReport monte_carlo_blue_scan(const ZqColoring& coloring, int n, int m,
                                std::uint64_t trials, std::uint64_t seed,
                                bool float_mode = false, std::size_t hits_cap = 128);

}  // namespace ellm
