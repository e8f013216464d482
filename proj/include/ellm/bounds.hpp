#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ellm/coloring.hpp"
#include "ellm/numeric.hpp"

namespace ellm {

// Sign-pattern bound ceil((50*D*M/N)^N) in exact integer arithmetic;
// requires M >= N >= 2 and D >= 1.
Int sign_pattern_bound(const Int& M, int N, int D);

struct RedBound {
  Real bound;     // 3 p^3 q^2 + 9 p^2 q with p = q^(-3/4)
  Real majorant;  // 12 q^(-1/4); bound <= majorant for all q >= 1
};

RedBound expected_red_bound(const Int& q);

// 10^4 m^6 (1 - q^(-3/4))^(q/6), evaluated in log space at 100 digits so the
// q ~ 10^16 regime does not underflow.
Real blue_failure_bound(const Int& q, const Int& m);

struct BoundsReport {
  Int q;
  Int m;
  Real p;
  Real red_bound;
  Real blue_bound;
  bool sufficient;  // red_bound < 1/2 and blue_bound < 1/2
};

BoundsReport evaluate_bounds(const Int& q, const Int& m);

// Geometric grid 10^4 .. 10^20 with ratio 10^(1/4).
std::vector<Int> default_q_grid();

// Smallest sufficient q on the grid with m = q^3, refined by bisection to
// three significant digits when a lower bracket exists. The returned m must
// not exceed 10^50.
BoundsReport find_sufficient_parameters(const std::vector<Int>& grid, bool refine = true);

struct EmpiricalRed {
  double mean;
  double stddev;
  double stderr_mean;
  std::uint64_t seeds;
};

// Mean total red-solution count (c = 1,2,3) over colorings generated with
// seeds base_seed .. base_seed + seeds - 1.
EmpiricalRed empirical_expected_red(const PrimeModulus& q, std::uint64_t seeds,
                                    std::uint64_t base_seed = 0,
                                    std::optional<double> p_override = std::nullopt);

}  // namespace ellm
