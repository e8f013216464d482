#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "ellm/coloring.hpp"
#include "ellm/numeric.hpp"

namespace ellm {

// A red triple with y1 + y3 = 2*y2 + c (mod q).
struct RedSolution {
  std::uint64_t y1, y2, y3;
  int c;
  friend auto operator<=>(const RedSolution&, const RedSolution&) = default;
};

// Complete solution list for one offset c in {1,2,3}, lexicographic in
// (y1, y2). Iterates ordered pairs of red residues, so the cost is
// O(q + R^2) for R red residues.
std::vector<RedSolution> find_red_solutions(const ZqColoring& coloring, int c);

// Cubic reference enumeration over Z_q^3; guarded to q <= 1000.
std::vector<RedSolution> brute_force_red_solutions(const ZqColoring& coloring, int c);

// True iff find_red_solutions is empty for c = 1, 2 and 3.
bool verify_red_free(const ZqColoring& coloring);

// Floors, fractional parts and the forced offset for an exact real triple
// with y1 + y3 = 2*y2 + 2. The offset c = n1 + n3 - 2*n2 always lands in
// {1,2,3} because |2*eps2 - eps1 - eps3| < 2.
struct RedReduction {
  Rat y1, y2, y3;
  Int n1, n2, n3;
  Rat eps1, eps2, eps3;
  int c;
};

RedReduction reduce_red_triple(const Rat& y1, const Rat& y2, const Rat& y3);

}  // namespace ellm
