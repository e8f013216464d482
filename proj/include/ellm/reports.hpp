#pragma once

#include <json.hpp>
#include <optional>

#include "ellm/arrangement.hpp"
#include "ellm/bounds.hpp"
#include "ellm/coloring.hpp"
#include "ellm/equidist.hpp"
#include "ellm/geometry.hpp"
#include "ellm/red_verifier.hpp"

namespace ellm {

inline constexpr const char* kToolName = "ellm";
inline constexpr const char* kToolVersion = "0.1.0";

// { "q", "c_checked": [1,2,3], "red_count", "solutions": [...], "red_free" }
nlohmann::json verification_report(const ZqColoring& coloring);

// { "q", "m", "a": "num/den", "d": "num/den", "indices": [...],
//   "colors": "RBB...", "all_blue" }
nlohmann::json witness_report(std::uint64_t q, int m, const CellWitness& cell,
                              const std::vector<Color>& colors);

// { "q", "alpha", "beta", "k", "branch", "hit_count", "threshold", "pass" }
nlohmann::json lemma_report(const PrimeModulus& q, const QuadraticParams& params,
                            const RationalApprox& approx, const LemmaVerdict& verdict);

// All reals as decimal strings; q and m as decimal strings (they can exceed
// 64 bits).
nlohmann::json bounds_report_json(const BoundsReport& report);

// { "n", "m", "trials", "all_red", "all_blue", "boundary_skipped" }
nlohmann::json geo_report_json(const GeoReport& report);

}  // namespace ellm
