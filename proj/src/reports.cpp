#include "ellm/reports.hpp"

namespace ellm {

using nlohmann::json;

json verification_report(const ZqColoring& coloring) {
  json solutions = json::array();
  bool red_free = true;
  for (int c = 1; c <= 3; ++c) {
    for (const RedSolution& s : find_red_solutions(coloring, c)) {
      solutions.push_back({{"y1", s.y1}, {"y2", s.y2}, {"y3", s.y3}, {"c", s.c}});
      red_free = false;
    }
  }
  return json{{"q", coloring.q()},
              {"c_checked", {1, 2, 3}},
              {"red_count", coloring.count(Color::Red)},
              {"solutions", solutions},
              {"red_free", red_free}};
}

json witness_report(std::uint64_t q, int m, const CellWitness& cell,
                    const std::vector<Color>& colors) {
  std::string color_str;
  bool all_blue = true;
  for (Color c : colors) {
    color_str.push_back(color_char(c));
    if (c != Color::Blue) all_blue = false;
  }
  return json{{"q", q},
              {"m", m},
              {"a", format_rational(cell.a)},
              {"d", format_rational(cell.d)},
              {"indices", cell.indices},
              {"colors", color_str},
              {"all_blue", all_blue}};
}

json lemma_report(const PrimeModulus& q, const QuadraticParams& params,
                  const RationalApprox& approx, const LemmaVerdict& verdict) {
  return json{{"q", q.value()},
              {"alpha", params.alpha.describe()},
              {"beta", params.beta.describe()},
              {"k", approx.k},
              {"branch", branch_name(approx.branch)},
              {"hit_count", verdict.hit_count},
              {"threshold", format_rational(Rat(q.value(), 6))},
              {"pass", verdict.pass}};
}

json bounds_report_json(const BoundsReport& report) {
  return json{{"q", report.q.str()},
              {"m", report.m.str()},
              {"p", format_real(report.p)},
              {"red_bound", format_real(report.red_bound)},
              {"blue_bound", format_real(report.blue_bound)},
              {"sufficient", report.sufficient}};
}

json geo_report_json(const GeoReport& report) {
  return json{{"n", report.n},
              {"m", report.m},
              {"trials", report.trials},
              {"all_red", report.all_red},
              {"all_blue", report.all_blue},
              {"boundary_skipped", report.boundary_skipped}};
}

}  // namespace ellm
