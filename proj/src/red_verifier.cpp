#include "ellm/red_verifier.hpp"

#include "ellm/error.hpp"

namespace ellm {

namespace {

void check_offset(int c) {
  if (c < 1 || c > 3) raise(Errc::DomainError, "offset c must be 1, 2 or 3");
}

}  // namespace

std::vector<RedSolution> find_red_solutions(const ZqColoring& coloring, int c) {
  check_offset(c);
  const std::uint64_t q = coloring.q();
  auto reds = coloring.residues_of(Color::Red);  // ascending
  std::vector<RedSolution> out;
  for (std::uint64_t y1 : reds) {
    for (std::uint64_t y2 : reds) {
      unsigned __int128 t = static_cast<unsigned __int128>(2) * y2 + c + q - y1;
      std::uint64_t y3 = static_cast<std::uint64_t>(t % q);
      if (coloring.at(y3) == Color::Red) out.push_back({y1, y2, y3, c});
    }
  }
  return out;  // lexicographic in (y1, y2) by construction
}

std::vector<RedSolution> brute_force_red_solutions(const ZqColoring& coloring, int c) {
  check_offset(c);
  const std::uint64_t q = coloring.q();
  if (q > 1000) raise(Errc::GuardExceeded, "cubic enumeration restricted to q <= 1000");
  std::vector<RedSolution> out;
  for (std::uint64_t y1 = 0; y1 < q; ++y1) {
    if (coloring.at(y1) != Color::Red) continue;
    for (std::uint64_t y2 = 0; y2 < q; ++y2) {
      if (coloring.at(y2) != Color::Red) continue;
      for (std::uint64_t y3 = 0; y3 < q; ++y3) {
        if (coloring.at(y3) != Color::Red) continue;
        if ((y1 + y3) % q == (2 * y2 + c) % q) out.push_back({y1, y2, y3, c});
      }
    }
  }
  return out;
}

bool verify_red_free(const ZqColoring& coloring) {
  for (int c = 1; c <= 3; ++c)
    if (!find_red_solutions(coloring, c).empty()) return false;
  return true;
}

RedReduction reduce_red_triple(const Rat& y1, const Rat& y2, const Rat& y3) {
  if (y1 < 0 || y2 < 0 || y3 < 0) raise(Errc::DomainError, "triple must be nonnegative");
  if (y1 + y3 != 2 * y2 + 2)
    raise(Errc::EquationViolated, "y1 + y3 = 2*y2 + 2 does not hold exactly");
  RedReduction r;
  r.y1 = y1;
  r.y2 = y2;
  r.y3 = y3;
  r.n1 = floor_rat(y1);
  r.n2 = floor_rat(y2);
  r.n3 = floor_rat(y3);
  r.eps1 = y1 - Rat(r.n1);
  r.eps2 = y2 - Rat(r.n2);
  r.eps3 = y3 - Rat(r.n3);
  Int c = r.n1 + r.n3 - 2 * r.n2;
  if (c < 1 || c > 3)
    raise(Errc::Internal, "offset " + c.str() + " outside {1,2,3}; |2e2-e1-e3| < 2 violated");
  r.c = c.convert_to<int>();
  return r;
}

}  // namespace ellm
