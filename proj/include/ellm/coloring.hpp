#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ellm/numeric.hpp"
#include "ellm/prime.hpp"

namespace ellm {

enum class Color : std::uint8_t { Red, Blue };

inline char color_char(Color c) { return c == Color::Red ? 'R' : 'B'; }

struct Provenance {
  std::uint64_t seed = 0;
  double red_probability = 0.0;
};

// A red/blue assignment to the residues of Z_q. Immutable; copies share the
// color table.
class ZqColoring {
 public:
  ZqColoring(PrimeModulus q, std::vector<Color> colors,
             std::optional<Provenance> provenance = std::nullopt);

  const PrimeModulus& modulus() const { return q_; }
  std::uint64_t q() const { return q_.value(); }
  Color at(std::uint64_t residue) const { return (*colors_)[residue % q_.value()]; }
  const std::vector<Color>& colors() const { return *colors_; }
  const std::optional<Provenance>& provenance() const { return provenance_; }

  std::vector<std::uint64_t> residues_of(Color c) const;
  std::uint64_t count(Color c) const;

  static ZqColoring solid(PrimeModulus q, Color c);

 private:
  PrimeModulus q_;
  std::shared_ptr<const std::vector<Color>> colors_;
  std::optional<Provenance> provenance_;
};

// The red density used when no override is supplied: q^(-3/4).
double default_red_probability(std::uint64_t q);

// Each residue independently Red with probability p (default q^(-3/4)),
// drawn sequentially in residue order from SplitMix64(seed), so the coloring
// is fully determined by (q, seed, p).
ZqColoring generate_random_coloring(PrimeModulus q, std::uint64_t seed,
                                    std::optional<double> p_override = std::nullopt);

// chi(y) = chi'(floor(y) mod q) on the nonnegative reals, and its extension
// to points of E^n through the squared norm.
class RealLift {
 public:
  explicit RealLift(ZqColoring base) : base_(std::move(base)) {}

  const ZqColoring& base() const { return base_; }

  Color color_at(double y) const;
  Color color_at(const Rat& y) const;  // exact overload, boundary-safe

  Color color_point(const std::vector<double>& point) const;
  Color color_point(const std::vector<Rat>& point) const;

 private:
  ZqColoring base_;
};

// Text format:
//   zqcoloring v1
//   q=<decimal>
//   seed=<decimal>        (omitted if hand-built)
//   colors=<q chars 'R'/'B', residue 0 first>
std::string serialize(const ZqColoring& coloring);
ZqColoring deserialize(const std::string& text);

void save_coloring(const ZqColoring& coloring, const std::string& path);
ZqColoring load_coloring(const std::string& path);

}  // namespace ellm
