#include "ellm/coloring.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "ellm/error.hpp"
#include "ellm/rng.hpp"

namespace ellm {

ZqColoring::ZqColoring(PrimeModulus q, std::vector<Color> colors,
                       std::optional<Provenance> provenance)
    : q_(q),
      colors_(std::make_shared<const std::vector<Color>>(std::move(colors))),
      provenance_(provenance) {
  if (colors_->size() != q_.value())
    raise(Errc::LengthMismatch, "expected " + std::to_string(q_.value()) + " colors, got " +
                                    std::to_string(colors_->size()));
}

std::vector<std::uint64_t> ZqColoring::residues_of(Color c) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < q(); ++r)
    if (at(r) == c) out.push_back(r);
  return out;
}

std::uint64_t ZqColoring::count(Color c) const {
  std::uint64_t n = 0;
  for (Color x : *colors_)
    if (x == c) ++n;
  return n;
}

ZqColoring ZqColoring::solid(PrimeModulus q, Color c) {
  return ZqColoring(q, std::vector<Color>(q.value(), c));
}

double default_red_probability(std::uint64_t q) {
  return std::pow(static_cast<double>(q), -0.75);
}

ZqColoring generate_random_coloring(PrimeModulus q, std::uint64_t seed,
                                    std::optional<double> p_override) {
  double p = p_override ? *p_override : default_red_probability(q.value());
  if (!(p >= 0.0 && p <= 1.0))
    raise(Errc::DomainError, "red probability must lie in [0,1]");
  SplitMix64 rng(seed);
  std::vector<Color> colors;
  colors.reserve(q.value());
  // sequential in the residue index: this fixes the seed-to-colors mapping
  for (std::uint64_t r = 0; r < q.value(); ++r)
    colors.push_back(rng.next_double() < p ? Color::Red : Color::Blue);
  return ZqColoring(q, std::move(colors), Provenance{seed, p});
}

Color RealLift::color_at(double y) const {
  if (!(y >= 0.0)) raise(Errc::DomainError, "lift requires y >= 0");
  if (y >= 0x1p63) raise(Errc::DomainError, "y too large for double floor; use the exact overload");
  std::uint64_t n = static_cast<std::uint64_t>(std::floor(y));
  return base_.at(n % base_.q());
}

Color RealLift::color_at(const Rat& y) const {
  if (y < 0) raise(Errc::DomainError, "lift requires y >= 0");
  return base_.at(mod_pos(floor_rat(y), base_.q()));
}

Color RealLift::color_point(const std::vector<double>& point) const {
  if (point.empty()) raise(Errc::DomainError, "point must have dimension >= 1");
  double s = 0;
  for (double x : point) s += x * x;
  return color_at(s);
}

Color RealLift::color_point(const std::vector<Rat>& point) const {
  if (point.empty()) raise(Errc::DomainError, "point must have dimension >= 1");
  Rat s = 0;
  for (const Rat& x : point) s += x * x;
  return color_at(s);
}

std::string serialize(const ZqColoring& coloring) {
  std::ostringstream os;
  os << "zqcoloring v1\n";
  os << "q=" << coloring.q() << "\n";
  if (coloring.provenance()) os << "seed=" << coloring.provenance()->seed << "\n";
  os << "colors=";
  for (Color c : coloring.colors()) os << color_char(c);
  os << "\n";
  return os.str();
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

std::uint64_t parse_u64_field(const std::string& line, const std::string& key) {
  if (line.size() <= key.size() || line.compare(0, key.size(), key) != 0)
    raise(Errc::BadField, "expected '" + key + "<decimal>', got '" + line + "'");
  std::string value = line.substr(key.size());
  if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
    raise(Errc::BadField, "bad decimal in '" + line + "'");
  try {
    return std::stoull(value);
  } catch (const std::exception&) {
    raise(Errc::BadField, "decimal out of range in '" + line + "'");
  }
}

}  // namespace

ZqColoring deserialize(const std::string& text) {
  auto lines = split_lines(text);
  if (lines.empty() || lines[0] != "zqcoloring v1")
    raise(Errc::BadHeader, "missing 'zqcoloring v1' header");
  if (lines.size() < 3) raise(Errc::BadField, "truncated document");

  std::uint64_t q = parse_u64_field(lines[1], "q=");
  PrimeModulus modulus(q);  // throws NonPrimeModulus for composite q

  std::size_t next = 2;
  std::optional<Provenance> provenance;
  if (lines[next].rfind("seed=", 0) == 0) {
    provenance = Provenance{parse_u64_field(lines[next], "seed="), default_red_probability(q)};
    ++next;
  }
  if (next >= lines.size()) raise(Errc::BadField, "missing colors line");
  const std::string& cl = lines[next];
  if (cl.rfind("colors=", 0) != 0) raise(Errc::BadField, "expected 'colors=...', got '" + cl + "'");
  std::string chars = cl.substr(7);
  if (chars.size() != q)
    raise(Errc::LengthMismatch, "colors has length " + std::to_string(chars.size()) +
                                    ", expected q=" + std::to_string(q));
  std::vector<Color> colors;
  colors.reserve(q);
  for (char ch : chars) {
    if (ch == 'R')
      colors.push_back(Color::Red);
    else if (ch == 'B')
      colors.push_back(Color::Blue);
    else
      raise(Errc::BadColorChar, std::string("unexpected color character '") + ch + "'");
  }
  return ZqColoring(modulus, std::move(colors), provenance);
}

void save_coloring(const ZqColoring& coloring, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::BadField, "cannot open '" + path + "' for writing");
  out << serialize(coloring);
}

ZqColoring load_coloring(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::BadField, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return deserialize(ss.str());
}

}  // namespace ellm
