#include "ellm/numeric.hpp"

#include <boost/multiprecision/detail/default_ops.hpp>
#include <sstream>

#include "ellm/error.hpp"

namespace ellm {

Int floor_rat(const Rat& x) {
  Int num = boost::multiprecision::numerator(x);
  Int den = boost::multiprecision::denominator(x);
  Int q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

std::uint64_t mod_pos(const Int& n, std::uint64_t q) {
  Int r = n % Int(q);
  if (r < 0) r += Int(q);
  return r.convert_to<std::uint64_t>();
}

Rat parse_rational(const std::string& s) {
  if (s.empty()) raise(Errc::BadField, "empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      Int num(s.substr(0, slash));
      Int den(s.substr(slash + 1));
      if (den == 0) raise(Errc::BadField, "zero denominator in '" + s + "'");
      return Rat(num, den);
    }
    // decimal form: [sign] digits [. digits] [e/E exponent]
    std::string body = s;
    long exp10 = 0;
    auto e = body.find_first_of("eE");
    if (e != std::string::npos) {
      exp10 = std::stol(body.substr(e + 1));
      body = body.substr(0, e);
    }
    auto dot = body.find('.');
    if (dot != std::string::npos) {
      std::string frac = body.substr(dot + 1);
      body = body.substr(0, dot) + frac;
      exp10 -= static_cast<long>(frac.size());
    }
    if (body.empty() || body == "-" || body == "+") raise(Errc::BadField, "bad literal '" + s + "'");
    Rat r{Int(body)};
    Int ten10 = boost::multiprecision::pow(Int(10), static_cast<unsigned>(exp10 < 0 ? -exp10 : exp10));
    if (exp10 >= 0)
      r *= Rat(ten10);
    else
      r /= Rat(ten10);
    return r;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    raise(Errc::BadField, "cannot parse rational '" + s + "'");
  }
}

std::string format_rational(const Rat& x) {
  Int num = boost::multiprecision::numerator(x);
  Int den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string format_real(const Real& x, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

Int int_from_i128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  Int hi = static_cast<std::uint64_t>(u >> 64);
  Int out = (hi << 64) + static_cast<std::uint64_t>(u);
  return neg ? -out : out;
}

Int round_up_3sig(const Int& v) {
  if (v <= 0) raise(Errc::DomainError, "round_up_3sig needs a positive value");
  std::string digits = v.str();
  if (digits.size() <= 3) return v;
  Int unit = boost::multiprecision::pow(Int(10), static_cast<unsigned>(digits.size() - 3));
  return ((v + unit - 1) / unit) * unit;
}

}  // namespace ellm
