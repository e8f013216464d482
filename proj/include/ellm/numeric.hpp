#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace ellm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// 50 significant decimal digits; the wide variant backs intermediate steps
// whose final answers are reported at 50 digits.
using Real = boost::multiprecision::cpp_dec_float_50;
using RealWide = boost::multiprecision::cpp_dec_float_100;

// Exact floor of a rational, correct for negatives.
Int floor_rat(const Rat& x);

// n mod q mapped into [0, q), correct for negative n.
std::uint64_t mod_pos(const Int& n, std::uint64_t q);

// Accepts "123", "-4/7", "1.25", "-0.5e2"; exact decimal-to-rational conversion.
Rat parse_rational(const std::string& s);

std::string format_rational(const Rat& x);  // "num/den" (den omitted when 1)

// Decimal string with the given number of significant digits.
std::string format_real(const Real& x, int digits = 50);

Int int_from_i128(__int128 v);

// Smallest multiple of 10^(digits-3)-style unit that is >= v and has at most
// three significant decimal digits.
Int round_up_3sig(const Int& v);

}  // namespace ellm
