#include "ellm/prime.hpp"

#include <array>

#include "ellm/error.hpp"

namespace ellm {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
  std::uint64_t result = 1;
  base %= n;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, n);
    base = mulmod(base, base, n);
    exp >>= 1;
  }
  return result;
}

// Composite-detecting witness test; n odd, n > a.
bool strong_probable_prime(std::uint64_t n, std::uint64_t a) {
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// This witness set is deterministic for all n < 3.3 * 10^24, which covers
// the full 64-bit range.
constexpr std::array<std::uint64_t, 12> kWitnesses = {2,  3,  5,  7,  11, 13,
                                                      17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  for (std::uint64_t a : kWitnesses) {
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

std::uint64_t next_prime_u64(std::uint64_t n) {
  std::uint64_t c = n + 1;
  if (c <= 2) return 2;
  if ((c & 1) == 0) ++c;
  while (!is_prime_u64(c)) c += 2;
  return c;
}

PrimeModulus::PrimeModulus(std::uint64_t q) : q_(q) {
  if (!is_prime_u64(q)) raise(Errc::NonPrimeModulus, "q=" + std::to_string(q) + " is not prime");
  if (q == 2) raise(Errc::NonPrimeModulus, "q must be an odd prime");
}

}  // namespace ellm
