#pragma once

#include <cstdint>

namespace ellm {

// Deterministic Miller-Rabin over the full 64-bit range (fixed witness set,
// valid beyond 2^64).
bool is_prime_u64(std::uint64_t n);

// Smallest prime strictly greater than n.
std::uint64_t next_prime_u64(std::uint64_t n);

// An odd prime modulus, validated at construction.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t q);
  std::uint64_t value() const { return q_; }

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  std::uint64_t q_;
};

}  // namespace ellm
