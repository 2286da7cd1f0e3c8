#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rng.hpp"

namespace modshor {

// Exact nonnegative rational, kept in lowest terms. den > 0 always.
struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  Fraction() = default;
  Fraction(std::uint64_t n, std::uint64_t d);

  std::string str() const;  // "num/den"
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

// (a * b) mod m without overflow for any 64-bit operands.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

// base^exponent mod modulus by square-and-multiply. modulus >= 2 or ConfigError.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent,
                      std::uint64_t modulus);

std::uint64_t gcd(std::uint64_t x, std::uint64_t y);

// Denominators of the continued-fraction convergents of y / pow2_den,
// filtered to q <= qmax, ascending, deduplicated. y = 0 yields {1}.
// Requires y < pow2_den and qmax >= 1.
std::vector<std::uint64_t> cf_denominators(std::uint64_t y,
                                           std::uint64_t pow2_den,
                                           std::uint64_t qmax);

// Smallest r >= 1 with a^r = 1 (mod n), found by direct iteration.
// Requires gcd(a, n) == 1 (DomainError otherwise); n >= 2.
std::optional<std::uint64_t> multiplicative_order(std::uint64_t a,
                                                  std::uint64_t n);

// Outcome of drawing a random base for n. `factor` is set when the draw
// happened to share a divisor with n.
struct CoprimeDraw {
  std::uint64_t base = 0;                // the drawn value in [2, n-2]
  std::optional<std::uint64_t> factor;   // gcd(base, n) when it exceeds 1
};

// Uniform single draw from [2, n-2]: if gcd(base, n) > 1 that gcd is an
// immediate classical factor and sampling short-circuits. n must be composite
// and >= 4 (ConfigError otherwise).
CoprimeDraw sample_coprime_base(std::uint64_t n, SplitMix64& rng);

// Trial division; adequate at the problem sizes this library targets.
bool is_prime(std::uint64_t n);

// Smallest prime factor of n >= 2.
std::uint64_t smallest_prime_factor(std::uint64_t n);

// True when n = p^k for a prime p and k >= 1.
bool is_prime_power(std::uint64_t n);

}  // namespace modshor
