#include "numtheory.hpp"

#include <cassert>
#include <numeric>

#include "errors.hpp"

namespace modshor {

Fraction::Fraction(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
  if (den == 0) throw DomainError("Fraction: zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  num /= g;
  den /= g;
}

std::string Fraction::str() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent,
                      std::uint64_t modulus) {
  if (modulus < 2) throw ConfigError("mod_pow: modulus must be >= 2");
  std::uint64_t result = 1;
  std::uint64_t acc = base % modulus;
  while (exponent > 0) {
    if (exponent & 1) result = mul_mod(result, acc, modulus);
    acc = mul_mod(acc, acc, modulus);
    exponent >>= 1;
  }
  return result;
}

std::uint64_t gcd(std::uint64_t x, std::uint64_t y) { return std::gcd(x, y); }

std::vector<std::uint64_t> cf_denominators(std::uint64_t y,
                                           std::uint64_t pow2_den,
                                           std::uint64_t qmax) {
  assert(pow2_den > 0 && y < pow2_den && qmax >= 1);
  std::vector<std::uint64_t> out{1};  // q0 = 1 (the convergent a0/1)
  std::uint64_t num = y % pow2_den;
  std::uint64_t den = pow2_den;
  std::uint64_t q_prev = 0;  // q_{-1}
  std::uint64_t q_cur = 1;   // q_0
  while (num != 0) {
    const std::uint64_t a = den / num;
    const std::uint64_t rem = den % num;
    // Stop before q_{i} = a*q_{i-1} + q_{i-2} would exceed qmax (or overflow).
    if (a > (qmax - q_prev) / q_cur) break;
    const std::uint64_t q_next = a * q_cur + q_prev;
    if (out.empty() || q_next != out.back()) out.push_back(q_next);
    q_prev = q_cur;
    q_cur = q_next;
    den = num;
    num = rem;
  }
  return out;
}

std::optional<std::uint64_t> multiplicative_order(std::uint64_t a,
                                                  std::uint64_t n) {
  if (n < 2) throw DomainError("multiplicative_order: modulus must be >= 2");
  if (std::gcd(a % n, n) != 1)
    throw DomainError("multiplicative_order: base not coprime to modulus");
  std::uint64_t acc = a % n;
  for (std::uint64_t r = 1; r <= n; ++r) {
    if (acc == 1) return r;
    acc = mul_mod(acc, a % n, n);
  }
  return std::nullopt;  // unreachable for coprime inputs
}

CoprimeDraw sample_coprime_base(std::uint64_t n, SplitMix64& rng) {
  if (n < 4) throw ConfigError("base sampling requires n >= 4");
  if (is_prime(n)) throw ConfigError("base sampling requires composite n");
  CoprimeDraw draw;
  draw.base = 2 + rng.next_below(n - 3);  // uniform in [2, n-2]
  const std::uint64_t g = std::gcd(draw.base, n);
  if (g > 1) draw.factor = g;
  return draw;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  assert(n >= 2);
  if (n % 2 == 0) return 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return d;
  }
  return n;
}

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  const std::uint64_t p = smallest_prime_factor(n);
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace modshor
