#include <doctest.h>

#include "bitstring.hpp"
#include "errors.hpp"
#include "numtheory.hpp"
#include "recovery.hpp"
#include "rng.hpp"

using namespace modshor;

namespace {

StitchedCandidate candidate(const std::string& bits) {
  const std::uint64_t value = bits_to_int(bits);
  return {bits, value, Fraction(value, std::uint64_t{1} << bits.size())};
}

}  // namespace

TEST_CASE("try_factor_from_period") {
  CHECK(try_factor_from_period(2, 4, 15) == 3);     // gcd(2^2 - 1, 15) first
  CHECK(try_factor_from_period(12, 16, 221) == 13); // gcd(12^8 - 1, 221)
  CHECK(try_factor_from_period(4, 2, 15) == 3);
  // Odd period: rejected up front.
  CHECK(!try_factor_from_period(7, 3, 19).has_value());
  // base^(r/2) = -1: both gcds are trivial by construction.
  REQUIRE(mod_pow(5, 3, 21) == 20);
  CHECK(!try_factor_from_period(5, 6, 21).has_value());
  // Unverified period is a caller bug.
  CHECK_THROWS_AS(try_factor_from_period(2, 3, 15), DomainError);
}

TEST_CASE("recover_period_and_factor on pinned candidates") {
  auto result = recover_period_and_factor({candidate("0111000")}, 12, 221);
  CHECK(result.period == 16);
  REQUIRE(result.factor.has_value());
  CHECK((*result.factor == 13 || *result.factor == 17));
  CHECK(result.source->bits == "0111000");

  result = recover_period_and_factor({candidate("110000000")}, 2, 15);
  CHECK(result.period == 4);
  REQUIRE(result.factor.has_value());
  CHECK((*result.factor == 3 || *result.factor == 5));

  // Zero phase only reaches the trivial denominator 1.
  result = recover_period_and_factor({candidate("000000000")}, 2, 15);
  CHECK(!result.period.has_value());
  CHECK(!result.factor.has_value());
  CHECK(!result.source.has_value());

  // Phase 1/2 gives q in {1, 2}, neither of which verifies for base 2.
  result = recover_period_and_factor({candidate("100000")}, 2, 15);
  CHECK(!result.factor.has_value());
}

TEST_CASE("candidates are scanned ascending with zero phase last") {
  // 1/4 recovers the period before 3/4 is ever looked at.
  auto result = recover_period_and_factor(
      {candidate("110000000"), candidate("010000000"), candidate("000000000")},
      2, 15);
  REQUIRE(result.source.has_value());
  CHECK(result.source->bits == "010000000");

  // A zero-phase candidate never shadows a useful one.
  result = recover_period_and_factor(
      {candidate("000000000"), candidate("110000000")}, 2, 15);
  CHECK(result.factor.has_value());
  CHECK(result.source->bits == "110000000");
}

TEST_CASE("returned factors always divide and returned periods verify") {
  SplitMix64 rng(47);
  const std::uint64_t ns[] = {15, 21, 33, 35, 39, 55, 221};
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t n = ns[rng.next_below(7)];
    std::uint64_t a = 2 + rng.next_below(n - 3);
    if (gcd(a, n) != 1) continue;
    const std::uint32_t len = 4 + static_cast<std::uint32_t>(rng.next_below(9));
    const auto cand =
        candidate(bits_of(rng.next_below(std::uint64_t{1} << len), len));
    const auto result = recover_period_and_factor({cand}, a, n);
    if (result.factor) {
      CHECK(*result.factor > 1);
      CHECK(*result.factor < n);
      CHECK(n % *result.factor == 0);
      REQUIRE(result.period.has_value());
      CHECK(mod_pow(a, *result.period, n) == 1);
    }
  }
}

TEST_CASE("every phase s/16 with odd s recovers the order of 12 mod 221") {
  // n_total = 7 here, so s/16 corresponds to the stitched value 8s.
  for (std::uint64_t s = 1; s < 16; s += 2) {
    const auto cand = candidate(bits_of(8 * s, 7));
    const auto result = recover_period_and_factor({cand}, 12, 221);
    REQUIRE(result.period.has_value());
    CHECK(*result.period == 16);
    REQUIRE(result.factor.has_value());
    CHECK((*result.factor == 13 || *result.factor == 17));
  }
}
