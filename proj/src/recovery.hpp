#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stitcher.hpp"

namespace modshor {

struct RecoveryResult {
  std::optional<std::uint64_t> period;
  std::optional<std::uint64_t> factor;  // divides n, strictly between 1 and n
  std::optional<StitchedCandidate> source;
};

// Classical tail of the pipeline: candidates are scanned in ascending value
// (zero phase last), each one expanded into continued-fraction denominators
// q <= n, each verified period is fed to try_factor_from_period, and the
// first nontrivial factor wins. An empty result means no factor was found.
RecoveryResult recover_period_and_factor(
    std::vector<StitchedCandidate> candidates, std::uint64_t base,
    std::uint64_t n);

// Requires base^period = 1 (mod n) (DomainError otherwise). Absent when the
// period is odd or base^(period/2) = -1 (mod n); otherwise the first of
// gcd(base^(period/2) - 1, n), gcd(base^(period/2) + 1, n) lying strictly
// between 1 and n.
std::optional<std::uint64_t> try_factor_from_period(std::uint64_t base,
                                                    std::uint64_t period,
                                                    std::uint64_t n);

}  // namespace modshor
