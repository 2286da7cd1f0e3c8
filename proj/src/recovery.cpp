#include "recovery.hpp"

#include <algorithm>

#include "errors.hpp"
#include "numtheory.hpp"

namespace modshor {

namespace {

void check_sound(std::uint64_t factor, std::uint64_t n) {
  if (factor <= 1 || factor >= n || n % factor != 0)
    throw DomainError("recovery: unsound factor escaped the filters");
}

}  // namespace

std::optional<std::uint64_t> try_factor_from_period(std::uint64_t base,
                                                    std::uint64_t period,
                                                    std::uint64_t n) {
  if (mod_pow(base, period, n) != 1)
    throw DomainError("try_factor_from_period: period does not verify");
  if (period % 2 != 0) return std::nullopt;
  const std::uint64_t half = mod_pow(base, period / 2, n);
  if (half == n - 1) return std::nullopt;
  // half is invertible mod n, so half >= 1 and half - 1 does not wrap.
  const std::uint64_t f1 = gcd(half - 1, n);
  if (f1 != 1 && f1 != n) return f1;
  const std::uint64_t f2 = gcd(half + 1, n);
  if (f2 != 1 && f2 != n) return f2;
  return std::nullopt;
}

RecoveryResult recover_period_and_factor(
    std::vector<StitchedCandidate> candidates, std::uint64_t base,
    std::uint64_t n) {
  // Ascending value, zero phase last: it only ever yields the trivial q = 1.
  std::sort(candidates.begin(), candidates.end(),
            [](const StitchedCandidate& a, const StitchedCandidate& b) {
              if ((a.value == 0) != (b.value == 0)) return b.value == 0;
              return a.value < b.value;
            });

  RecoveryResult result;
  for (const auto& cand : candidates) {
    const std::uint64_t denom = std::uint64_t{1} << cand.bits.size();
    for (std::uint64_t r : cf_denominators(cand.value, denom, n)) {
      if (r == 0 || r > n) continue;
      if (mod_pow(base, r, n) != 1) continue;
      if (auto factor = try_factor_from_period(base, r, n)) {
        check_sound(*factor, n);
        result.period = r;
        result.factor = *factor;
        result.source = cand;
        return result;
      }
    }
  }
  return result;
}

}  // namespace modshor
