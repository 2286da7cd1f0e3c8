#include "stitcher.hpp"

#include <cassert>
#include <unordered_set>

#include "bitstring.hpp"
#include "errors.hpp"

namespace modshor {

int carry_bit(std::string_view s_right, std::uint32_t t) {
  if (t >= s_right.size())
    throw DomainError("carry_bit: overlap must be smaller than the block");
  return s_right[t] == '1' ? 1 : 0;
}

bool consistent(std::string_view s_left, std::string_view s_right,
                std::uint32_t t) {
  if (t == 0) return true;
  assert(t <= s_left.size() && t < s_right.size());
  const std::uint64_t left_tail = bits_to_int(tail(s_left, t));
  const std::uint64_t right_head = bits_to_int(head(s_right, t));
  const std::uint64_t carry = static_cast<std::uint64_t>(carry_bit(s_right, t));
  const std::uint64_t mask = (std::uint64_t{1} << t) - 1;
  return ((left_tail - carry) & mask) == right_head;
}

std::vector<StitchedCandidate> integrate_and_stitch(
    const std::vector<std::vector<std::string>>& candidates,
    const std::vector<std::uint32_t>& m, const std::vector<std::uint32_t>& t,
    std::uint64_t max_combos) {
  const std::size_t blocks = candidates.size();
  if (blocks == 0 || m.size() != blocks || t.size() != blocks)
    throw DomainError("integrate_and_stitch: mismatched block lists");
  if (max_combos < 1) throw ConfigError("max_combos must be >= 1");

  // Sequences grow leftward; each is stored in block order.
  std::vector<std::vector<std::string>> seqs;
  for (const auto& s : candidates.back()) seqs.push_back({s});

  for (std::size_t left = blocks - 1; left-- > 0;) {
    const std::uint32_t overlap = t[left + 1];
    std::vector<std::vector<std::string>> grown;
    bool full = false;
    for (const auto& seq : seqs) {
      for (const auto& cand : candidates[left]) {
        if (!consistent(cand, seq.front(), overlap)) continue;
        std::vector<std::string> extended;
        extended.reserve(seq.size() + 1);
        extended.push_back(cand);
        extended.insert(extended.end(), seq.begin(), seq.end());
        grown.push_back(std::move(extended));
        if (grown.size() >= max_combos) {
          full = true;
          break;
        }
      }
      if (full) break;
    }
    seqs = std::move(grown);
    if (seqs.empty()) return {};
  }

  std::uint32_t n_total = 0;
  for (std::size_t i = 0; i < blocks; ++i) n_total += m[i] - t[i];

  std::vector<StitchedCandidate> out;
  std::unordered_set<std::string> seen;
  for (const auto& seq : seqs) {
    std::string stitched;
    stitched.reserve(n_total);
    for (std::size_t i = 0; i + 1 < blocks; ++i) {
      stitched += head(seq[i], m[i] - t[i + 1]);
    }
    stitched += seq.back();
    assert(stitched.size() == n_total);
    if (!seen.insert(stitched).second) continue;
    const std::uint64_t value = bits_to_int(stitched);
    out.push_back({stitched, value, Fraction(value, std::uint64_t{1} << n_total)});
  }
  return out;
}

}  // namespace modshor
