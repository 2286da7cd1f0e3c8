#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "numtheory.hpp"

namespace modshor {

// A full-length phase candidate assembled from consistent block outcomes.
struct StitchedCandidate {
  std::string bits;   // MSB-first, length sum(m_i - t_i)
  std::uint64_t value = 0;
  Fraction phase;     // value / 2^len, lowest terms

  friend bool operator==(const StitchedCandidate&,
                         const StitchedCandidate&) = default;
};

// The bit of s_right at left-origin position t: the most significant bit the
// right block measured below the overlap window. Models the left block
// having rounded up by one unit in its last measured position.
int carry_bit(std::string_view s_right, std::uint32_t t);

// True when the two outcomes agree on the t overlapped bits up to that
// single carry: t = 0, or
//   (int(tail(s_left, t)) - carry) mod 2^t == int(head(s_right, t)).
bool consistent(std::string_view s_left, std::string_view s_right,
                std::uint32_t t);

// Builds sequences right to left, keeping only consistent extensions and at
// most max_combos sequences per round (sequences in insertion order,
// candidates in rank order). Each surviving sequence is concatenated with
// overlap removal, keeping head(s_i, m_i - t_{i+1}) for every block but the
// last, which is kept whole. Deduplicated on the stitched bitstring; an empty
// result is a legal outcome.
std::vector<StitchedCandidate> integrate_and_stitch(
    const std::vector<std::vector<std::string>>& candidates,
    const std::vector<std::uint32_t>& m, const std::vector<std::uint32_t>& t,
    std::uint64_t max_combos);

}  // namespace modshor
