#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <string_view>

namespace modshor {

// Bitstrings are MSB-first throughout: the first character carries the
// highest weight, int conversion reads the string as plain binary, and
// head/tail slice from the most/least significant end respectively.

inline std::string bits_of(std::uint64_t value, unsigned width) {
  assert(width >= 1 && width <= 63);
  std::string s(width, '0');
  for (unsigned i = 0; i < width; ++i) {
    if (value >> (width - 1 - i) & 1) s[i] = '1';
  }
  return s;
}

inline std::uint64_t bits_to_int(std::string_view bits) {
  std::uint64_t v = 0;
  for (char c : bits) {
    assert(c == '0' || c == '1');
    v = (v << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

// First t characters (most significant bits).
inline std::string_view head(std::string_view s, std::size_t t) {
  assert(t <= s.size());
  return s.substr(0, t);
}

// Last t characters (least significant bits).
inline std::string_view tail(std::string_view s, std::size_t t) {
  assert(t <= s.size());
  return s.substr(s.size() - t);
}

}  // namespace modshor
