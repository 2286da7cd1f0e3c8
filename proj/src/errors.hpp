#pragma once

#include <stdexcept>
#include <string>

namespace modshor {

// Invalid user-supplied configuration. Messages name the offending field so
// the CLI can surface a single-line diagnostic.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A caller broke a documented precondition (programming error, not input).
class DomainError : public std::logic_error {
 public:
  explicit DomainError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace modshor
