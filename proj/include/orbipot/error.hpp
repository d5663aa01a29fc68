#pragma once

#include <stdexcept>
#include <string>

namespace orbipot {

/// Raised for inputs outside an operation's domain (bad words, wrong
/// signature kind, unrealizable data). The CLI maps it to exit code 1.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace orbipot
