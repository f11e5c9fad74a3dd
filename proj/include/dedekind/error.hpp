#pragma once

#include <stdexcept>
#include <string>

namespace dedekind {

// Raised when an argument violates an operation's stated precondition.
class precondition_error : public std::invalid_argument {
 public:
  explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when an internal consistency check fails, e.g. two independent
// evaluation routes disagree.
class contract_error : public std::logic_error {
 public:
  explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw precondition_error(message);
}

}  // namespace dedekind
