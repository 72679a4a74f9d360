#pragma once

#include <stdexcept>
#include <string>

namespace esum {

// Thrown when an operation's precondition is violated (divergent series,
// out-of-domain argument). The message names the violated requirement so
// callers can surface it verbatim.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace esum
