// Exception types shared across the library.

#ifndef DORP_ERRORS_HPP_
#define DORP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace dorp {

// Two maps of different chain sizes were combined.
struct SizeMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An argument violates an operation's precondition.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A configured bound (oracle size, closure cap, ...) was exceeded.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// word_for was asked about an element outside the closure.
struct NotGeneratedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Network request failed and no cached response was available.
struct NetworkError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A literal or a remote payload could not be parsed.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dorp

#endif  // DORP_ERRORS_HPP_
