#ifndef SOURCEID_ERRORS_HPP
#define SOURCEID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sourceid {

// Bad or degenerate input data (unreadable files, malformed rows,
// violated preconditions the caller can fix). CLI maps this to exit 3.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// A broken internal invariant. CLI maps this to exit 4.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace sourceid

#endif
