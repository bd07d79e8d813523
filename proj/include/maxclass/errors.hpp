#ifndef MAXCLASS_ERRORS_HPP_
#define MAXCLASS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace maxclass {

// Bad arguments from a caller or the command line (CLI exit code 2).
class usage_error : public std::invalid_argument {
 public:
  explicit usage_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// An internal consistency check failed, e.g. two counting paths disagree
// (CLI exit code 3). Never raised by bad input alone.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace maxclass

#endif  // MAXCLASS_ERRORS_HPP_
