#pragma once

#include <stdexcept>
#include <string>

namespace clusteredit {

// Raised for malformed input: unsorted reads, non-partitions, bad parameters,
// unparsable files. The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace clusteredit
