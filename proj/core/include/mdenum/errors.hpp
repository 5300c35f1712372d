#pragma once

#include <stdexcept>
#include <string>

namespace mdenum {

/// Raised when a request would exceed a configured size limit
/// (state bits, enumeration cells, dense materialization).
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when two independent computations of the same quantity disagree.
class CrossCheckError : public std::logic_error {
 public:
  explicit CrossCheckError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace mdenum
