#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mvcolor {

/// Violation of a library-internal numerical invariant (for example a
/// partition component far outside [0,1]). Indicates a bug, not bad input.
class invariant_error : public std::runtime_error {
 public:
  explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

/// Netpbm input could not be parsed. Carries the byte offset at which the
/// problem was detected; the offset is also spelled out in the message.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// The requested decomposition is not defined for the given color property.
class unsupported_property_error : public std::invalid_argument {
 public:
  explicit unsupported_property_error(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace mvcolor
