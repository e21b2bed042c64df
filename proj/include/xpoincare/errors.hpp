#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace xpoincare {

/// Malformed input document (JSON element, matrix, or constants table).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t position = npos)
      : std::runtime_error(what), position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// Byte offset of the failure, or npos when not applicable.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A matrix could not be factored into canonical group parameters.
class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace xpoincare
