#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfrt {

/// Malformed textual input. `position()` is the 0-based character offset
/// at which parsing stopped.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        message_(what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

/// A jet does not carry enough orders for the requested operation.
class TruncationError : public std::domain_error {
 public:
  TruncationError(const std::string& what, int required_order)
      : std::domain_error(what), required_order_(required_order) {}

  int required_order() const noexcept { return required_order_; }

 private:
  int required_order_;
};

}  // namespace hopfrt
