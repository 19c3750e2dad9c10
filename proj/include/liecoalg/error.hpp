#ifndef LIECOALG_ERROR_HPP
#define LIECOALG_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liecoalg {

/// Raised when an operation's domain precondition is violated (bad shape,
/// wrong label count, inhomogeneous input where homogeneity is required...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in one of the text grammars. `position` is a 0-based byte
/// offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace liecoalg

#endif  // LIECOALG_ERROR_HPP
