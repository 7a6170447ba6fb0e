#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ykh {

/// Malformed textual input. Carries the 0-based character offset of the
/// offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A mathematical precondition was violated (order mismatch, index out of
/// range, non-divisibility, empty subset, division by zero, ...).
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A coherence check across connecting maps failed. Always an internal bug.
class CoherenceError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ykh
