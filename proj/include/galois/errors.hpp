#pragma once

#include <stdexcept>
#include <string>

namespace galois {

// A numeric subroutine hit the precision cap before it could decide a
// candidate. Never a wrong answer, always a loud one.
class UndecidedError : public std::runtime_error {
  public:
    explicit UndecidedError(const std::string& what) : std::runtime_error(what) {}
};

// Input exceeds a configured size cap (degree, group order, table size).
class CapacityError : public std::runtime_error {
  public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency assertion failed. These guard statements the
// theory proves, so a throw here means an engine bug, not bad input.
class InvariantViolation : public std::logic_error {
  public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}
    size_t position() const { return position_; }

  private:
    size_t position_;
};

}  // namespace galois
