#pragma once

#include <stdexcept>
#include <string>

namespace pricedq {

// Bad argument or malformed configuration supplied by the caller.
class InputError : public std::invalid_argument {
public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Request exceeds an exact-computation limit (e.g. too many free coordinates).
class CapacityError : public std::runtime_error {
public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Operation invalid in the current state (e.g. argmax with no free coordinate).
class StateError : public std::logic_error {
public:
  explicit StateError(const std::string& what) : std::logic_error(what) {}
};

// Malformed function-spec or strategy-tree document.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), location_(where) {}
  const std::string& location() const { return location_; }

private:
  std::string location_;
};

}  // namespace pricedq
