#pragma once

#include <stdexcept>
#include <string>

namespace cardyfrob {

/// Malformed or inconsistent user input (bad permutation, unknown label, invalid surface).
class InputError : public std::invalid_argument {
public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured size bound (group order, tuple enumeration) was exceeded.
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal invariant was violated; indicates a bug upstream, not bad input.
class LogicError : public std::logic_error {
public:
  explicit LogicError(const std::string& what) : std::logic_error(what) {}
};

} // namespace cardyfrob
