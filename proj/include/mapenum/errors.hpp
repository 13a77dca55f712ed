#pragma once

#include <stdexcept>
#include <string>

namespace mapenum {

// Rejected degree profile or malformed profile text.
class ProfileError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A 64-bit count or total would wrap.
class OverflowError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Internal consistency violation detected mid-run (never expected on valid input).
class EnumerationError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace mapenum
