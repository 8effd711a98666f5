#pragma once

#include <stdexcept>
#include <string>

namespace tourcast {

// Malformed input files, manifests or tour vectors.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Tour construction ran past the last day of the calendar.
struct PlacementError : std::runtime_error {
  explicit PlacementError(const std::string& what) : std::runtime_error(what) {}
};

// Exhaustive enumeration would exceed the configured cap.
struct EnumerationCapError : std::runtime_error {
  explicit EnumerationCapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tourcast
