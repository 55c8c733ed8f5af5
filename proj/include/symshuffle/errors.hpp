#pragma once

#include <stdexcept>
#include <string>

namespace symshuffle {

// Raised when a request exceeds an enumeration or series-order guard rail.
class GuardExceeded : public std::runtime_error {
 public:
  explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised for a model/operation combination that has no implementation
// (e.g. a cycle index for a mu shuffle).
class Unsupported : public std::runtime_error {
 public:
  explicit Unsupported(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace symshuffle
