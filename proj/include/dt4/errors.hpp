#pragma once

#include <stdexcept>
#include <string>

namespace dt4 {

/// A rational character failed to divide out exactly; signals a malformed
/// vertex or edge expression upstream.
struct NotDivisible : std::runtime_error {
  explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

/// An Euler-class functor was applied to a class with nonzero fixed part.
struct FixedPartPresent : std::runtime_error {
  explicit FixedPartPresent(const std::string& what)
      : std::runtime_error(what) {}
};

/// A vertex/edge graph violates the Calabi-Yau closure conditions.
struct InvalidGeometry : std::runtime_error {
  explicit InvalidGeometry(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace dt4
