#pragma once

#include <stdexcept>
#include <string>

namespace homcat {

/// Bad user input or violated operation precondition. CLI maps this to exit 2.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A property the caller asked about fails with a witness. CLI maps this to exit 1
/// when the command's contract says so.
struct property_error : std::runtime_error {
  explicit property_error(const std::string& what) : std::runtime_error(what) {}
};

/// Internal inconsistency: a cross-check that must hold by construction failed
/// (e.g. the Euler identity of a cohomology table). Never valid output.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace homcat
