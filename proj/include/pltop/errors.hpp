#pragma once

#include <stdexcept>
#include <string>

namespace pltop {

// Base for everything this library throws on purpose.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: bad dimensions, bad file contents, unknown names.
struct input_error : error {
  explicit input_error(const std::string& what) : error(what) {}
};

// A documented operation precondition does not hold for the given data.
struct precondition_error : error {
  explicit precondition_error(const std::string& what) : error(what) {}
};

// An enumeration limit was exceeded; the caller must raise the cap explicitly.
struct cap_exceeded : error {
  explicit cap_exceeded(const std::string& what) : error(what) {}
};

// A geometric degeneracy that the caller is expected to retry around
// (cone apex on a bad locus, non-transversal intersection, ...).
struct degeneracy_error : error {
  explicit degeneracy_error(const std::string& what) : error(what) {}
};

// Something the underlying theory says cannot happen did happen.
// Carries reproduction data; treated as a bug-or-counterexample alarm.
struct alarm_error : error {
  explicit alarm_error(const std::string& what) : error(what) {}
};

}  // namespace pltop
