#pragma once

#include <stdexcept>
#include <string>

namespace tnncert {

/// Malformed or out-of-range user input (bad rational, index outside 0..n, ...).
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An exponential-time routine was asked to run above its size guard.
class SizeGuardError : public std::length_error {
public:
  using std::length_error::length_error;
};

/// Pivot requested at a position whose triangle is not an A(f,g) instance
/// or whose head weight is nonzero.
class PivotError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A state the certifier's invariants rule out was reached.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A serialized certificate could not be parsed.
class MalformedCertificate : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace tnncert
