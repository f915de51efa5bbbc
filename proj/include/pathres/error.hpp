#pragma once

#include <stdexcept>
#include <string>

namespace pathres {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A file could not be read or written.
class IoError : public Error {
public:
  using Error::Error;
};

/// Input data, parameters or configuration violate a contract
/// (bad weights, preset/network length mismatch, malformed grids, ...).
class ValidationError : public Error {
public:
  using Error::Error;
};

} // namespace pathres
