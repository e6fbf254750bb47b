#pragma once

#include <stdexcept>
#include <string>

namespace eispole {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An inadmissible root-system kind or an unparsable type string.
class ConfigurationError : public Error {
public:
  using Error::Error;
};

/// A well-typed argument outside its domain (node out of range, q <= 0, ...).
class ArgumentError : public Error {
public:
  using Error::Error;
};

/// A weight multiset that is not the weight multiset of an sl2-module.
class NotARepresentationError : public Error {
public:
  using Error::Error;
};

/// A constant factor that vanishes identically.
class DegenerateConfigurationError : public Error {
public:
  using Error::Error;
};

/// A cross-module identity that must hold by construction failed.
class InternalConsistencyError : public Error {
public:
  using Error::Error;
};

/// Weyl group enumeration would exceed the configured cap.
class SizeError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

} // namespace eispole
