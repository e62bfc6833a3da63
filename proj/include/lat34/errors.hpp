#pragma once

#include <stdexcept>
#include <string>

namespace lat34 {

// Base for every error raised by the library. The CLI maps subclasses onto
// exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A size or element cap was hit before the computation finished.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class IncompleteTable : public Error {
 public:
  using Error::Error;
};

class NotInvariant : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class NotCubic : public Error {
 public:
  using Error::Error;
};

class NotBiregular : public Error {
 public:
  using Error::Error;
};

class DisconnectedInput : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace lat34
