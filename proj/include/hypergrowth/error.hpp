#pragma once

#include <stdexcept>
#include <string>

namespace hypergrowth {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidEdge : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class IncompatibleColorings : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Raised by classifiers when a coloring does not have the size a family prescribes.
class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypergrowth
