#pragma once

#include <stdexcept>
#include <string>

namespace metrikos {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad scalar arguments: non-finite values, nonpositive radii, empty sets.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

/// A point does not belong to the set a metric is defined on.
class CarrierError : public Error {
 public:
  using Error::Error;
};

/// Two graph vertices lie in different components.
class InfiniteDistanceError : public Error {
 public:
  using Error::Error;
};

/// A construction has no unique answer (every candidate is extremal).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Malformed external input (CSV, JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace metrikos
