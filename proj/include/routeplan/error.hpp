#pragma once

#include <stdexcept>
#include <string>

namespace routeplan {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent graph/config/report document.
class ParseError : public Error {
 public:
  using Error::Error;
};

class GenerationFailure : public Error {
 public:
  using Error::Error;
};

class InitializationFailure : public Error {
 public:
  using Error::Error;
};

/// Route metrics requested for a route that uses a non-edge.
class MetricsUndefined : public Error {
 public:
  using Error::Error;
};

class OracleSizeError : public Error {
 public:
  using Error::Error;
};

}  // namespace routeplan
