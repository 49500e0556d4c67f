#pragma once

#include <stdexcept>
#include <string>

namespace qseal {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionError : Error {
  using Error::Error;
};

struct NormalizationError : Error {
  using Error::Error;
};

struct NotPsdError : Error {
  using Error::Error;
};

struct CompletenessError : Error {
  using Error::Error;
};

struct RuleKindError : Error {
  using Error::Error;
};

struct EncodingError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct ProtocolError : Error {
  using Error::Error;
};

// Thrown when a seal encoding is entangled across the owner/reader split and
// therefore has no device-picture counterpart. Carries the offending entry
// and its second Schmidt coefficient.
struct NotProductError : Error {
  NotProductError(const std::string& what, int value, double second_coefficient)
      : Error(what), value(value), second_coefficient(second_coefficient) {}
  int value;
  double second_coefficient;
};

struct ScopeError : Error {
  using Error::Error;
};

struct InfeasibleError : Error {
  using Error::Error;
};

}  // namespace qseal
