#pragma once

#include <stdexcept>
#include <string>

namespace qdiscord {

enum class Invariant { hermitian, unit_trace, positive_semidefinite };

inline const char* to_string(Invariant inv) {
  switch (inv) {
    case Invariant::hermitian:
      return "hermitian";
    case Invariant::unit_trace:
      return "unit trace";
    case Invariant::positive_semidefinite:
      return "positive semidefinite";
  }
  return "unknown";
}

/// An operator failed one of the density-matrix invariants.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(Invariant violated, const std::string& detail)
      : std::runtime_error(std::string("violates ") + to_string(violated) +
                           ": " + detail),
        violated_(violated) {}

  Invariant violated() const noexcept { return violated_; }

 private:
  Invariant violated_;
};

/// A scalar argument fell outside its admissible range.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A Kraus channel is empty or not trace preserving.
class ChannelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sweep specification is malformed.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed quantity left its mathematically admissible range by more than
/// rounding can explain.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qdiscord
