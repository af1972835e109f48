#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace tefields {

/// Invalid parameters or configuration values. Maps to CLI exit code 1.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string key, const std::string& constraint)
      : std::invalid_argument(key + ": " + constraint), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// Malformed configuration text, with 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Adaptive quadrature ran out of panels before meeting its tolerance.
/// Carries the best available estimate. Maps to CLI exit code 2.
class NoConvergence : public std::runtime_error {
 public:
  NoConvergence(double estimate, double error_bound)
      : std::runtime_error(message(estimate, error_bound)),
        estimate_(estimate),
        error_bound_(error_bound) {}

  double estimate() const noexcept { return estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;

  static std::string message(double estimate, double error_bound) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "quadrature did not converge (estimate %.6g, error bound %.3g)",
                  estimate, error_bound);
    return buf;
  }
};

/// The pressure relation is only defined for unit mass.
class UnsupportedMass : public ValidationError {
 public:
  explicit UnsupportedMass(double m) : ValidationError("m", constraint(m)) {}

 private:
  static std::string constraint(double m) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "pressure requires m = 1 (got %g)", m);
    return buf;
  }
};

/// Export layout cannot represent the requested rows.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tefields
