#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace latticekit {

/// Broad failure classes. The CLI maps them onto process exit codes.
enum class ErrorCategory {
  validation = 2,
  capacity = 3,
  numerical = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }
  int exit_code() const noexcept { return static_cast<int>(category_); }

 private:
  ErrorCategory category_;
};

class InvalidParameter : public Error {
 public:
  explicit InvalidParameter(const std::string& what)
      : Error(ErrorCategory::validation, what) {}
};

class OutOfRange : public Error {
 public:
  explicit OutOfRange(const std::string& what)
      : Error(ErrorCategory::validation, what) {}
};

class MissingWeight : public Error {
 public:
  explicit MissingWeight(const std::string& what)
      : Error(ErrorCategory::validation, what) {}
};

/// The bound's hypotheses (typically M >= 1) do not hold for the inputs.
class BoundNotApplicable : public Error {
 public:
  explicit BoundNotApplicable(const std::string& what)
      : Error(ErrorCategory::validation, what) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCategory::validation,
              "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class WeightHashMismatch : public Error {
 public:
  explicit WeightHashMismatch(const std::string& what)
      : Error(ErrorCategory::validation, what) {}
};

class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::size_t partial_count = 0)
      : Error(ErrorCategory::capacity, what), partial_count_(partial_count) {}

  std::size_t partial_count() const noexcept { return partial_count_; }

 private:
  std::size_t partial_count_;
};

/// Near-singular systems, significantly negative criteria, degenerate weights.
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what)
      : Error(ErrorCategory::numerical, what) {}
};

/// Warnings go to stderr unless silenced (tests and benchmarks silence them).
void log_warning(const std::string& message);
void set_warnings_enabled(bool enabled);

}  // namespace latticekit
