#pragma once

#include <stdexcept>
#include <string>

namespace conj3m {

// Malformed input files, bad descriptors, unparsable words.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A word mentions a generator the alphabet does not have.
class UnknownGeneratorError : public InputError {
 public:
  explicit UnknownGeneratorError(const std::string& what) : InputError(what) {}
};

// A word is not over the backend's alphabet.
class UnsupportedWordError : public std::runtime_error {
 public:
  explicit UnsupportedWordError(const std::string& what)
      : std::runtime_error(what) {}
};

// An operation was invoked on a context lacking the needed capability.
// `field` names the absent piece.
class MissingCapabilityError : public std::runtime_error {
 public:
  explicit MissingCapabilityError(const std::string& field)
      : std::runtime_error("missing capability: " + field), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// A caller-guaranteed precondition failed a runtime check.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what)
      : std::runtime_error(what) {}
};

// A budgeted search ran out before reaching a verdict.
class ExhaustedError : public std::runtime_error {
 public:
  explicit ExhaustedError(long budget)
      : std::runtime_error("search budget exhausted (" +
                           std::to_string(budget) + ")"),
        budget_(budget) {}
  long budget() const { return budget_; }

 private:
  long budget_;
};

}  // namespace conj3m
