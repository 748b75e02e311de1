#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hardy {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A set-algebra operation received an atom where a set-node is required.
class AtomOperand : public Error {
 public:
  AtomOperand(const std::string& operation, const std::string& operand);
};

/// Malformed set literal or evaluator expression.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::string expected, std::string found);

  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

class DuplicateElement : public Error {
 public:
  explicit DuplicateElement(std::vector<std::string> renderings);
  const std::vector<std::string>& renderings() const noexcept { return renderings_; }

 private:
  std::vector<std::string> renderings_;
};

class EmptySampleSpace : public Error {
 public:
  EmptySampleSpace();
};

/// A set whose members are not all sample points; i.e. it is not in the field.
class NotAnEvent : public Error {
 public:
  explicit NotAnEvent(std::vector<std::string> missing);
  const std::vector<std::string>& missing() const noexcept { return missing_; }

 private:
  std::vector<std::string> missing_;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class SampleSpaceTooLarge : public Error {
 public:
  SampleSpaceTooLarge(std::size_t size, std::size_t limit);
};

class InvalidWeights : public Error {
 public:
  using Error::Error;
};

class InvalidDepth : public Error {
 public:
  using Error::Error;
};

class NonDistinctAtoms : public Error {
 public:
  NonDistinctAtoms(std::string message, int first, int second, bool cyclic_condition);

  /// One-based positions of the colliding pair, first < second.
  int first() const noexcept { return first_; }
  int second() const noexcept { return second_; }
  /// True when the pair is one of (x1,x2), (x2,x3), (x3,x4), (x4,x1).
  bool violates_cyclic_condition() const noexcept { return cyclic_; }

 private:
  int first_;
  int second_;
  bool cyclic_;
};

class NonUnitaryConvention : public Error {
 public:
  explicit NonUnitaryConvention(double deviation);
};

/// Type mismatch during expression evaluation (e.g. a number where a set is needed).
class EvalError : public Error {
 public:
  EvalError(std::size_t offset, const std::string& message);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace hardy
