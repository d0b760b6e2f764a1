#pragma once

#include <stdexcept>
#include <string>

namespace dqf {

// Invalid arguments / shape mismatches. The CLI maps these to exit code 2.
class ArgumentError : public std::invalid_argument {
 public:
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

// Numerical precondition failures (non-unit inputs, missing spanning tree,
// rank deficiency, eigensolver breakdown, ...). CLI exit code 3.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

class NonUnitError : public NumericError {
 public:
  explicit NonUnitError(const std::string& what) : NumericError(what) {}
};

class NotSimpleZeroError : public NumericError {
 public:
  explicit NotSimpleZeroError(const std::string& what) : NumericError(what) {}
};

class NoConvergenceError : public NumericError {
 public:
  explicit NoConvergenceError(const std::string& what) : NumericError(what) {}
};

class NoSpanningTreeError : public NumericError {
 public:
  explicit NoSpanningTreeError(const std::string& what) : NumericError(what) {}
};

class RankDeficientError : public NumericError {
 public:
  explicit RankDeficientError(const std::string& what) : NumericError(what) {}
};

class MissingLimitError : public NumericError {
 public:
  explicit MissingLimitError(const std::string& what) : NumericError(what) {}
};

}  // namespace dqf
