#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace forumlens {

/// Broad failure classes; the CLI maps these onto exit codes.
enum class ErrorKind { Config, Data, Numerical };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string name, const std::string& what)
      : std::runtime_error(what), kind_(kind), name_(std::move(name)) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Stable machine-readable error name, e.g. "ParseError".
  const std::string& name() const noexcept { return name_; }

 private:
  ErrorKind kind_;
  std::string name_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorKind::Config, "ConfigError", what) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error(ErrorKind::Data, "ParseError", "line " + std::to_string(line) + ": " + reason),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class InvariantViolation : public Error {
 public:
  InvariantViolation(std::string thread_id, const std::string& reason)
      : Error(ErrorKind::Data, "InvariantViolation", "thread '" + thread_id + "': " + reason),
        thread_id_(std::move(thread_id)) {}
  const std::string& thread_id() const noexcept { return thread_id_; }

 private:
  std::string thread_id_;
};

class EmptyCorpus : public Error {
 public:
  explicit EmptyCorpus(const std::string& what = "no tokens to count")
      : Error(ErrorKind::Data, "EmptyCorpus", what) {}
};

class MissingClass : public Error {
 public:
  explicit MissingClass(std::string course_id)
      : Error(ErrorKind::Data, "MissingClass",
              "training data for '" + course_id + "' lacks a positive or a negative example"),
        course_id_(std::move(course_id)) {}
  const std::string& course_id() const noexcept { return course_id_; }

 private:
  std::string course_id_;
};

class DomainMismatch : public Error {
 public:
  explicit DomainMismatch(const std::string& what) : Error(ErrorKind::Data, "DomainMismatch", what) {}
};

class DegenerateDesign : public Error {
 public:
  explicit DegenerateDesign(const std::string& what)
      : Error(ErrorKind::Numerical, "DegenerateDesign", what) {}
};

class RankDeficient : public Error {
 public:
  explicit RankDeficient(std::vector<std::string> columns)
      : Error(ErrorKind::Numerical, "RankDeficient", describe(columns)), columns_(std::move(columns)) {}
  const std::vector<std::string>& columns() const noexcept { return columns_; }

 private:
  static std::string describe(const std::vector<std::string>& cols) {
    std::string s = "design matrix is rank deficient; dependent columns:";
    for (const auto& c : cols) s += " " + c;
    return s;
  }
  std::vector<std::string> columns_;
};

class SampleSizeError : public Error {
 public:
  explicit SampleSizeError(const std::string& what)
      : Error(ErrorKind::Numerical, "SampleSizeError", what) {}
};

class DegenerateGroup : public Error {
 public:
  explicit DegenerateGroup(const std::string& what)
      : Error(ErrorKind::Numerical, "DegenerateGroup", what) {}
};

}  // namespace forumlens
