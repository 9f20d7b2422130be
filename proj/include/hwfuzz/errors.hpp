#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hwfuzz {

// All tool errors derive from Error and carry a stable category string
// used by the CLI's `error[<category>]:` prefix and by tests.
class Error : public std::runtime_error {
public:
  Error(std::string category, const std::string& message)
      : std::runtime_error(message), category_(std::move(category)) {}

  const std::string& category() const { return category_; }

private:
  std::string category_;
};

class ParseError : public Error {
public:
  enum class Category { Syntax, UnsupportedConstruct, DuplicateName, UnresolvedIdentifier };

  ParseError(Category cat, int line, int column, const std::string& message,
             std::vector<std::string> expected = {})
      : Error(category_name(cat), format(line, column, message)),
        cat_(cat),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  Category cat() const { return cat_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

  static std::string category_name(Category cat) {
    switch (cat) {
      case Category::Syntax: return "syntax";
      case Category::UnsupportedConstruct: return "unsupported-construct";
      case Category::DuplicateName: return "duplicate-name";
      case Category::UnresolvedIdentifier: return "unresolved-identifier";
    }
    return "syntax";
  }

private:
  static std::string format(int line, int column, const std::string& message) {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }

  Category cat_;
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

class SpecError : public Error {
public:
  enum class Category {
    NoSuchModule,
    NoClockFound,
    NoResetFound,
    ClockResetCollision,
    Malformed,
    SchemaViolation,
  };

  SpecError(Category cat, const std::string& message)
      : Error(category_name(cat), message), cat_(cat) {}

  Category cat() const { return cat_; }

  static std::string category_name(Category cat) {
    switch (cat) {
      case Category::NoSuchModule: return "no-such-module";
      case Category::NoClockFound: return "no-clock-found";
      case Category::NoResetFound: return "no-reset-found";
      case Category::ClockResetCollision: return "clock-reset-collision";
      case Category::Malformed: return "malformed";
      case Category::SchemaViolation: return "schema-violation";
    }
    return "malformed";
  }

private:
  Category cat_;
};

class ElaborationError : public Error {
public:
  enum class Category { CombCycle, MissingModule, PortConnectionMismatch, WidthMismatch };

  ElaborationError(Category cat, const std::string& message)
      : Error(category_name(cat), message), cat_(cat) {}

  Category cat() const { return cat_; }

  static std::string category_name(Category cat) {
    switch (cat) {
      case Category::CombCycle: return "comb-cycle";
      case Category::MissingModule: return "missing-module";
      case Category::PortConnectionMismatch: return "port-connection-mismatch";
      case Category::WidthMismatch: return "width-mismatch";
    }
    return "width-mismatch";
  }

private:
  Category cat_;
};

class ConfigError : public Error {
public:
  enum class Category { Parse, UnknownKey, InvariantViolation };

  ConfigError(Category cat, const std::string& message)
      : Error(category_name(cat), message), cat_(cat) {}

  Category cat() const { return cat_; }

  static std::string category_name(Category cat) {
    switch (cat) {
      case Category::Parse: return "parse";
      case Category::UnknownKey: return "unknown-key";
      case Category::InvariantViolation: return "invariant-violation";
    }
    return "parse";
  }

private:
  Category cat_;
};

class GenError : public Error {
public:
  explicit GenError(const std::string& message) : Error("undecodable", message) {}
};

class MergeError : public Error {
public:
  enum class Category { NetlistMismatch, CorruptSnapshot };

  MergeError(Category cat, const std::string& message)
      : Error(category_name(cat), message), cat_(cat) {}

  Category cat() const { return cat_; }

  static std::string category_name(Category cat) {
    switch (cat) {
      case Category::NetlistMismatch: return "netlist-mismatch";
      case Category::CorruptSnapshot: return "corrupt-snapshot";
    }
    return "corrupt-snapshot";
  }

private:
  Category cat_;
};

}  // namespace hwfuzz
