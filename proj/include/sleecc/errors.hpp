#ifndef SLEECC_ERRORS_HPP
#define SLEECC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sleecc {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class UnknownAtom : public Error {
public:
  explicit UnknownAtom(std::string name)
      : Error("unknown atom '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

class TooManyAtoms : public Error {
public:
  TooManyAtoms(std::size_t count, std::size_t limit)
      : Error("brute-force enumeration over " + std::to_string(count) +
              " atoms exceeds the limit of " + std::to_string(limit)) {}
};

class SyntaxError : public Error {
public:
  SyntaxError(std::size_t line, std::size_t column, std::string expected, std::string found)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": expected " + expected +
              ", found " + found),
        line_(line), column_(column), expected_(std::move(expected)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

class UndeclaredAtom : public Error {
public:
  explicit UndeclaredAtom(std::string name, std::string where = {})
      : Error((where.empty() ? std::string() : where + ": ") + "undeclared atom '" + name + "'"),
        name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

class DuplicateDeclaration : public Error {
public:
  explicit DuplicateDeclaration(std::string name, std::string where = {})
      : Error((where.empty() ? std::string() : where + ": ") + "atom '" + name +
              "' is declared more than once"),
        name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

class NotSensed : public Error {
public:
  explicit NotSensed(std::string name)
      : Error("fact '" + name + "' is an obligation atom; only sensed atoms can be facts"),
        name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

class ContradictoryFacts : public Error {
public:
  explicit ContradictoryFacts(std::string name)
      : Error("facts assert both '" + name + "' and 'not " + name + "'"), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

class InconsistentRuleSet : public Error {
public:
  InconsistentRuleSet() : Error("rule set is inconsistent; no obligation can be derived") {}
};

class NotEligible : public Error {
public:
  explicit NotEligible(const std::string& reason) : Error("not Horn-eligible: " + reason) {}
};

class NotExportable : public Error {
public:
  explicit NotExportable(const std::string& reason) : Error("not exportable: " + reason) {}
};

} // namespace sleecc

#endif // SLEECC_ERRORS_HPP
