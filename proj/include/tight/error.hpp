#pragma once

#include <stdexcept>
#include <string>

namespace tight {

/// Error categories. The CLI maps these onto exit codes.
enum class ErrorKind {
  Parse,           // malformed presentation / family text
  BadParameters,   // family or search parameters outside their valid range
  NotNormal,       // quotient requested by a non-normal cyclic subgroup
  NotAdmissible,   // witness requested for a type with no tight chiral polyhedron
  Overflow,        // coset enumeration exceeded its coset bound
  BudgetExceeded,  // search or closure exceeded a configured budget
  Internal,        // an internal consistency check failed
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : Error(ErrorKind::Parse,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace tight
