#pragma once

#include <stdexcept>
#include <string>

namespace sna {

// Base for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad user input: malformed files, out-of-range parameters, unknown names.
// The CLI maps these to exit code 1; anything else is an internal error.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

// Malformed document (XML, CSV, JSON); carries the 1-based line number.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, int line)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Structurally valid document that does not match the supported schema
// (e.g. a directed GraphML graph).
class SchemaError : public InputError {
 public:
  explicit SchemaError(const std::string& what) : InputError(what) {}
};

// Simple-graph precondition violated (duplicate node, self-loop, parallel
// edge reaching freeze()).
class IntegrityError : public InputError {
 public:
  explicit IntegrityError(const std::string& what) : InputError(what) {}
};

// Metric undefined on this graph (eigenvector centrality on an edgeless one).
class DegenerateGraphError : public InputError {
 public:
  explicit DegenerateGraphError(const std::string& what) : InputError(what) {}
};

class IoError : public InputError {
 public:
  explicit IoError(const std::string& what) : InputError(what) {}
};

}  // namespace sna
