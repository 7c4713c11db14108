#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tuza {

/// Input text could not be turned into a graph or hypergraph.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An operation was called on an input outside its domain
/// (non-linear hypergraph, cyclic input to the acyclic solver, unknown id, ...).
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact oracle hit one of its caps. Never accompanied by a partial answer.
class budget_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tuza
