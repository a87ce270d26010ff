#pragma once

#include <stdexcept>
#include <string>

namespace dee {

/// Malformed textual input (edge list, graph6, CLI ranges).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (disconnected graph, n too small, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// QL iteration did not converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed quantity contradicts a structural fact it must agree with.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dee
