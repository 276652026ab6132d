#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specx {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (graph6 lines, family specs, edge lists).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input violates a mathematical precondition (disconnected, irregular,
/// wrong number of eigenvalues, inconsistent intersection array, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraph : public PreconditionError {
 public:
  DisconnectedGraph(std::size_t u, std::size_t v)
      : PreconditionError("graph is disconnected: no path between vertex " +
                          std::to_string(u) + " and vertex " +
                          std::to_string(v)),
        u_(u),
        v_(v) {}

  std::size_t u() const { return u_; }
  std::size_t v() const { return v_; }

 private:
  std::size_t u_;
  std::size_t v_;
};

/// A floating point computation failed to reach its accuracy target.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public NumericalError {
 public:
  ConvergenceError(const std::string& what, double residual)
      : NumericalError(what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}

  double residual() const { return residual_; }

 private:
  double residual_;
};

}  // namespace specx
