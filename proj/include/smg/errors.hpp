#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace smg {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates an input contract (non-unit vector, bad index, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Coincident or antipodal points where a direction is required.
class DegenerateGeometry : public Error {
 public:
  using Error::Error;
};

/// The graph cannot be traced into faces. `vertex()` names the offender
/// when one exists, otherwise it is -1.
class EmbeddingError : public Error {
 public:
  EmbeddingError(const std::string& what, int vertex = -1)
      : Error(what), vertex_(vertex) {}
  int vertex() const { return vertex_; }

 private:
  int vertex_;
};

/// Gauss-Newton failure. Carries the max-|residual| history.
class SolverError : public Error {
 public:
  enum class Kind { Singular, NoConvergence, BadJacobian };

  SolverError(Kind kind, const std::string& what, std::vector<double> history)
      : Error(what), kind_(kind), history_(std::move(history)) {}
  Kind kind() const { return kind_; }
  const std::vector<double>& history() const { return history_; }

 private:
  Kind kind_;
  std::vector<double> history_;
};

class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Malformed graph file.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace smg
