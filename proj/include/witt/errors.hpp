#pragma once

#include <stdexcept>
#include <string>

namespace witt {

/// Base class for every error raised by the engine.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands of mismatched rank (tuple length differs from the algebra rank).
struct DimensionError : Error {
  using Error::Error;
};

/// Rejected input text; line and column are 1-based.
struct ParseError : Error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int column_)
      : Error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

/// A stated precondition failed (non-alternating r, bad eigenpair data, ...).
struct PremiseError : Error {
  using Error::Error;
};

/// A derivation table does not cover the monomials a request needs.
struct CoverageError : Error {
  using Error::Error;
};

/// Inner solving requested at degree zero, which the solver does not handle.
struct DegreeError : Error {
  using Error::Error;
};

/// Torus values are not consistent with any single inner generator.
struct ConsistencyError : Error {
  int index;  // offending basis index, 0-based
  ConsistencyError(const std::string& msg, int index_)
      : Error(msg), index(index_) {}
};

/// Witness requested for the zero tensor.
struct NoWitnessError : Error {
  using Error::Error;
};

/// Candidate enumeration hit the escalation cap without a verified witness.
struct WitnessCapError : Error {
  int cap;
  WitnessCapError(const std::string& msg, int cap_) : Error(msg), cap(cap_) {}
};

}  // namespace witt
