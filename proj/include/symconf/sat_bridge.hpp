#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symconf/encoder.hpp"
#include "symconf/orientation_assignment.hpp"

namespace symconf {

enum class SolveStatus { Sat, Unsat, Unknown };

std::string toString(SolveStatus s);

/// Raised for solver launch failures and malformed solver output.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolverResult {
  SolveStatus status = SolveStatus::Unknown;
  /// Indexed by variable id; entry 0 unused. Present iff status is Sat.
  std::optional<std::vector<bool>> model;
  double wallSeconds = 0.0;
  int exitCode = 0;
  std::string stderrText;
};

/// Solver used when none is given: $SYMCONF_SOLVER, else the bundled build.
std::string defaultSolverCommand();

/// Runs `<solverCmd> <cnfPath>` through /bin/sh and parses competition
/// output. timeoutSeconds <= 0 disables the limit; on expiry the solver is
/// killed and the status is Unknown.
SolverResult solveExternal(const std::string& cnfPath, const std::string& solverCmd, double timeoutSeconds = 0.0);

/// Convenience wrapper: writes the clauses to a temporary DIMACS file first.
SolverResult solveFormula(const CnfFormula& formula, const std::string& solverCmd, double timeoutSeconds = 0.0);

/// Expands a model over representative variables into a total assignment.
/// Throws std::runtime_error("inconsistent model") if a collinear-mode triple
/// does not have exactly one of its a, b, c literals true.
OrientationAssignment decodeModel(const std::vector<bool>& model, const VarTable& vars,
                                  const LiteralClassTable& classes);
OrientationAssignment decodeModel(const std::vector<bool>& model, const CnfFormula& formula);

struct EnumerationResult {
  /// One entry per projected model, in discovery order. For formulas without
  /// a class table (no orientation decoding) this stays empty.
  std::vector<OrientationAssignment> assignments;
  /// Projected models as raw value vectors over the projection.
  std::vector<std::vector<bool>> projections;
  /// True when the final solver call reported unsat.
  bool complete = false;
  /// True when a solver call hit the timeout.
  bool timedOut = false;
  std::size_t solverCalls = 0;
  double wallSeconds = 0.0;
};

struct EnumerationOptions {
  /// Defaults to every orientation class representative.
  std::vector<int> projection;
  std::string solverCmd;
  /// 0 means no limit.
  std::size_t limit = 0;
  /// Per solver call; <= 0 disables.
  double timeoutSeconds = 0.0;
  /// Working DIMACS path; a temporary file when empty.
  std::string workPath;
};

/// All models distinct on the projection, found by repeated solving with
/// appended blocking clauses. Every model is re-checked against the clauses.
EnumerationResult enumerateAll(const CnfFormula& formula, const EnumerationOptions& options);

/// Writes one assignment file per entry (<dir>/solution_0001.txt, ...) and
/// an index.lst listing them in order.
void writeAssignmentDirectory(const std::string& dir, const std::vector<OrientationAssignment>& assignments);
std::vector<OrientationAssignment> readAssignmentDirectory(const std::string& dir);

}  // namespace symconf
