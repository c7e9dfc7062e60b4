#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symconf/geom.hpp"
#include "symconf/orientation_assignment.hpp"
#include "symconf/symmetry.hpp"

namespace symconf {

/// Maximal collinear index sets with at least three points.
struct LineFamily {
  int n = 0;
  std::vector<std::vector<int>> lines;

  /// Pairs of indices not contained together in any listed line.
  std::vector<std::array<int, 2>> uncoveredPairs() const;
};

/// Throws std::invalid_argument("inconsistent collinearity") when the zero
/// triples of tau are not closed under collinearity transitivity.
LineFamily extractLines(const OrientationAssignment& tau);

enum class SlotKind { Free, OnLine, Dependent, Pinned };

struct PlanStep {
  int point = 0;  // 1-based
  SlotKind kind = SlotKind::Free;
  /// Defining points of the carrier line(s): OnLine uses lineA, Dependent both.
  std::array<int, 2> lineA{0, 0};
  std::array<int, 2> lineB{0, 0};
  int lineIndexA = -1;
  int lineIndexB = -1;
  /// Offset of this step's parameters in the parameter vector.
  int firstParam = 0;
};

/// Resolution order for the points. Each step places one point; under a
/// symmetry it also places the rotations of that point onto its orbit.
struct DependencyPlan {
  int n = 0;
  int numParams = 0;
  std::vector<PlanStep> steps;
  std::optional<SFoldSymmetry> sym;

  int countKind(SlotKind k) const;
  int dependentCount() const { return countKind(SlotKind::Dependent); }
  int independentCount() const { return countKind(SlotKind::Free) + countKind(SlotKind::OnLine); }
};

DependencyPlan planDependencies(const LineFamily& lines, const std::optional<SFoldSymmetry>& sym = std::nullopt);

struct ObjectiveParams {
  /// Coordinate bound B for free coordinates.
  double bound = 10.0;
  /// Bound on the position parameter along a carrier line.
  double lineParamBound = 3.0;
  /// Relative distance treated as exactly on a line (rounding noise).
  double onLineTolerance = 1e-9;
  /// Relative distance below which a side is considered unreliable.
  double bandTolerance = 1e-4;
};

/// Float positions for a parameter vector; nullopt if two defining lines
/// are parallel.
std::optional<FloatPointSet> resolvePlan(const DependencyPlan& plan, const std::vector<double>& params);

/// Minimum conservative imbalance over all lines through two points, minus a
/// tie-break fraction counting the lines that attain it. Points within the
/// band of a line they are not exactly on count against the imbalance.
/// Infeasible candidates score -1e9.
double imbalanceObjective(const std::vector<double>& params, const DependencyPlan& plan, const LineFamily& lines,
                          const ObjectiveParams& op = {});

/// Conservative minimum imbalance of a float configuration.
int conservativeImbalance(const FloatPointSet& pts, const ObjectiveParams& op = {}, int* linesAtMin = nullptr);

struct DEParams {
  int populationFactor = 15;
  double fMin = 0.5;
  double fMax = 1.0;
  double crossover = 0.7;
  long long maxGenerations = 0;  // 0 means unlimited
  double budgetSeconds = 600.0;  // <= 0 means unlimited
  std::uint64_t seed = 1;
};

struct DEResult {
  std::vector<double> best;
  double bestScore = -1e9;
  long long generations = 0;
  long long evaluations = 0;
  double seconds = 0.0;
};

/// Differential evolution (rand/1/bin) maximizing the objective; stops once
/// `accept` returns true for the incumbent, or on budget exhaustion.
DEResult optimizeImbalance(const DependencyPlan& plan, const LineFamily& lines, int target, const DEParams& de,
                           const ObjectiveParams& op = {},
                           const std::function<bool(const std::vector<double>&, double)>& accept = nullptr);

/// Exact configuration: parameters snapped to rationals with denominator at
/// most maxDen, dependent points re-derived by exact intersection, orbits by
/// exact rotation. Throws std::runtime_error if two defining lines become
/// parallel or two points coincide.
ExactPointSet snapToExact(const std::vector<double>& params, const DependencyPlan& plan, long long maxDen = 1000000);

struct CollinearRealizeResult {
  bool success = false;
  ExactPointSet exact;
  int exactDelta = 0;
  double bestScore = -1e9;
  /// Family lines whose points are exactly collinear in the result.
  int exactLines = 0;
  int familyLines = 0;
  int dependentPoints = 0;
  double seconds = 0.0;
  long long generations = 0;
};

/// Full pipeline: lines, plan, optimization, exact snapping and certification
/// of the minimum imbalance.
CollinearRealizeResult realizeCollinear(const OrientationAssignment& tau, int target, const DEParams& de,
                                        const std::optional<SFoldSymmetry>& sym = std::nullopt,
                                        const ObjectiveParams& op = {});

}  // namespace symconf
