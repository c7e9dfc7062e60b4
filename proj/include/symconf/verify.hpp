#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "symconf/geom.hpp"
#include "symconf/orientation_assignment.hpp"
#include "symconf/symmetry.hpp"

namespace symconf {

using RationalPointSet = PointSet<Rational>;

struct Violation {
  TripleKey triple;
  Orientation expected = Orientation::Collinear;
  Orientation actual = Orientation::Collinear;
};

struct CertifyResult {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Exact comparison of every triple orientation of P against tau.
CertifyResult certify(const RationalPointSet& pts, const OrientationAssignment& tau);
CertifyResult certify(const ExactPointSet& pts, const OrientationAssignment& tau);

/// Best continued-fraction convergent of x with denominator <= maxDen.
Rational snapToRational(double x, long long maxDen);
RationalPointSet snapFloatToRational(const FloatPointSet& pts, long long maxDen);
/// Every double is a dyadic rational; this returns it exactly.
RationalPointSet exactRational(const FloatPointSet& pts);
ExactPointSet toQuad(const RationalPointSet& pts);

/// Orientation assignment read off exactly.
OrientationAssignment orientationsOf(const ExactPointSet& pts);
OrientationAssignment orientationsOf(const RationalPointSet& pts);
/// Orientation assignment of high-precision points; throws std::runtime_error
/// if some determinant is too close to zero to decide its sign.
OrientationAssignment orientationsOf(const std::vector<HighPoint>& pts);

/// Four points i < j < k < l are in convex position iff the product of their
/// four triple orientations is positive.
bool convexQuad(const OrientationAssignment& tau, int i, int j, int k, int l);

/// Number of k-subsets in convex position (all 4-subsets convex). Throws
/// std::invalid_argument("general position required") on collinear triples.
long long countKGons(const OrientationAssignment& tau, int k);
long long countKGons(const ExactPointSet& pts, int k);

struct ImbalanceResult {
  int delta = 0;
  /// A pair of indices spanning a line of minimum imbalance.
  std::array<int, 2> witness{0, 0};
};

/// Minimum over all lines through two points of | #left - #right |.
/// Throws std::invalid_argument("duplicate points") when two points coincide.
ImbalanceResult minImbalance(const ExactPointSet& pts);
ImbalanceResult minImbalance(const OrientationAssignment& tau);

/// Convex hull peeling, each layer as a sorted index list, outermost first.
std::vector<std::vector<int>> convexLayers(const OrientationAssignment& tau);
std::vector<std::vector<int>> convexLayers(const ExactPointSet& pts);

/// True iff tau(i, j, k) = tau(pi(i), pi(j), pi(k)) for every triple.
bool checkCombinatorialSymmetry(const OrientationAssignment& tau, const SFoldSymmetry& sym);
bool checkCombinatorialSymmetry(const ExactPointSet& pts, const SFoldSymmetry& sym);

struct StatsReport {
  int n = 0;
  bool generalPosition = true;
  /// k-gon counts for k = 4..7 (general position only).
  std::array<long long, 4> kGons{0, 0, 0, 0};
  ImbalanceResult imbalance;
  std::vector<std::vector<int>> layers;
  std::optional<bool> symmetric;
  int symmetryOrder = 1;
  std::optional<CertifyResult> certification;
};

StatsReport computeStats(const OrientationAssignment& tau, const std::optional<SFoldSymmetry>& sym = std::nullopt);
/// Human-readable report.
std::string formatReport(const StatsReport& r);
/// key=value lines.
std::string formatSummary(const StatsReport& r);

}  // namespace symconf
