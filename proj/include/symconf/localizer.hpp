#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "symconf/geom.hpp"
#include "symconf/orientation_assignment.hpp"
#include "symconf/symmetry.hpp"
#include "symconf/verify.hpp"

namespace symconf {

/// Local search parameters. Generator: std::mt19937_64, thread t seeded with seed ^ t.
struct SearchParams {
  int threads = 1;
  int topK = 8;
  int ptMovements = 12;
  double minRadius = 1e-4;
  double maxRadius = 0.5;
  double resetRadius = 0.05;
  long restartThreshold = 20000;
  std::uint64_t seed = 1;
  /// Wall-clock budget in seconds; <= 0 means unlimited.
  double budgetSeconds = 60.0;
  /// Outer iterations per thread; 0 means unlimited.
  long long maxIterations = 0;
  /// Recompute (u, F) from scratch after every iteration and compare.
  bool checkBookkeeping = false;

  void validate() const;
};

struct EvalResult {
  long u = 0;
  std::vector<long> F;
};

/// Unsatisfied triples of P against tau, in total and per point (0-based F).
/// Zero float determinants count as unsatisfied.
EvalResult eval(const FloatPointSet& pts, const OrientationAssignment& tau);

/// Per-point counts restricted to unsatisfied triples containing point i
/// (1-based i, 0-based result). Result[i-1] is the number of such triples.
std::vector<long> localEval(const FloatPointSet& pts, const OrientationAssignment& tau, int i);

/// Unsatisfied triples meeting the index set `moved` (1-based), counted once
/// each, together with their per-point incidence (0-based).
EvalResult localEvalSet(const FloatPointSet& pts, const OrientationAssignment& tau, const std::vector<int>& moved);

/// Index into W chosen with probability (W[i] + 1) / sum(W[j] + 1).
template <typename Rng>
std::size_t weightedSampleIndex(const std::vector<long>& W, Rng& rng) {
  if (W.empty()) throw std::invalid_argument("weighted sample over an empty set");
  long long total = 0;
  for (long w : W) {
    if (w < 0) throw std::invalid_argument("negative weight");
    total += w + 1;
  }
  std::uniform_int_distribution<long long> pick(0, total - 1);
  long long r = pick(rng);
  for (std::size_t x = 0; x < W.size(); ++x) {
    r -= W[x] + 1;
    if (r < 0) return x;
  }
  return W.size() - 1;
}

template <typename T, typename Rng>
const T& weightedSample(const std::vector<T>& A, const std::vector<long>& W, Rng& rng) {
  if (A.size() != W.size()) throw std::invalid_argument("weighted sample size mismatch");
  return A[weightedSampleIndex(W, rng)];
}

/// Shared table of the best pointsets found so far, sorted by unsat count.
class Leaderboard {
 public:
  explicit Leaderboard(int topK) : topK_(topK) {}
  /// Inserts if the table has room or u beats the worst entry.
  void offer(const FloatPointSet& pts, long u);
  /// Entry sampled with weight (maxUnsat - unsat), smoothed by +1.
  std::optional<FloatPointSet> sample(std::mt19937_64& rng) const;
  std::optional<long> bestUnsat() const;
  std::optional<std::pair<FloatPointSet, long>> best() const;
  std::size_t size() const;

 private:
  int topK_;
  mutable std::mutex mu_;
  std::vector<std::pair<FloatPointSet, long>> entries_;
};

struct RealizeResult {
  bool success = false;
  /// The realization on success, else the best pointset found.
  FloatPointSet points;
  /// Certified exact coordinates (success only).
  RationalPointSet exact;
  long bestUnsat = 0;
  double seconds = 0.0;
  long long iterations = 0;
  long long restarts = 0;
  /// Denominator bound used for the certified snap; 0 means exact doubles.
  long long snapDenominator = 0;
};

/// Local search realizer. With a symmetry, only one point per orbit is free
/// and its orbit follows by rotation about the origin; a center point is
/// pinned at the origin. Success is reported only after exact certification.
RealizeResult realize(const OrientationAssignment& tau, const SearchParams& params,
                      const std::optional<SFoldSymmetry>& sym = std::nullopt);

/// Tries denominators 1e6, 1e9, 1e12 and then the exact doubles; returns the
/// first rational snap whose orientations match tau exactly.
std::optional<std::pair<RationalPointSet, long long>> certifiedSnap(const FloatPointSet& pts,
                                                                    const OrientationAssignment& tau);

}  // namespace symconf
