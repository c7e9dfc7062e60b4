#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "symconf/geom.hpp"

namespace symconf {

/// Sorts (i, j, k) in place and returns the permutation parity (+1 even, -1 odd).
int sortTriple(int& i, int& j, int& k);

/// Total map from index triples (1-based) to orientations: the order type of
/// a point set in combinatorial form.
class OrientationAssignment {
 public:
  OrientationAssignment() = default;
  explicit OrientationAssignment(int n);

  int n() const { return n_; }

  /// Any ordering of three distinct indices; odd permutations flip the sign.
  Orientation get(int i, int j, int k) const;
  void set(int i, int j, int k, Orientation o);
  bool isSet(int i, int j, int k) const;

  /// Every triple assigned.
  bool isTotal() const;
  bool hasCollinearTriple() const;

  friend bool operator==(const OrientationAssignment& l, const OrientationAssignment& r) {
    return l.n_ == r.n_ && l.values_ == r.values_;
  }

  template <typename C>
  static OrientationAssignment fromPoints(const PointSet<C>& pts) {
    const int n = static_cast<int>(pts.size());
    OrientationAssignment out(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) out.set(i, j, k, orient(pts[i - 1], pts[j - 1], pts[k - 1]));
    return out;
  }

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i - 1) * n_ + (j - 1)) * n_ + (k - 1);
  }
  void checkIndices(int i, int j, int k) const;

  static constexpr std::int8_t kUnset = 2;
  int n_ = 0;
  std::vector<std::int8_t> values_;
};

/// Assignment file: one line "i j k v" per triple with i < j < k, v in {-1, 0, 1}.
/// Lines starting with '#' are comments.
OrientationAssignment readAssignment(std::istream& in);
OrientationAssignment readAssignmentFile(const std::string& path);
void writeAssignment(std::ostream& out, const OrientationAssignment& tau);
void writeAssignmentFile(const std::string& path, const OrientationAssignment& tau);

}  // namespace symconf
