#pragma once

// Builds the variable assignment induced by a concrete configuration.

#include <array>
#include <cstdio>
#include <string>
#include <functional>
#include <optional>
#include <vector>

#include "symconf/encoder.hpp"
#include "symconf/orientation_assignment.hpp"

namespace testutil {

struct GeometricModel {
  std::vector<bool> values;
  /// False if two members of one class received different values.
  bool consistent = true;
};

/// rank[i] is the position of point i (1-based) in the sweep order.
/// convex(quad) is consulted only when conv variables exist.
inline GeometricModel geometricModel(const symconf::Encoder& e, int numVars, const symconf::OrientationAssignment& tau,
                                     const std::vector<int>& rank,
                                     const std::function<bool(const std::array<int, 4>&)>& convex = {}) {
  using namespace symconf;
  GeometricModel m;
  m.values.assign(static_cast<std::size_t>(numVars) + 1, false);
  std::vector<int> setBy(static_cast<std::size_t>(numVars) + 1, -1);
  auto assign = [&](int lit, bool truth) {
    const int v = std::abs(lit);
    const bool val = (lit > 0) == truth;
    if (setBy[static_cast<std::size_t>(v)] >= 0 && m.values[static_cast<std::size_t>(v)] != val) m.consistent = false;
    setBy[static_cast<std::size_t>(v)] = 1;
    m.values[static_cast<std::size_t>(v)] = val;
  };
  const int n = tau.n();
  const bool collinear = e.spec().mode == PositionMode::CollinearAllowed;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (i == j || j == k || i == k) continue;
        const Orientation o = tau.get(i, j, k);
        assign(e.orientationLit(i, j, k, LitKind::A), o == Orientation::Counterclockwise);
        if (collinear) {
          assign(e.orientationLit(i, j, k, LitKind::B), o == Orientation::Clockwise);
          assign(e.orientationLit(i, j, k, LitKind::C), o == Orientation::Collinear);
        }
      }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) assign(e.orderLit(i, j), rank[static_cast<std::size_t>(i)] < rank[static_cast<std::size_t>(j)]);
  if (convex) {
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        for (int c = b + 1; c <= n; ++c)
          for (int d = c + 1; d <= n; ++d) {
            const std::array<int, 4> q{a, b, c, d};
            assign(e.convLit(q), convex(q));
          }
    // Tseitin auxiliaries of the conv definition follow from the orientations.
    auto lit = [&](int l) { return m.values[static_cast<std::size_t>(std::abs(l))] == (l > 0); };
    for (int id = 1; id <= numVars; ++id) {
      const std::string name = e.vars().name(id);
      const bool isX = name.rfind("convx_", 0) == 0, isY = name.rfind("convy_", 0) == 0;
      if (!isX && !isY) continue;
      int i, j, k, l;
      if (std::sscanf(name.c_str() + 6, "%d_%d_%d_%d", &i, &j, &k, &l) != 4) continue;
      const bool v = isX ? lit(e.orientationLit(i, j, k)) == lit(e.orientationLit(i, j, l))
                         : lit(e.orientationLit(i, k, l)) == lit(e.orientationLit(j, k, l));
      m.values[static_cast<std::size_t>(id)] = v;
    }
  }
  return m;
}

/// Clauses fixing the orientation and order variables of a configuration.
inline std::vector<symconf::Clause> pinClauses(const symconf::Encoder& e, int numVars, const symconf::OrientationAssignment& tau,
                                               const std::vector<int>& rank) {
  const GeometricModel m = geometricModel(e, numVars, tau, rank);
  std::vector<symconf::Clause> out;
  const int n = tau.n();
  auto pin = [&](int lit) {
    const int v = std::abs(lit);
    out.push_back({m.values[static_cast<std::size_t>(v)] ? v : -v});
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      pin(e.orderLit(i, j));
      for (int k = j + 1; k <= n; ++k) {
        pin(e.orientationLit(i, j, k, symconf::LitKind::A));
        if (e.spec().mode == symconf::PositionMode::CollinearAllowed) {
          pin(e.orientationLit(i, j, k, symconf::LitKind::B));
          pin(e.orientationLit(i, j, k, symconf::LitKind::C));
        }
      }
    }
  return out;
}

/// Sweep ranks from lexicographic (x, y) order.
template <typename Pts>
std::vector<int> lexRanks(const Pts& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const auto& p = pts[static_cast<std::size_t>(a)];
    const auto& q = pts[static_cast<std::size_t>(b)];
    return p.x < q.x || (p.x == q.x && p.y < q.y);
  });
  std::vector<int> rank(static_cast<std::size_t>(n) + 1);
  for (int r = 0; r < n; ++r) rank[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)]) + 1] = r;
  return rank;
}

}  // namespace testutil
