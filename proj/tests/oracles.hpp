#pragma once

// Brute-force reference implementations used to check the library. They
// share no code with the library beyond plain data types.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

struct QPoint {
  mpq_class x, y;
};

inline int detSign(const QPoint& p, const QPoint& q, const QPoint& r) {
  mpq_class d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return sgn(d);
}

inline int detSign(double px, double py, double qx, double qy, double rx, double ry) {
  const double d = (qx - px) * (ry - py) - (qy - py) * (rx - px);
  return (d > 0) - (d < 0);
}

/// Number of hull vertices (strict, collinear boundary points excluded).
inline std::size_t hullSize(std::vector<QPoint> pts) {
  if (pts.size() < 3) return pts.size();
  std::sort(pts.begin(), pts.end(), [](const QPoint& a, const QPoint& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  std::vector<QPoint> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && detSign(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && detSign(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  return k - 1;
}

/// Indices (0-based) of strict hull vertices.
inline std::vector<int> hullIndices(const std::vector<QPoint>& pts, const std::vector<int>& alive) {
  std::vector<int> out;
  for (int i : alive) {
    // i is a hull vertex iff it is not inside or on a triangle of other points.
    bool inside = false;
    for (std::size_t a = 0; a < alive.size() && !inside; ++a)
      for (std::size_t b = a + 1; b < alive.size() && !inside; ++b)
        for (std::size_t c = b + 1; c < alive.size() && !inside; ++c) {
          const int A = alive[a], B = alive[b], C = alive[c];
          if (A == i || B == i || C == i) continue;
          const int s1 = detSign(pts[A], pts[B], pts[i]);
          const int s2 = detSign(pts[B], pts[C], pts[i]);
          const int s3 = detSign(pts[C], pts[A], pts[i]);
          if ((s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0)) inside = true;
        }
    if (!inside) out.push_back(i);
  }
  return out;
}

inline void forEachSubset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  if (k > n) return;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

/// k-subsets whose convex hull has all k points as vertices.
inline long long countKGons(const std::vector<QPoint>& pts, int k) {
  long long c = 0;
  forEachSubset(static_cast<int>(pts.size()), k, [&](const std::vector<int>& s) {
    std::vector<QPoint> sub;
    for (int i : s) sub.push_back(pts[static_cast<std::size_t>(i)]);
    if (hullSize(sub) == static_cast<std::size_t>(k)) ++c;
  });
  return c;
}

/// min over point pairs of |#left - #right|.
inline int minImbalance(const std::vector<QPoint>& pts) {
  int best = 1 << 30;
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int l = 0, r = 0;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const int s = detSign(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)], pts[static_cast<std::size_t>(k)]);
        l += s > 0;
        r += s < 0;
      }
      best = std::min(best, std::abs(l - r));
    }
  return best;
}

/// Onion layers as sorted 1-based index sets.
inline std::vector<std::set<int>> layers(const std::vector<QPoint>& pts) {
  std::vector<int> alive(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) alive[i] = static_cast<int>(i);
  std::vector<std::set<int>> out;
  while (!alive.empty()) {
    std::vector<int> h = alive.size() <= 3 ? alive : hullIndices(pts, alive);
    std::set<int> layer;
    for (int i : h) layer.insert(i + 1);
    out.push_back(layer);
    std::vector<int> rest;
    for (int i : alive)
      if (!layer.count(i + 1)) rest.push_back(i);
    alive = rest;
  }
  return out;
}

/// Random points with integer coordinates in [-R, R], no three collinear.
inline std::vector<QPoint> randomGeneralPosition(int n, int R, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-R, R);
  std::vector<QPoint> pts;
  while (static_cast<int>(pts.size()) < n) {
    QPoint p{d(rng), d(rng)};
    bool ok = true;
    for (std::size_t a = 0; a < pts.size() && ok; ++a) {
      if (pts[a].x == p.x && pts[a].y == p.y) ok = false;
      for (std::size_t b = a + 1; b < pts.size() && ok; ++b)
        if (detSign(pts[a], pts[b], p) == 0) ok = false;
    }
    if (ok) pts.push_back(p);
  }
  return pts;
}

/// Number of orbits of k-subsets of {1..n} under a permutation (1-based map).
inline std::size_t countSubsetOrbits(int n, int k, const std::vector<int>& perm) {
  std::set<std::vector<int>> seen;
  std::size_t orbits = 0;
  forEachSubset(n, k, [&](const std::vector<int>& s0) {
    std::vector<int> s;
    for (int i : s0) s.push_back(i + 1);
    if (seen.count(s)) return;
    ++orbits;
    std::vector<int> cur = s;
    while (!seen.count(cur)) {
      seen.insert(cur);
      for (int& v : cur) v = perm[static_cast<std::size_t>(v)];
      std::sort(cur.begin(), cur.end());
    }
  });
  return orbits;
}

/// Number of satisfying assignments restricted to `projection`, by full sweep.
inline std::size_t countProjectedModels(int numVars, const std::vector<std::vector<int>>& clauses,
                                        const std::vector<int>& projection) {
  std::set<std::vector<bool>> proj;
  for (std::uint64_t m = 0; m < (std::uint64_t(1) << numVars); ++m) {
    bool all = true;
    for (const auto& c : clauses) {
      bool sat = false;
      for (int l : c) {
        const bool v = (m >> (std::abs(l) - 1)) & 1;
        if ((l > 0) == v) { sat = true; break; }
      }
      if (!sat) { all = false; break; }
    }
    if (!all) continue;
    std::vector<bool> p;
    for (int v : projection) p.push_back((m >> (v - 1)) & 1);
    proj.insert(p);
  }
  return proj.size();
}

/// a + b*sqrt(3) with exact sign.
struct Q3 {
  mpq_class a, b;
};
inline Q3 operator+(const Q3& l, const Q3& r) { return {l.a + r.a, l.b + r.b}; }
inline Q3 operator-(const Q3& l, const Q3& r) { return {l.a - r.a, l.b - r.b}; }
inline Q3 operator*(const Q3& l, const Q3& r) { return {l.a * r.a + 3 * l.b * r.b, l.a * r.b + l.b * r.a}; }
inline int sign(const Q3& v) {
  const int sa = sgn(v.a), sb = sgn(v.b);
  if (sa >= 0 && sb >= 0) return (sa > 0 || sb > 0) ? 1 : 0;
  if (sa <= 0 && sb <= 0) return -1;
  // Opposite signs: compare a^2 with 3 b^2.
  const int cmp = sgn(v.a * v.a - 3 * v.b * v.b);
  return sa > 0 ? cmp : -cmp;
}
struct Q3Point {
  Q3 x, y;
};
inline int detSign(const Q3Point& p, const Q3Point& q, const Q3Point& r) {
  return sign((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x));
}
inline int minImbalance(const std::vector<Q3Point>& pts) {
  int best = 1 << 30;
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int l = 0, r = 0;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const int s = detSign(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)], pts[static_cast<std::size_t>(k)]);
        l += s > 0;
        r += s < 0;
      }
      best = std::min(best, std::abs(l - r));
    }
  return best;
}

}  // namespace oracle
