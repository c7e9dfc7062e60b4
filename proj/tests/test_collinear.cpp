#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "symconf/collinear_realizer.hpp"
#include "symconf/verify.hpp"

using namespace symconf;

namespace {

OrientationAssignment tauOf(const std::vector<oracle::QPoint>& q) {
  RationalPointSet pts;
  for (const auto& p : q) pts.push_back({p.x, p.y});
  return orientationsOf(pts);
}

std::vector<oracle::QPoint> grid3() {
  std::vector<oracle::QPoint> out;
  for (int y = 0; y < 3; ++y)
    for (int x = 0; x < 3; ++x) out.push_back({x, y});
  return out;
}

std::vector<oracle::QPoint> randomGrid(int n, int R, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-R, R);
  std::vector<oracle::QPoint> pts;
  while (static_cast<int>(pts.size()) < n) {
    oracle::QPoint p{d(rng), d(rng)};
    bool dup = false;
    for (const auto& q : pts) dup = dup || (q.x == p.x && q.y == p.y);
    if (!dup) pts.push_back(p);
  }
  return pts;
}

std::vector<oracle::Q3Point> toOracle(const ExactPointSet& pts) {
  std::vector<oracle::Q3Point> out;
  for (const auto& p : pts) out.push_back({{p.x.a, p.x.b}, {p.y.a, p.y.b}});
  return out;
}

}  // namespace

TEST_SUITE("collinear_realizer") {
  TEST_CASE("line extraction on the 3x3 grid") {
    const LineFamily f = extractLines(tauOf(grid3()));
    CHECK(f.lines.size() == 8);
    for (const auto& l : f.lines) CHECK(l.size() == 3);
    CHECK(f.uncoveredPairs().size() == 36 - 8 * 3);
  }

  TEST_CASE("inconsistent collinearity is rejected") {
    OrientationAssignment tau(4);
    tau.set(1, 2, 3, Orientation::Collinear);
    tau.set(1, 2, 4, Orientation::Collinear);
    tau.set(1, 3, 4, Orientation::Clockwise);
    tau.set(2, 3, 4, Orientation::Clockwise);
    CHECK_THROWS_WITH_AS(extractLines(tau), "inconsistent collinearity", std::invalid_argument);
  }

  TEST_CASE("resolved plans keep every family line collinear") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 20; ++t) {
      const auto q = t == 0 ? grid3() : randomGrid(9, 2, rng);
      const LineFamily f = extractLines(tauOf(q));
      const DependencyPlan plan = planDependencies(f);
      CHECK(plan.steps.size() == q.size());
      CHECK(plan.dependentCount() + plan.independentCount() + plan.countKind(SlotKind::Pinned) == static_cast<int>(q.size()));
      std::uniform_real_distribution<double> u(-3, 3);
      std::vector<double> params(static_cast<std::size_t>(plan.numParams));
      for (auto& v : params) v = u(rng);
      const auto pts = resolvePlan(plan, params);
      if (!pts) continue;
      double scale = 1;
      for (const auto& p : *pts) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
      for (const auto& l : f.lines)
        for (std::size_t x = 2; x < l.size(); ++x) {
          const auto& a = (*pts)[static_cast<std::size_t>(l[0] - 1)];
          const auto& b = (*pts)[static_cast<std::size_t>(l[1] - 1)];
          const auto& c = (*pts)[static_cast<std::size_t>(l[x] - 1)];
          const double det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
          CHECK(std::abs(det) < 1e-9 * scale * scale);
        }
    }
  }

  TEST_CASE("conservative imbalance equals the exact value on well-separated grids") {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 100; ++t) {
      const auto q = randomGrid(8, 3, rng);
      FloatPointSet f;
      for (const auto& p : q) f.push_back({p.x.get_d(), p.y.get_d()});
      CHECK(conservativeImbalance(f) == oracle::minImbalance(q));
    }
  }

  TEST_CASE("points inside a line's band count against its imbalance") {
    // Five points in general position: every exact imbalance is odd.
    // Point 3 lies within the band of line 1-2, so that line may score 0.
    const FloatPointSet pts{{0, 0}, {1, 0}, {0.5, 1e-7}, {0.5, 1}, {0.3, -1}};
    std::vector<oracle::QPoint> q;
    for (const auto& r : exactRational(pts)) q.push_back({r.x, r.y});
    CHECK(oracle::minImbalance(q) == 1);
    CHECK(conservativeImbalance(pts) == 0);
    FloatPointSet clear = pts;
    clear[2].y = 0.2;
    std::vector<oracle::QPoint> qc;
    for (const auto& r : exactRational(clear)) qc.push_back({r.x, r.y});
    CHECK(conservativeImbalance(clear) == oracle::minImbalance(qc));
  }

  TEST_CASE("realization reaches the imbalance of realizable grids exactly") {
    std::mt19937_64 rng(10);
    for (int t = 0; t < 6; ++t) {
      const auto q = randomGrid(8, 2, rng);
      const auto tau = tauOf(q);
      const int target = oracle::minImbalance(q);
      DEParams de;
      de.seed = static_cast<std::uint64_t>(t + 1);
      de.budgetSeconds = 60;
      const auto r = realizeCollinear(tau, target, de);
      REQUIRE(r.success);
      CHECK(r.exactLines == r.familyLines);
      CHECK(r.exactDelta >= target);
      CHECK(oracle::minImbalance(toOracle(r.exact)) == r.exactDelta);
      CHECK(r.bestScore <= r.exactDelta);
      const LineFamily f = extractLines(tau);
      for (const auto& l : f.lines)
        for (std::size_t x = 2; x < l.size(); ++x) {
          const auto o = toOracle(r.exact);
          CHECK(oracle::detSign(o[static_cast<std::size_t>(l[0] - 1)], o[static_cast<std::size_t>(l[1] - 1)],
                                o[static_cast<std::size_t>(l[x] - 1)]) == 0);
        }
    }
  }

  TEST_CASE("symmetric plans rotate exactly") {
    // Three orbits of size 3 around a pinned center.
    LineFamily none;
    none.n = 7;
    const SFoldSymmetry sym(7, 3, true);
    const DependencyPlan plan = planDependencies(none, sym);
    CHECK(plan.countKind(SlotKind::Pinned) == 1);
    std::vector<double> params(static_cast<std::size_t>(plan.numParams), 0.0);
    for (std::size_t x = 0; x < params.size(); ++x) params[x] = 0.37 * double(x + 1);
    const ExactPointSet e = snapToExact(params, plan, 1000000);
    CHECK(checkCombinatorialSymmetry(e, sym));
    CHECK(e[6].x == QuadRational(0));
    CHECK(e[6].y == QuadRational(0));
  }
}
