#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "symconf/localizer.hpp"
#include "symconf/verify.hpp"

using namespace symconf;

namespace {

OrientationAssignment randomOrderType(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  FloatPointSet pts;
  for (int i = 0; i < n; ++i) pts.push_back({u(rng), u(rng)});
  return orientationsOf(exactRational(pts));
}

OrientationAssignment randomAssignment(int n, std::mt19937_64& rng) {
  OrientationAssignment tau(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) tau.set(i, j, k, rng() % 2 ? Orientation::Counterclockwise : Orientation::Clockwise);
  return tau;
}

// Triples (1-based, sorted) whose float orientation differs from tau; zero counts as wrong.
std::vector<std::array<int, 3>> unsatisfied(const FloatPointSet& p, const OrientationAssignment& tau) {
  std::vector<std::array<int, 3>> out;
  const int n = tau.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        const auto& a = p[static_cast<std::size_t>(i - 1)];
        const auto& b = p[static_cast<std::size_t>(j - 1)];
        const auto& c = p[static_cast<std::size_t>(k - 1)];
        const int s = oracle::detSign(a.x, a.y, b.x, b.y, c.x, c.y);
        if (s == 0 || s != toInt(tau.get(i, j, k))) out.push_back({i, j, k});
      }
  return out;
}

FloatPointSet randomState(int n, std::mt19937_64& rng, bool grid) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> g(0, 3);
  FloatPointSet pts;
  for (int i = 0; i < n; ++i) pts.push_back(grid ? FloatPoint{double(g(rng)), double(g(rng))} : FloatPoint{u(rng), u(rng)});
  return pts;
}

}  // namespace

TEST_SUITE("localizer") {
  TEST_CASE("eval and local evaluation agree with recomputation") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
      const int n = 4 + t % 9;
      const auto tau = randomAssignment(n, rng);
      const auto pts = randomState(n, rng, t % 4 == 0);
      const auto bad = unsatisfied(pts, tau);
      std::vector<long> F(static_cast<std::size_t>(n), 0);
      for (const auto& tr : bad)
        for (int v : tr) ++F[static_cast<std::size_t>(v - 1)];
      const EvalResult e = eval(pts, tau);
      CHECK(e.u == static_cast<long>(bad.size()));
      CHECK(e.F == F);
      const int i = 1 + t % n;
      std::vector<long> L(static_cast<std::size_t>(n), 0);
      for (const auto& tr : bad) {
        if (tr[0] != i && tr[1] != i && tr[2] != i) continue;
        for (int v : tr) ++L[static_cast<std::size_t>(v - 1)];
      }
      CHECK(localEval(pts, tau, i) == L);
      std::vector<int> moved{i, 1 + (i % n)};
      std::set<int> ms(moved.begin(), moved.end());
      long cnt = 0;
      std::vector<long> M(static_cast<std::size_t>(n), 0);
      for (const auto& tr : bad) {
        if (!ms.count(tr[0]) && !ms.count(tr[1]) && !ms.count(tr[2])) continue;
        ++cnt;
        for (int v : tr) ++M[static_cast<std::size_t>(v - 1)];
      }
      const EvalResult s = localEvalSet(pts, tau, moved);
      CHECK(s.u == cnt);
      CHECK(s.F == M);
    }
  }

  TEST_CASE("weighted sampling follows W + 1") {
    std::mt19937_64 rng(9);
    const std::vector<long> W{0, 1, 4, 9};
    std::vector<int> hits(W.size(), 0);
    const int trials = 200000;
    for (int t = 0; t < trials; ++t) ++hits[weightedSampleIndex(W, rng)];
    const double total = 1 + 2 + 5 + 10;
    for (std::size_t x = 0; x < W.size(); ++x) CHECK(std::abs(hits[x] / double(trials) - (W[x] + 1) / total) < 0.01);
    CHECK_THROWS(weightedSampleIndex(std::vector<long>{}, rng));
    CHECK_THROWS(weightedSampleIndex(std::vector<long>{1, -1}, rng));
    const std::vector<char> A{'a', 'b'};
    CHECK_THROWS(weightedSample(A, std::vector<long>{1}, rng));
  }

  TEST_CASE("leaderboard keeps the best entries") {
    Leaderboard lb(3);
    CHECK_FALSE(lb.bestUnsat().has_value());
    std::mt19937_64 rng(3);
    CHECK_FALSE(lb.sample(rng).has_value());
    for (long u : {9L, 5L, 7L, 3L, 8L}) lb.offer(FloatPointSet{{double(u), 0}}, u);
    CHECK(lb.size() == 3);
    CHECK(*lb.bestUnsat() == 3);
    CHECK(lb.best()->first[0].x == 3.0);
    std::set<double> seen;
    for (int t = 0; t < 200; ++t) seen.insert((*lb.sample(rng))[0].x);
    CHECK(seen == std::set<double>{3.0, 5.0, 7.0});
  }

  TEST_CASE("three points realize immediately") {
    OrientationAssignment tau(3);
    tau.set(1, 2, 3, Orientation::Clockwise);
    SearchParams p;
    p.budgetSeconds = 5;
    const auto r = realize(tau, p);
    REQUIRE(r.success);
    CHECK(certify(r.exact, tau).ok);
  }

  TEST_CASE("random order types are realized and certified") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 5; ++t) {
      const auto tau = randomOrderType(12, rng);
      SearchParams p;
      p.seed = static_cast<std::uint64_t>(t + 1);
      p.budgetSeconds = 30;
      p.checkBookkeeping = t == 0;
      const auto r = realize(tau, p);
      REQUIRE(r.success);
      CHECK(certify(r.exact, tau).ok);
      CHECK(orientationsOf(r.exact) == tau);
    }
  }

  TEST_CASE("symmetric search certifies the published 4-fold configuration's order type") {
    const auto tau = orientationsOf(fixtures::fourFold());
    const SFoldSymmetry sym(16, 4);
    SearchParams p;
    p.budgetSeconds = 30;
    const auto r = realize(tau, p, sym);
    REQUIRE(r.success);
    CHECK(certify(r.exact, tau).ok);
    CHECK(checkCombinatorialSymmetry(toQuad(r.exact), sym));
  }

  TEST_CASE("single-threaded runs are reproducible") {
    std::mt19937_64 rng(8);
    const auto tau = randomOrderType(10, rng);
    SearchParams p;
    p.seed = 77;
    p.budgetSeconds = 30;
    const auto a = realize(tau, p);
    const auto b = realize(tau, p);
    REQUIRE(a.success);
    REQUIRE(b.success);
    CHECK(a.iterations == b.iterations);
    CHECK(a.exact == b.exact);
  }

  TEST_CASE("non-realizable assignments exhaust the budget") {
    // Sign patterns of four points never produced by sampling are not realizable.
    std::mt19937_64 rng(12);
    std::set<std::vector<int>> seen;
    for (int t = 0; t < 20000; ++t) {
      const auto tau = randomOrderType(4, rng);
      seen.insert({toInt(tau.get(1, 2, 3)), toInt(tau.get(1, 2, 4)), toInt(tau.get(1, 3, 4)), toInt(tau.get(2, 3, 4))});
    }
    CHECK(seen.size() == 14);
    std::vector<int> missing;
    for (int m = 0; m < 16 && missing.empty(); ++m) {
      std::vector<int> s{m & 1 ? 1 : -1, m & 2 ? 1 : -1, m & 4 ? 1 : -1, m & 8 ? 1 : -1};
      if (!seen.count(s)) missing = s;
    }
    REQUIRE_FALSE(missing.empty());
    OrientationAssignment tau(4);
    tau.set(1, 2, 3, orientationFromSign(missing[0]));
    tau.set(1, 2, 4, orientationFromSign(missing[1]));
    tau.set(1, 3, 4, orientationFromSign(missing[2]));
    tau.set(2, 3, 4, orientationFromSign(missing[3]));
    SearchParams p;
    p.budgetSeconds = 0.5;
    const auto r = realize(tau, p);
    CHECK_FALSE(r.success);
    CHECK(r.bestUnsat >= 1);
    CHECK(r.points.size() == 4);
  }

  TEST_CASE("parameter validation") {
    SearchParams p;
    p.threads = 0;
    CHECK_THROWS(p.validate());
    SearchParams q;
    q.minRadius = 1.0;
    q.maxRadius = 0.5;
    CHECK_THROWS(q.validate());
    OrientationAssignment partial(4);
    CHECK_THROWS(realize(partial, SearchParams{}));
  }
}
