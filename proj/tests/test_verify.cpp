#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "symconf/verify.hpp"

using namespace symconf;

namespace {

RationalPointSet toRational(const std::vector<oracle::QPoint>& q) {
  RationalPointSet out;
  for (const auto& p : q) out.push_back({p.x, p.y});
  return out;
}

std::vector<std::set<int>> asSets(const std::vector<std::vector<int>>& v) {
  std::vector<std::set<int>> out;
  for (const auto& l : v) out.emplace_back(l.begin(), l.end());
  return out;
}

std::vector<std::vector<int>> ranges(std::initializer_list<std::pair<int, int>> r) {
  std::vector<std::vector<int>> out;
  for (auto [a, b] : r) {
    out.emplace_back();
    for (int i = a; i <= b; ++i) out.back().push_back(i);
  }
  return out;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("certification accepts the true order type and flags a moved point") {
    std::mt19937_64 rng(2);
    const auto q = oracle::randomGeneralPosition(9, 30, rng);
    auto pts = toRational(q);
    const auto tau = orientationsOf(pts);
    CHECK(certify(pts, tau).ok);
    CHECK(certify(toQuad(pts), tau).ok);
    pts[0] = {pts[1].x * 2 - pts[2].x, pts[1].y * 2 - pts[2].y};
    const auto r = certify(pts, tau);
    CHECK_FALSE(r.ok);
    REQUIRE_FALSE(r.violations.empty());
    for (const auto& v : r.violations) {
      CHECK(v.triple.i == 1);
      CHECK(v.expected != v.actual);
    }
  }

  TEST_CASE("rational snapping") {
    CHECK(snapToRational(0.5, 10) == Rational(1, 2));
    CHECK(snapToRational(M_PI, 1000) == Rational(355, 113));
    CHECK(snapToRational(-0.75, 100) == Rational(-3, 4));
    CHECK(snapToRational(3.0, 1) == Rational(3));
    const auto e = exactRational(FloatPointSet{{0.1, -2.5}});
    CHECK(e[0].x.get_d() == 0.1);
    CHECK(e[0].y == Rational(-5, 2));
  }

  TEST_CASE("k-gon counts, imbalance and layers agree with brute force") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 60; ++t) {
      const int n = 5 + t % 6;
      const auto q = oracle::randomGeneralPosition(n, 40, rng);
      const auto pts = toQuad(toRational(q));
      const auto tau = orientationsOf(pts);
      for (int k = 3; k <= 6; ++k) {
        CHECK(countKGons(tau, k) == oracle::countKGons(q, k));
        CHECK(countKGons(pts, k) == oracle::countKGons(q, k));
      }
      CHECK(minImbalance(tau).delta == oracle::minImbalance(q));
      CHECK(minImbalance(pts).delta == oracle::minImbalance(q));
      CHECK(asSets(convexLayers(tau)) == oracle::layers(q));
      CHECK(asSets(convexLayers(pts)) == oracle::layers(q));
    }
  }

  TEST_CASE("imbalance with collinear points matches brute force") {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int t = 0; t < 100; ++t) {
      std::vector<oracle::QPoint> q;
      while (q.size() < 7) {
        oracle::QPoint p{d(rng), d(rng)};
        bool dup = false;
        for (const auto& r : q) dup = dup || (r.x == p.x && r.y == p.y);
        if (!dup) q.push_back(p);
      }
      const auto pts = toQuad(toRational(q));
      const auto r = minImbalance(pts);
      CHECK(r.delta == oracle::minImbalance(q));
      CHECK(minImbalance(orientationsOf(pts)).delta == r.delta);
      CHECK(r.witness[0] < r.witness[1]);
    }
  }

  TEST_CASE("input validation") {
    const ExactPointSet dup{{QuadRational(0), QuadRational(0)}, {QuadRational(0), QuadRational(0)}, {QuadRational(1), QuadRational(0)}};
    CHECK_THROWS_WITH_AS(minImbalance(dup), "duplicate points", std::invalid_argument);
    const ExactPointSet line{{QuadRational(0), QuadRational(0)}, {QuadRational(1), QuadRational(1)},
                             {QuadRational(2), QuadRational(2)}, {QuadRational(0), QuadRational(5)}};
    CHECK_THROWS_WITH_AS(countKGons(line, 4), "general position required", std::invalid_argument);
  }

  TEST_CASE("square") {
    const ExactPointSet sq{{QuadRational(0), QuadRational(0)}, {QuadRational(1), QuadRational(0)},
                           {QuadRational(1), QuadRational(1)}, {QuadRational(0), QuadRational(1)}};
    CHECK(countKGons(sq, 4) == 1);
    const auto rep = formatReport(computeStats(orientationsOf(sq)));
    CHECK(rep.find("4-gons: 1") != std::string::npos);
  }

  TEST_CASE("4-fold 16-point table") {
    const auto pts = fixtures::fourFold();
    const auto tau = orientationsOf(pts);
    CHECK(countKGons(tau, 4) == 924);
    CHECK(countKGons(tau, 6) == 0);
    CHECK(countKGons(tau, 5) == oracle::countKGons(fixtures::fourFoldOracle(), 5));
    CHECK(convexLayers(tau) == ranges({{1, 4}, {5, 8}, {9, 12}, {13, 16}}));
    CHECK(checkCombinatorialSymmetry(tau, SFoldSymmetry(16, 4)));
    CHECK(checkCombinatorialSymmetry(pts, SFoldSymmetry(16, 4)));
    CHECK_FALSE(checkCombinatorialSymmetry(tau, SFoldSymmetry(16, 3, true)));
    const auto rep = formatReport(computeStats(tau, SFoldSymmetry(16, 4)));
    CHECK(rep.find("no 6-gon: true; 6-gons: 0") != std::string::npos);
    CHECK(rep.find("4-gons: 924") != std::string::npos);
    CHECK(rep.find("4-fold symmetric: true") != std::string::npos);
  }

  TEST_CASE("5-fold 16-point table") {
    const auto tau = orientationsOf(fixtures::fiveFold());
    CHECK(countKGons(tau, 6) == 0);
    CHECK(convexLayers(tau) == ranges({{1, 5}, {6, 10}, {11, 15}, {16, 16}}));
    CHECK(checkCombinatorialSymmetry(tau, SFoldSymmetry(16, 5, true)));
  }

  TEST_CASE("21-point table is 2-balanced with exact collinearities") {
    const auto pts = fixtures::unbalanced21();
    const auto o = fixtures::unbalanced21Oracle();
    const auto r = minImbalance(pts);
    CHECK(r.delta == 2);
    CHECK(oracle::minImbalance(o) == 2);
    const auto tau = orientationsOf(pts);
    int collinear = 0;
    for (int i = 1; i <= 21; ++i)
      for (int j = i + 1; j <= 21; ++j)
        for (int k = j + 1; k <= 21; ++k) {
          const int s = oracle::detSign(o[static_cast<std::size_t>(i - 1)], o[static_cast<std::size_t>(j - 1)],
                                        o[static_cast<std::size_t>(k - 1)]);
          CHECK(toInt(tau.get(i, j, k)) == s);
          collinear += s == 0;
        }
    CHECK(collinear > 0);
    CHECK(minImbalance(tau).delta == 2);
    CHECK(formatReport(computeStats(tau)).find("Δ_min = 2") != std::string::npos);
  }

  TEST_CASE("summary lines") {
    const auto s = formatSummary(computeStats(orientationsOf(fixtures::fourFold()), SFoldSymmetry(16, 4)));
    CHECK(s.find("n=16\n") != std::string::npos);
    CHECK(s.find("gons_4=924\n") != std::string::npos);
    CHECK(s.find("gons_6=0\n") != std::string::npos);
    CHECK(s.find("layers=4\n") != std::string::npos);
    CHECK(s.find("symmetric=1\n") != std::string::npos);
  }
}
