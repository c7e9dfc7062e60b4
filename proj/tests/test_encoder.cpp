#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "model_builder.hpp"
#include "oracles.hpp"
#include "symconf/encoder.hpp"
#include "symconf/sat_bridge.hpp"
#include "symconf/verify.hpp"

using namespace symconf;

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ProblemSpec gp(int n) {
  ProblemSpec p;
  p.n = n;
  return p;
}

ProblemSpec collinear(int n) {
  ProblemSpec p;
  p.n = n;
  p.mode = PositionMode::CollinearAllowed;
  return p;
}

std::size_t familyCount(const CnfFormula& f, const std::string& name) {
  for (const auto& b : f.breakdown)
    if (b.family == name) return b.clauses;
  return 0;
}

RationalPointSet toRational(const std::vector<oracle::QPoint>& q) {
  RationalPointSet out;
  for (const auto& p : q) out.push_back({p.x, p.y});
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

// Relabels so point 1 is lexicographically smallest and the rest are sorted
// by angle around it, ties by distance.
std::vector<oracle::QPoint> angularRelabel(std::vector<oracle::QPoint> pts) {
  auto lex = [](const oracle::QPoint& a, const oracle::QPoint& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); };
  std::iter_swap(pts.begin(), std::min_element(pts.begin(), pts.end(), lex));
  const oracle::QPoint o = pts[0];
  std::sort(pts.begin() + 1, pts.end(), [&](const oracle::QPoint& a, const oracle::QPoint& b) {
    const int s = oracle::detSign(o, a, b);
    if (s != 0) return s > 0;
    return (a.x - o.x) * (a.x - o.x) + (a.y - o.y) * (a.y - o.y) < (b.x - o.x) * (b.x - o.x) + (b.y - o.y) * (b.y - o.y);
  });
  return pts;
}

}  // namespace

TEST_SUITE("encoder") {
  TEST_CASE("linear order closed forms and semantics") {
    for (int n : {3, 5, 8}) {
      Encoder e(gp(n));
      CHECK(e.encodeLinearOrder().size() == static_cast<std::size_t>(n * (n - 1) * (n - 2)));
    }
    Encoder two(gp(2));
    CHECK(two.encodeLinearOrder().empty());
    CHECK(two.vars().idsOfKind(VarKind::Order).size() == 1);
    // n = 3: exactly the 3! linear orders survive.
    Encoder three(gp(3));
    const auto clauses = three.encodeLinearOrder();
    const auto order = three.vars().idsOfKind(VarKind::Order);
    std::vector<std::vector<int>> cl(clauses.begin(), clauses.end());
    CHECK(oracle::countProjectedModels(three.vars().size(), cl, order) == 6);
  }

  TEST_CASE("axiom family closed forms without symmetry") {
    for (int n : {5, 8, 12, 16}) {
      Encoder e(gp(n));
      CHECK(static_cast<long long>(e.encodeDynamicOrderingAxioms().size()) == 32 * binom(n, 4));
      CHECK(static_cast<long long>(e.encodeConvexityVars().size()) == 12 * binom(n, 4));
      Encoder c(collinear(n));
      CHECK(static_cast<long long>(c.encodeCollinearityAxioms().size()) == 112 * binom(n, 4));
      CHECK(static_cast<long long>(c.encodeExactlyOne().size()) == 4 * binom(n, 3));
    }
    Encoder four(gp(4));
    // Of the 24 ordered 4-tuples, 8 satisfy max(j, k) < l.
    CHECK(four.encodeDynamicOrderingAxioms().size() == 24 + 8);
  }

  TEST_CASE("no k-gon clause counts") {
    ProblemSpec p = gp(16);
    p.noKGon = 6;
    const CnfFormula f = Encoder(p).encode();
    CHECK(familyCount(f, "no_kgon") == 8008);
    std::size_t checked = 0;
    const std::size_t start = f.clauses.size() - 8008;
    for (std::size_t c = start; c < f.clauses.size(); ++c, ++checked) CHECK(f.clauses[c].size() == 15);
    CHECK(checked == 8008);
    p.s = 4;
    const CnfFormula g = Encoder(p).encode();
    CHECK(familyCount(g, "no_kgon") == 2016);
  }

  TEST_CASE("imbalance ladder emits the lattice of forbidden count pairs") {
    // For n = 12 and c = 2 each pair forbids |x - y| <= 1 over 0..10.
    int lattice = 0;
    for (int x = 0; x <= 10; ++x)
      for (int y = 0; y <= 10; ++y) lattice += std::abs(x - y) < 2;
    CHECK(lattice == 31);
    ProblemSpec p = collinear(12);
    Encoder e(p);
    e.encodeExactlyOne();
    const auto none = e.encodeImbalanceAtLeast(0);
    CHECK(none.empty());
    Encoder e2(p);
    const auto two = e2.encodeImbalanceAtLeast(2);
    std::size_t forbidden = 0;
    for (const auto& c : two) {
      if (c.size() != 2 || c[0] > 0 || c[1] > 0) continue;
      const auto& a = e2.vars().info(-c[0]);
      const auto& b = e2.vars().info(-c[1]);
      if (a.kind == VarKind::Counter && b.kind == VarKind::Counter) ++forbidden;
    }
    CHECK(forbidden == static_cast<std::size_t>(31 * binom(12, 2)));
  }

  TEST_CASE("soundness: real configurations satisfy the emitted axioms") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 60; ++t) {
      const int n = 6 + t % 3;
      const auto pts = oracle::randomGeneralPosition(n, 40, rng);
      const auto tau = OrientationAssignment::fromPoints(toRational(pts));
      ProblemSpec p = gp(n);
      Encoder e(p);
      auto clauses = e.encodeLinearOrder();
      for (auto& c : e.encodeDynamicOrderingAxioms()) clauses.push_back(c);
      for (auto& c : e.encodeConvexityVars()) clauses.push_back(c);
      auto convex = [&](const std::array<int, 4>& q) {
        std::vector<oracle::QPoint> sub;
        for (int i : q) sub.push_back(pts[static_cast<std::size_t>(i - 1)]);
        return oracle::hullSize(sub) == 4;
      };
      const auto m = testutil::geometricModel(e, e.vars().size(), tau, testutil::lexRanks(pts), convex);
      CHECK(m.consistent);
      CHECK(satisfiesAll(clauses, m.values));
    }
    for (int t = 0; t < 60; ++t) {
      const int n = 5 + t % 3;
      const auto pts = randomGrid(n, 2, rng);
      const auto tau = OrientationAssignment::fromPoints(toRational(pts));
      Encoder e(collinear(n));
      auto clauses = e.encodeLinearOrder();
      for (auto& c : e.encodeDynamicOrderingAxioms()) clauses.push_back(c);
      for (auto& c : e.encodeExactlyOne()) clauses.push_back(c);
      for (auto& c : e.encodeCollinearityAxioms()) clauses.push_back(c);
      const auto m = testutil::geometricModel(e, e.vars().size(), tau, testutil::lexRanks(pts));
      CHECK(m.consistent);
      CHECK(satisfiesAll(clauses, m.values));
    }
  }

  TEST_CASE("published symmetric configurations satisfy the full symmetric formulas") {
    {
      ProblemSpec p = gp(16);
      p.s = 4;
      p.noKGon = 6;
      p.symmetryBreaking = SymmetryBreaking::ConvexLayersAndQuadrant;
      Encoder e(p);
      const CnfFormula f = e.encode();
      CHECK(familyCount(f, "symmetry_breaking_layers") == 12);
      CHECK(familyCount(f, "symmetry_breaking_quadrant") == 6);
      const auto pts = fixtures::fourFoldOracle();
      const auto tau = orientationsOf(fixtures::fourFold());
      auto convex = [&](const std::array<int, 4>& q) {
        std::vector<oracle::QPoint> sub;
        for (int i : q) sub.push_back(pts[static_cast<std::size_t>(i - 1)]);
        return oracle::hullSize(sub) == 4;
      };
      const auto m = testutil::geometricModel(e, f.numVars(), tau, testutil::lexRanks(pts), convex);
      CHECK(m.consistent);
      CHECK(satisfiesAll(f.clauses, m.values));
    }
    {
      ProblemSpec p = gp(16);
      p.s = 5;
      p.center = true;
      p.noKGon = 6;
      p.symmetryBreaking = SymmetryBreaking::ConvexLayersAndQuadrant;
      Encoder e(p);
      const CnfFormula f = e.encode();
      CHECK(familyCount(f, "symmetry_breaking_quadrant") == 4);
      const auto high = fixtures::fiveFold();
      const auto tau = orientationsOf(high);
      struct P {
        double x, y;
      };
      std::vector<P> fp;
      for (const auto& h : high) fp.push_back({static_cast<double>(h.x), static_cast<double>(h.y)});
      auto convex = [&](const std::array<int, 4>& q) { return convexQuad(tau, q[0], q[1], q[2], q[3]); };
      const auto m = testutil::geometricModel(e, f.numVars(), tau, testutil::lexRanks(fp), convex);
      CHECK(m.consistent);
      CHECK(satisfiesAll(f.clauses, m.values));
    }
  }

  TEST_CASE("symmetric formulas reference only allocated ids and representatives") {
    ProblemSpec p = gp(16);
    p.s = 4;
    p.noKGon = 6;
    p.symmetryBreaking = SymmetryBreaking::ConvexLayersAndQuadrant;
    const CnfFormula f = Encoder(p).encode();
    CHECK(f.vars.idsOfKind(VarKind::Orientation).size() == 140);
    for (const auto& c : f.clauses) {
      CHECK_FALSE(c.empty());
      for (int l : c) {
        CHECK(l != 0);
        CHECK(std::abs(l) <= f.numVars());
      }
    }
  }

  TEST_CASE("no k-gon constraint agrees with brute force on pinned configurations") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 16; ++t) {
      const int n = 8;
      const auto pts = oracle::randomGeneralPosition(n, 30, rng);
      const auto tau = OrientationAssignment::fromPoints(toRational(pts));
      ProblemSpec p = gp(n);
      p.noKGon = 5;
      Encoder e(p);
      CnfFormula f = e.encode();
      for (auto& c : testutil::pinClauses(e, f.numVars(), tau, testutil::lexRanks(pts))) f.clauses.push_back(c);
      const auto r = solveFormula(f, defaultSolverCommand());
      CHECK((r.status == SolveStatus::Sat) == (oracle::countKGons(pts, 5) == 0));
    }
  }

  TEST_CASE("imbalance constraint agrees with brute force on pinned configurations") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 24; ++t) {
      const int n = 7;
      const auto pts = randomGrid(n, 3, rng);
      const auto tau = OrientationAssignment::fromPoints(toRational(pts));
      const int delta = oracle::minImbalance(pts);
      for (int c : {delta, delta + 1}) {
        ProblemSpec p = collinear(n);
        p.imbalanceAtLeast = c;
        Encoder e(p);
        CnfFormula f = e.encode();
        for (auto& cl : testutil::pinClauses(e, f.numVars(), tau, testutil::lexRanks(pts))) f.clauses.push_back(cl);
        const auto r = solveFormula(f, defaultSolverCommand());
        CHECK((r.status == SolveStatus::Sat) == (delta >= c));
      }
    }
  }

  TEST_CASE("angular normalization is satisfied by relabeled configurations") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 40; ++t) {
      const bool col = t % 2;
      const int n = 7;
      const auto pts = angularRelabel(col ? randomGrid(n, 2, rng) : oracle::randomGeneralPosition(n, 30, rng));
      ProblemSpec p = col ? collinear(n) : gp(n);
      p.symmetryBreaking = SymmetryBreaking::AngularOrder;
      Encoder e(p);
      const CnfFormula f = e.encode();
      CHECK(familyCount(f, "symmetry_breaking_angular") == static_cast<std::size_t>((n - 1) + (n - 1) * (n - 2) / 2));
      const auto tau = OrientationAssignment::fromPoints(toRational(pts));
      const auto m = testutil::geometricModel(e, f.numVars(), tau, testutil::lexRanks(pts));
      CHECK(satisfiesAll(e.encodeAngularOrderClauses(), m.values));
    }
  }

  TEST_CASE("spec validation") {
    ProblemSpec p = collinear(8);
    p.noKGon = 5;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    ProblemSpec q = gp(8);
    q.imbalanceAtLeast = 2;
    CHECK_THROWS_AS(q.validate(), std::invalid_argument);
    ProblemSpec r = gp(8);
    r.symmetryBreaking = SymmetryBreaking::ConvexLayersAndQuadrant;
    CHECK_THROWS_AS(r.validate(), std::invalid_argument);
    ProblemSpec s = gp(16);
    s.s = 4;
    s.symmetryBreaking = SymmetryBreaking::AngularOrder;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    ProblemSpec ok = gp(16);
    ok.s = 5;
    ok.center = true;
    ok.noKGon = 6;
    ok.symmetryBreaking = SymmetryBreaking::ConvexLayersAndQuadrant;
    CHECK_NOTHROW(ok.validate());
    const ProblemSpec back = ProblemSpec::parseDescription(ok.describe());
    CHECK(back.describe() == ok.describe());
  }

  TEST_CASE("a contradictory class makes the formula trivially unsat") {
    ProblemSpec p = gp(3);
    p.s = 2;
    p.center = true;
    const CnfFormula f = Encoder(p).encode();
    CHECK(f.triviallyUnsat);
    REQUIRE(f.clauses.size() == 1);
    CHECK(f.clauses[0].empty());
  }

  TEST_CASE("DIMACS output") {
    CnfFormula f;
    f.vars.allocate(VarKind::Aux, "x");
    f.vars.allocate(VarKind::Aux, "y");
    f.clauses.push_back({1, -2});
    std::ostringstream out;
    emitDimacs(f, out);
    CHECK(out.str() == "p cnf 2 1\n1 -2 0\n");
    std::ostringstream empty;
    emitDimacs(CnfFormula{}, empty);
    CHECK(empty.str() == "p cnf 0 0\n");
    std::ostringstream map;
    emitVarMap(f, map);
    CHECK(map.str() == "1 x\n2 y\n");
  }

  TEST_CASE("DIMACS round-trip on random formulas") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
      CnfFormula f;
      const int vars = 1 + static_cast<int>(rng() % 30);
      for (int v = 0; v < vars; ++v) f.vars.allocate(VarKind::Aux, "v" + std::to_string(v));
      const int clauses = static_cast<int>(rng() % 40);
      for (int c = 0; c < clauses; ++c) {
        Clause cl;
        const int len = 1 + static_cast<int>(rng() % 5);
        for (int l = 0; l < len; ++l) cl.push_back((rng() % 2 ? 1 : -1) * (1 + static_cast<int>(rng() % vars)));
        f.clauses.push_back(cl);
      }
      std::stringstream io;
      emitDimacs(f, io);
      const DimacsFile d = parseDimacs(io);
      CHECK(d.numVars == vars);
      auto a = f.clauses, b = d.clauses;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
    }
    ProblemSpec p = gp(6);
    p.noKGon = 5;
    const CnfFormula g = Encoder(p).encode();
    std::stringstream io;
    emitDimacs(g, io);
    const DimacsFile d = parseDimacs(io);
    REQUIRE(d.problem.has_value());
    CHECK(d.problem->describe() == p.describe());
    CHECK(d.clauses == g.clauses);
  }

  TEST_CASE("the CC axioms follow from the dynamic ordering axioms on five points") {
    const CnfFormula psi = buildPropositionTwoFormula();
    CHECK(solveFormula(psi, defaultSolverCommand()).status == SolveStatus::Unsat);
    CHECK(solveFormula(buildPropositionTwoFormula(false), defaultSolverCommand()).status == SolveStatus::Sat);
    Encoder e(gp(5));
    CnfFormula doa;
    doa.clauses = e.encodeLinearOrder();
    for (auto& c : e.encodeDynamicOrderingAxioms()) doa.clauses.push_back(c);
    doa.vars = e.vars();
    CHECK(solveFormula(doa, defaultSolverCommand()).status == SolveStatus::Sat);
  }
}
