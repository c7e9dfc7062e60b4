#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "fixtures.hpp"
#include "model_builder.hpp"
#include "oracles.hpp"
#include "symconf/sat_bridge.hpp"
#include "symconf/verify.hpp"

using namespace symconf;
namespace fs = std::filesystem;

namespace {

CnfFormula raw(int vars, std::vector<Clause> clauses) {
  CnfFormula f;
  for (int v = 1; v <= vars; ++v) f.vars.allocate(VarKind::Aux, "x" + std::to_string(v));
  f.clauses = std::move(clauses);
  return f;
}

CnfFormula pigeonhole(int holes) {
  const int pigeons = holes + 1;
  auto var = [&](int p, int h) { return p * holes + h + 1; };
  std::vector<Clause> cl;
  for (int p = 0; p < pigeons; ++p) {
    Clause c;
    for (int h = 0; h < holes; ++h) c.push_back(var(p, h));
    cl.push_back(c);
  }
  for (int h = 0; h < holes; ++h)
    for (int p = 0; p < pigeons; ++p)
      for (int q = p + 1; q < pigeons; ++q) cl.push_back({-var(p, h), -var(q, h)});
  return raw(pigeons * holes, cl);
}

fs::path scratchDir(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("symconf_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_SUITE("sat_bridge") {
  TEST_CASE("trivial formulas") {
    const auto sat = solveFormula(raw(2, {{1, 2}, {-1}}), defaultSolverCommand());
    REQUIRE(sat.status == SolveStatus::Sat);
    REQUIRE(sat.model.has_value());
    CHECK_FALSE((*sat.model)[1]);
    CHECK((*sat.model)[2]);
    const auto unsat = solveFormula(raw(1, {{1}, {-1}}), defaultSolverCommand());
    CHECK(unsat.status == SolveStatus::Unsat);
    CHECK_FALSE(unsat.model.has_value());
  }

  TEST_CASE("timeouts report unknown") {
    const auto r = solveFormula(pigeonhole(12), defaultSolverCommand(), 0.5);
    CHECK(r.status == SolveStatus::Unknown);
    CHECK(r.wallSeconds < 5.0);
  }

  TEST_CASE("solver failures raise errors") {
    CHECK_THROWS_AS(solveFormula(raw(1, {{1}}), "/nonexistent/solver"), SolverError);
    CHECK_THROWS_AS(solveFormula(raw(1, {{1}}), "/bin/echo"), SolverError);
  }

  TEST_CASE("enumeration counts match an exhaustive sweep") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 40; ++t) {
      const int vars = 4 + static_cast<int>(rng() % 13);
      std::vector<Clause> cl;
      const int clauses = static_cast<int>(rng() % (2 * vars));
      for (int c = 0; c < clauses; ++c) {
        Clause k;
        for (int l = 0; l < 3; ++l) k.push_back((rng() % 2 ? 1 : -1) * (1 + static_cast<int>(rng() % vars)));
        cl.push_back(k);
      }
      std::vector<int> projection;
      for (int v = 1; v <= vars; ++v)
        if (rng() % 3) projection.push_back(v);
      const CnfFormula f = raw(vars, cl);
      EnumerationOptions opt;
      opt.solverCmd = defaultSolverCommand();
      opt.projection = projection;
      const auto r = enumerateAll(f, opt);
      std::vector<std::vector<int>> plain(cl.begin(), cl.end());
      CHECK(r.complete);
      CHECK(r.projections.size() == oracle::countProjectedModels(vars, plain, projection));
    }
  }

  TEST_CASE("enumeration honours the limit") {
    EnumerationOptions opt;
    opt.solverCmd = defaultSolverCommand();
    opt.projection = {1, 2, 3};
    opt.limit = 3;
    const auto r = enumerateAll(raw(3, {}), opt);
    CHECK(r.projections.size() == 3);
    CHECK_FALSE(r.complete);
  }

  TEST_CASE("decoding recovers the configuration's orientations") {
    const auto tau = orientationsOf(fixtures::fourFold());
    const auto pts = fixtures::fourFoldOracle();
    for (int s : {1, 4}) {
      ProblemSpec p;
      p.n = 16;
      p.s = s;
      Encoder e(p);
      const CnfFormula f = e.encode();
      const auto m = testutil::geometricModel(e, f.numVars(), tau, testutil::lexRanks(pts));
      CHECK(decodeModel(m.values, f) == tau);
    }
  }

  TEST_CASE("collinear decoding rejects inconsistent models") {
    ProblemSpec p;
    p.n = 4;
    p.mode = PositionMode::CollinearAllowed;
    const CnfFormula f = Encoder(p).encode();
    std::vector<bool> model(static_cast<std::size_t>(f.numVars()) + 1, false);
    CHECK_THROWS_WITH_AS(decodeModel(model, f), "inconsistent model", std::runtime_error);
  }

  TEST_CASE("end to end enumeration of a small symmetric instance decodes valid assignments") {
    ProblemSpec p;
    p.n = 8;
    p.s = 4;
    p.noKGon = 5;
    const CnfFormula f = Encoder(p).encode();
    EnumerationOptions opt;
    opt.solverCmd = defaultSolverCommand();
    const auto r = enumerateAll(f, opt);
    CHECK(r.complete);
    CHECK(r.assignments.size() == r.projections.size());
    for (const auto& tau : r.assignments) {
      CHECK(tau.isTotal());
      CHECK(checkCombinatorialSymmetry(tau, p.symmetry()));
      CHECK(countKGons(tau, 5) == 0);
    }
  }

  TEST_CASE("assignment directories round-trip with an index") {
    const fs::path d = scratchDir("dir");
    std::vector<OrientationAssignment> a{orientationsOf(fixtures::fourFold())};
    OrientationAssignment small(3);
    small.set(1, 2, 3, Orientation::Clockwise);
    a.push_back(small);
    writeAssignmentDirectory(d.string(), a);
    CHECK(fs::exists(d / "solution_0001.txt"));
    CHECK(fs::exists(d / "solution_0002.txt"));
    std::ifstream index(d / "index.lst");
    std::string l1, l2;
    index >> l1 >> l2;
    CHECK(l1 == "solution_0001.txt");
    CHECK(l2 == "solution_0002.txt");
    CHECK(readAssignmentDirectory(d.string()) == a);
    fs::remove_all(d);
  }
}
