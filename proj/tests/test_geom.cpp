#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "symconf/geom.hpp"
#include "symconf/orientation_assignment.hpp"
#include "symconf/pointset_io.hpp"

using namespace symconf;

TEST_SUITE("geom") {
  TEST_CASE("orientation of simple triangles") {
    const RationalPoint a{0, 0}, b{1, 0}, c{0, 1};
    CHECK(orient(a, b, c) == Orientation::Counterclockwise);
    CHECK(orient(a, c, b) == Orientation::Clockwise);
    CHECK(orient(a, b, RationalPoint{2, 0}) == Orientation::Collinear);
  }

  TEST_CASE("exact orientation agrees with the oracle on random rational triples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-50, 50), den(1, 9);
    for (int t = 0; t < 2000; ++t) {
      RationalPoint p[3];
      oracle::QPoint q[3];
      for (int i = 0; i < 3; ++i) {
        Rational x(d(rng), den(rng)), y(d(rng), den(rng));
        x.canonicalize();
        y.canonicalize();
        p[i] = {x, y};
        q[i] = {x, y};
      }
      CHECK(toInt(orient(p[0], p[1], p[2])) == oracle::detSign(q[0], q[1], q[2]));
      CHECK(orient(p[0], p[2], p[1]) == -orient(p[0], p[1], p[2]));
    }
  }

  TEST_CASE("sign in Q(sqrt 3) agrees with the oracle") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-40, 40), den(1, 7);
    for (int t = 0; t < 5000; ++t) {
      Rational a(d(rng), den(rng)), b(d(rng), den(rng));
      a.canonicalize();
      b.canonicalize();
      CHECK(signQuadRational(QuadRational(a, b)) == oracle::sign(oracle::Q3{a, b}));
    }
    // 7 - 4 sqrt 3 > 0 but tiny; 26 - 15 sqrt 3 > 0 too.
    CHECK(signQuadRational(QuadRational(7, -4)) == 1);
    CHECK(signQuadRational(QuadRational(26, -15)) == 1);
    CHECK(signQuadRational(QuadRational(-26, 15)) == -1);
    CHECK(signQuadRational(QuadRational(0, 0)) == 0);
  }

  TEST_CASE("rotations return to the start after a full turn") {
    FloatPoint p{0.3, -1.7};
    FloatPoint q = p;
    for (int t = 0; t < 5; ++t) q = rotate(q, 2 * M_PI / 5);
    CHECK(std::abs(q.x - p.x) < 1e-9);
    CHECK(std::abs(q.y - p.y) < 1e-9);
    const QuadPoint e{QuadRational(Rational(3, 2), Rational(1)), QuadRational(-2)};
    CHECK(rotateThirdTurns(e, 3) == e);
    CHECK(rotateThirdTurns(e, 12) == e);
    CHECK(!(rotateThirdTurns(e, 1) == e));
  }

  TEST_CASE("exact third turns match the float rotation") {
    const QuadPoint e{QuadRational(Rational(3, 2), Rational(1, 3)), QuadRational(Rational(-2), Rational(1, 5))};
    for (int t = 0; t < 6; ++t) {
      const FloatPoint f = rotate(toFloat(e), 2 * M_PI * t / 3);
      const FloatPoint g = toFloat(rotateThirdTurns(e, t));
      CHECK(std::abs(f.x - g.x) < 1e-9);
      CHECK(std::abs(f.y - g.y) < 1e-9);
    }
  }

  TEST_CASE("high precision rotation and certified orientation") {
    const RationalPoint seed{-12, -17};
    const HighPoint r5 = rotateHigh(seed, 5, 5);
    CHECK(abs(r5.x - HighFloat(-12)) < HighFloat(1e-60));
    const HighPoint o = rotateHigh(RationalPoint{0, 0}, 5, 0);
    const auto s = certifiedOrient(o, rotateHigh(seed, 5, 0), rotateHigh(seed, 5, 1));
    REQUIRE(s.has_value());
    CHECK(*s == Orientation::Counterclockwise);
    // Collinear within the error bound cannot be certified.
    const HighPoint a = rotateHigh(RationalPoint{1, 0}, 5, 1);
    CHECK_FALSE(certifiedOrient(o, a, HighPoint{a.x * 2, a.y * 2}).has_value());
  }

  TEST_CASE("coordinate parsing and formatting round-trip") {
    for (const char* t : {"0", "-3", "7/2", "-19/10", "rt3", "-rt3", "3/2*rt3", "1-rt3", "-1/2+5/3*rt3", "2.5", "-1e-3"}) {
      const QuadRational v = parseCoordinate(t);
      CHECK(parseCoordinate(formatCoordinate(v)) == v);
    }
    CHECK(parseCoordinate("2.5") == QuadRational(Rational(5, 2)));
    CHECK(parseCoordinate("-1e-3") == QuadRational(Rational(-1, 1000)));
    CHECK_THROWS_AS(parseCoordinate("1/0"), ParseError);
    CHECK_THROWS_AS(parseCoordinate("abc"), ParseError);
    CHECK_THROWS_AS(parseCoordinate(""), ParseError);
  }

  TEST_CASE("pointset files round-trip and report line numbers") {
    const ExactPointSet pts = fixtures::unbalanced21();
    std::ostringstream out;
    writePointSet(out, pts);
    std::istringstream in(out.str());
    CHECK(readPointSet(in) == pts);

    std::istringstream bad("# header\n1 2\n3\n");
    try {
      readPointSet(bad);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }

  TEST_CASE("orientation assignments round-trip and respect antisymmetry") {
    const ExactPointSet pts = fixtures::fourFold();
    const auto tau = OrientationAssignment::fromPoints(pts);
    CHECK(tau.isTotal());
    CHECK_FALSE(tau.hasCollinearTriple());
    std::ostringstream out;
    writeAssignment(out, tau);
    std::istringstream in(out.str());
    CHECK(readAssignment(in) == tau);
    for (int i = 1; i <= 5; ++i)
      for (int j = 1; j <= 5; ++j)
        for (int k = 1; k <= 5; ++k) {
          if (i == j || j == k || i == k) continue;
          CHECK(tau.get(i, j, k) == -tau.get(j, i, k));
          CHECK(tau.get(i, j, k) == tau.get(j, k, i));
        }
    OrientationAssignment partial(4);
    CHECK_FALSE(partial.isTotal());
    CHECK_THROWS(partial.get(1, 1, 2));
  }
}
