#include <doctest.h>

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "oracles.hpp"
#include "symconf/symmetry.hpp"

using namespace symconf;

namespace {

std::vector<int> permOf(const SFoldSymmetry& sym) {
  std::vector<int> p(static_cast<std::size_t>(sym.n()) + 1);
  for (int i = 1; i <= sym.n(); ++i) p[static_cast<std::size_t>(i)] = sym.apply(i);
  return p;
}

// Orbits of unordered triples under the permutation, by closure.
std::size_t tripleOrbits(int n, const std::vector<int>& perm) { return oracle::countSubsetOrbits(n, 3, perm); }

int inversionParity(int i, int j, int k) {
  int inv = 0;
  inv += i > j;
  inv += i > k;
  inv += j > k;
  return inv % 2;
}

const LitKind kA[] = {LitKind::A};
const LitKind kABC[] = {LitKind::A, LitKind::B, LitKind::C};

}  // namespace

TEST_SUITE("symmetry") {
  TEST_CASE("cycle structure") {
    for (auto [n, s, c] : std::vector<std::tuple<int, int, bool>>{{16, 4, false}, {16, 5, true}, {21, 3, false}, {16, 3, true}, {12, 1, false}}) {
      const SFoldSymmetry sym(n, s, c);
      for (int i = 1; i <= n; ++i) {
        CHECK(sym.applyPower(i, s) == i);
        int len = 1;
        for (int j = sym.apply(i); j != i; j = sym.apply(j)) ++len;
        if (c && i == n) CHECK(len == 1);
        else CHECK(len == s);
      }
    }
    CHECK(SFoldSymmetry(16, 4).apply(4) == 1);
    CHECK(SFoldSymmetry(16, 4).apply(5) == 6);
    CHECK(SFoldSymmetry(16, 5, true).apply(16) == 16);
    CHECK_THROWS(SFoldSymmetry(16, 5, false));
    CHECK_THROWS(SFoldSymmetry(18, 4, true));
  }

  TEST_CASE("canonicalize matches permutation parity") {
    for (int i = 1; i <= 5; ++i)
      for (int j = 1; j <= 5; ++j)
        for (int k = 1; k <= 5; ++k) {
          if (i == j || j == k || i == k) continue;
          std::array<int, 3> s{i, j, k};
          std::sort(s.begin(), s.end());
          const bool odd = inversionParity(i, j, k);
          const SignedLiteral g = canonicalize(i, j, k, LitKind::A, LiteralSemantics::GeneralPosition);
          CHECK(g.key.i == s[0]);
          CHECK(g.key.k == s[2]);
          CHECK(g.polarity == (odd ? -1 : 1));
          CHECK(g.kind == LitKind::A);
          const SignedLiteral a = canonicalize(i, j, k, LitKind::A, LiteralSemantics::Collinear);
          CHECK(a.polarity == 1);
          CHECK(a.kind == (odd ? LitKind::B : LitKind::A));
          CHECK(canonicalize(i, j, k, LitKind::C, LiteralSemantics::Collinear).kind == LitKind::C);
        }
  }

  TEST_CASE("identity classes are singletons") {
    const auto t = buildLiteralClasses(16, SFoldSymmetry::identity(16), kA);
    CHECK(t.size() == 560);
    for (const auto& c : t.classes()) CHECK(c.members.size() == 1);
    const auto u = buildLiteralClasses(8, SFoldSymmetry::identity(8), kABC);
    CHECK(u.size() == 3 * 56);
  }

  TEST_CASE("class counts equal triple orbit counts") {
    for (auto [n, s, c] : std::vector<std::tuple<int, int, bool>>{{16, 4, false}, {16, 5, true}, {12, 3, false}, {13, 4, true}}) {
      const SFoldSymmetry sym(n, s, c);
      const auto t = buildLiteralClasses(n, sym, kA);
      CHECK(t.size() == tripleOrbits(n, permOf(sym)));
    }
  }

  TEST_CASE("lookups are invariant under the permutation and antisymmetric") {
    const SFoldSymmetry sym(16, 5, true);
    const auto g = buildLiteralClasses(16, sym, kA);
    const auto col = buildLiteralClasses(16, sym, kABC);
    CHECK(col.semantics() == LiteralSemantics::Collinear);
    for (int i = 1; i <= 16; ++i)
      for (int j = 1; j <= 16; ++j)
        for (int k = 1; k <= 16; ++k) {
          if (i == j || j == k || i == k) continue;
          const ClassRef r = g.lookup(i, j, k, LitKind::A);
          const ClassRef r2 = g.lookup(sym.apply(i), sym.apply(j), sym.apply(k), LitKind::A);
          CHECK(r.classIndex == r2.classIndex);
          CHECK(r.polarity == r2.polarity);
          const ClassRef sw = g.lookup(j, i, k, LitKind::A);
          CHECK(sw.classIndex == r.classIndex);
          CHECK(sw.polarity == -r.polarity);
          const ClassRef ca = col.lookup(i, j, k, LitKind::A);
          const ClassRef cb = col.lookup(j, i, k, LitKind::B);
          CHECK(ca.classIndex == cb.classIndex);
          CHECK(ca.polarity == cb.polarity);
        }
  }

  TEST_CASE("self-mapped triples are contradictory or forced") {
    // Half turn about point 3 swaps 1 and 2, so 1, 3, 2 must be collinear.
    const SFoldSymmetry sym(3, 2, true);
    const auto g = buildLiteralClasses(3, sym, kA);
    REQUIRE(g.size() == 1);
    CHECK(g.classes()[0].status == ClassStatus::Contradictory);
    const auto col = buildLiteralClasses(3, sym, kABC);
    const auto a = col.lookup(1, 2, 3, LitKind::A);
    const auto c = col.lookup(1, 2, 3, LitKind::C);
    CHECK(col.classes()[static_cast<std::size_t>(a.classIndex)].status == ClassStatus::ForcedFalse);
    CHECK(col.classes()[static_cast<std::size_t>(c.classIndex)].status == ClassStatus::ForcedTrue);
    // Free classes everywhere for 4-fold without center.
    for (const auto& cl : buildLiteralClasses(16, SFoldSymmetry(16, 4), kA).classes()) CHECK(cl.status == ClassStatus::Free);
  }

  TEST_CASE("applying the permutation s times is the identity on literals") {
    const SFoldSymmetry sym(16, 4);
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 9; ++j)
        for (int k = j + 1; k <= 16; ++k)
          for (auto sem : {LiteralSemantics::GeneralPosition, LiteralSemantics::Collinear}) {
            const SignedLiteral l = canonicalize(i, j, k, LitKind::A, sem);
            SignedLiteral m = l;
            for (int t = 0; t < 4; ++t) m = applyPermutationToLiteral(m, sym, sem);
            CHECK(m == l);
          }
  }

  TEST_CASE("orbit minimum and lex-min test agree with brute force") {
    const SFoldSymmetry sym(16, 4);
    const auto perm = permOf(sym);
    std::size_t reps = 0;
    oracle::forEachSubset(16, 6, [&](const std::vector<int>& s0) {
      std::vector<int> s;
      for (int i : s0) s.push_back(i + 1);
      std::vector<int> best = s, cur = s;
      for (int t = 0; t < 4; ++t) {
        for (int& v : cur) v = perm[static_cast<std::size_t>(v)];
        std::sort(cur.begin(), cur.end());
        best = std::min(best, cur);
      }
      CHECK(orbitMinimum(s, sym) == best);
      const bool lexMin = best == s;
      CHECK(isLexMinInOrbit(s, sym) == lexMin);
      reps += lexMin;
    });
    CHECK(reps == oracle::countSubsetOrbits(16, 6, perm));
    CHECK(reps == 2016);
    const std::vector<int> any{1, 2, 3};
    CHECK(orbitOfIndexSet(any, SFoldSymmetry::identity(16)).size() == 1);
    CHECK(isLexMinInOrbit(any, SFoldSymmetry::identity(16)));
  }
}
