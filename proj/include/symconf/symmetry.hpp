#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace symconf {

/// Sorted index triple, 1 <= i < j < k <= n.
struct TripleKey {
  int i = 0, j = 0, k = 0;
  auto operator<=>(const TripleKey&) const = default;
};

/// Variable families: A counterclockwise, B clockwise, C collinear.
enum class LitKind : std::uint8_t { A = 0, B = 1, C = 2 };

char kindLetter(LitKind k);

struct SignedLiteral {
  LitKind kind = LitKind::A;
  TripleKey key;
  int polarity = 1;

  SignedLiteral negated() const { return {kind, key, -polarity}; }
  auto operator<=>(const SignedLiteral&) const = default;
};

/// How odd permutations of a triple act on its literals. With only A
/// variables (general position) an odd permutation negates the literal; when
/// collinear triples are allowed it swaps the A and B families instead.
enum class LiteralSemantics { GeneralPosition, Collinear };

/// Sorted key with inversion parity as polarity (always +1 for kind C).
/// Throws std::invalid_argument("degenerate triple") on repeated indices.
SignedLiteral canonicalize(int i, int j, int k, LitKind kind);

/// Like canonicalize but resolves odd permutations according to `sem`.
SignedLiteral canonicalize(int i, int j, int k, LitKind kind, LiteralSemantics sem);

/// Rotational index symmetry: consecutive blocks of s indices form the cycles
/// (1..s)(s+1..2s)..., with an optional final fixed point n (the center).
class SFoldSymmetry {
 public:
  /// Throws std::invalid_argument unless n = m*s or (center and n = m*s + 1).
  SFoldSymmetry(int n, int s, bool center = false);
  static SFoldSymmetry identity(int n) { return SFoldSymmetry(n, 1, false); }
  /// Center inferred from n mod s.
  static SFoldSymmetry fromShape(int n, int s);

  int n() const { return n_; }
  int s() const { return s_; }
  bool hasCenter() const { return center_; }
  bool isIdentity() const { return s_ == 1; }
  /// Number of full s-cycles.
  int cycles() const { return n_ / s_; }

  int apply(int i) const;
  int applyPower(int i, int t) const;
  /// First index of the cycle containing i (the center maps to itself).
  int orbitRepresentative(int i) const;
  /// t such that applyPower(orbitRepresentative(i), t) == i.
  int orbitOffset(int i) const;

 private:
  int n_;
  int s_;
  bool center_;
};

SignedLiteral applyPermutationToLiteral(const SignedLiteral& lit, const SFoldSymmetry& sym,
                                        LiteralSemantics sem = LiteralSemantics::GeneralPosition);

enum class ClassStatus { Free, ForcedTrue, ForcedFalse, Contradictory };

struct LiteralClass {
  /// Members with polarity relative to the representative.
  std::vector<SignedLiteral> members;
  SignedLiteral representative;
  ClassStatus status = ClassStatus::Free;
};

struct ClassRef {
  int classIndex = -1;
  /// +1 if the queried literal equals the representative, -1 if its negation.
  int polarity = 1;
};

/// Partition of the canonical literals of the requested kinds into orbits of
/// the symmetry. Immutable after construction.
class LiteralClassTable {
 public:
  LiteralClassTable(const SFoldSymmetry& sym, std::span<const LitKind> kinds);

  const SFoldSymmetry& symmetry() const { return sym_; }
  LiteralSemantics semantics() const { return sem_; }
  const std::vector<LiteralClass>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  bool hasKind(LitKind k) const;

  /// Lookup for a canonical (sorted) literal; polarity folds in lit.polarity.
  ClassRef lookup(const SignedLiteral& lit) const;
  /// Lookup for an arbitrary ordered triple.
  ClassRef lookup(int i, int j, int k, LitKind kind) const;

 private:
  std::size_t slot(LitKind kind, const TripleKey& key) const;

  SFoldSymmetry sym_;
  LiteralSemantics sem_;
  std::vector<LitKind> kinds_;
  std::vector<LiteralClass> classes_;
  std::vector<ClassRef> index_;
};

/// Convenience wrapper over the table constructor.
LiteralClassTable buildLiteralClasses(int n, const SFoldSymmetry& sym, std::span<const LitKind> kinds);

/// {pi^t(S) : 0 <= t < s} as sorted index sets, deduplicated, in order of t.
std::vector<std::vector<int>> orbitOfIndexSet(std::span<const int> indices, const SFoldSymmetry& sym);
bool isLexMinInOrbit(std::span<const int> indices, const SFoldSymmetry& sym);
/// Lexicographically smallest member of the orbit of the set.
std::vector<int> orbitMinimum(std::span<const int> indices, const SFoldSymmetry& sym);

}  // namespace symconf
