#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symconf/symmetry.hpp"

namespace symconf {

enum class PositionMode { GeneralPosition, CollinearAllowed };
/// ConvexLayersAndQuadrant needs s >= 3. AngularOrder is the s = 1 labeling
/// normalization: point 1 first in the order, the rest sorted by angle around it.
enum class SymmetryBreaking { None, ConvexLayersAndQuadrant, AngularOrder };

/// A problem instance: point count, collinearity regime, constraints and the
/// rotational symmetry built into the variable space.
struct ProblemSpec {
  int n = 0;
  PositionMode mode = PositionMode::GeneralPosition;
  std::optional<int> noKGon;
  std::optional<int> imbalanceAtLeast;
  int s = 1;
  bool center = false;
  SymmetryBreaking symmetryBreaking = SymmetryBreaking::None;
  bool quadrantClauses = true;

  SFoldSymmetry symmetry() const { return SFoldSymmetry(n, s, center); }
  /// Throws std::invalid_argument for combinations the encoder cannot build.
  void validate() const;
  /// Single-line key=value description, also used as the DIMACS header comment.
  std::string describe() const;
  /// Inverse of describe().
  static ProblemSpec parseDescription(const std::string& text);
};

std::string toString(PositionMode m);
std::string toString(SymmetryBreaking sb);
PositionMode parsePositionMode(const std::string& text);
SymmetryBreaking parseSymmetryBreaking(const std::string& text);

enum class VarKind { Orientation, Order, Conv, Counter, Aux };

struct VarInfo {
  VarKind kind = VarKind::Aux;
  std::string name;
  /// Orientation variables: index into the literal class table.
  int classIndex = -1;
};

/// Bijection between semantic variables and DIMACS ids 1..size().
class VarTable {
 public:
  int allocate(VarKind kind, std::string name, int classIndex = -1);
  int size() const { return static_cast<int>(vars_.size()); }
  const VarInfo& info(int id) const { return vars_.at(static_cast<std::size_t>(id - 1)); }
  const std::string& name(int id) const { return info(id).name; }
  /// Id by semantic name; 0 if absent.
  int find(const std::string& name) const;
  std::vector<int> idsOfKind(VarKind kind) const;

 private:
  std::vector<VarInfo> vars_;
  std::map<std::string, int> byName_;
};

using Clause = std::vector<int>;

/// Removes duplicate literals; returns false if the clause is a tautology.
bool normalizeClause(Clause& clause);

struct FamilyCount {
  std::string family;
  std::size_t clauses = 0;
};

struct CnfFormula {
  VarTable vars;
  std::vector<Clause> clauses;
  std::optional<ProblemSpec> problem;
  std::vector<FamilyCount> breakdown;
  /// Set when the encoder proved unsatisfiability before emitting; the
  /// clause list then holds a single empty clause.
  bool triviallyUnsat = false;
  std::shared_ptr<const LiteralClassTable> classes;

  int numVars() const { return vars.size(); }
  /// Orientation class variables, the default enumeration projection.
  std::vector<int> orientationVars() const { return vars.idsOfKind(VarKind::Orientation); }
};

/// Builds the CNF for a ProblemSpec. Orientation literals are routed through
/// the symmetry class table so only representative variables appear.
class Encoder {
 public:
  explicit Encoder(ProblemSpec spec);

  /// Full formula for the spec.
  CnfFormula encode();

  // Individual clause families (variables are allocated on first use).
  std::vector<Clause> encodeLinearOrder();
  std::vector<Clause> encodeDynamicOrderingAxioms();
  std::vector<Clause> encodeCollinearityAxioms();
  std::vector<Clause> encodeExactlyOne();
  std::vector<Clause> encodeConvexityVars();
  std::vector<Clause> encodeNoKGon(int k);
  std::vector<Clause> encodeImbalanceAtLeast(int c);
  /// Convex layer units followed by quadrant units.
  std::vector<Clause> encodeSymmetryBreaking();
  std::vector<Clause> encodeConvexLayerClauses();
  std::vector<Clause> encodeQuadrantClauses();
  std::vector<Clause> encodeAngularOrderClauses();
  /// Unit clauses for classes whose status is forced by the symmetry.
  std::vector<Clause> encodeForcedClasses();

  /// DIMACS literal for the orientation literal of the ordered triple (i, j, k).
  int orientationLit(int i, int j, int k, LitKind kind = LitKind::A) const;
  /// DIMACS literal for "i precedes j"; the reverse direction is its negation.
  int orderLit(int i, int j) const;
  /// Convexity variable of a 4-set (through its orbit representative).
  int convLit(std::array<int, 4> quad) const;
  /// Exact-count indicators for pair (i, j): `family` 0 for the A side
  /// (s_m), 1 for the B side (t_m). Only for pairs that were encoded.
  int counterLit(int i, int j, int family, int m) const;

  const ProblemSpec& spec() const { return spec_; }
  const VarTable& vars() const { return vars_; }
  const LiteralClassTable& classes() const { return *classes_; }
  bool hasContradictoryClass() const;

 private:
  void allocateOrderVars();
  void allocateConvVars();
  int& convSlot(const std::array<int, 4>& q);
  int convSlotValue(const std::array<int, 4>& q) const;

  ProblemSpec spec_;
  SFoldSymmetry sym_;
  std::shared_ptr<LiteralClassTable> classes_;
  VarTable vars_;
  int orientationBase_ = 0;
  std::vector<int> orderVar_;
  std::vector<int> convVar_;
  std::map<std::array<int, 3>, int> counterVars_;
};

/// Knuth's CC axioms 4 and 5 over all distinct indices of {1..n}, as clauses
/// over A literals of ordered triples (i, j, k) encoded through `lit`.
template <typename LitFn>
std::vector<Clause> ccAxiomClauses(int n, LitFn lit);

/// Psi = linear order plus DOA(5), with CC axioms 4-5 negated through Tseitin selectors.
/// Unsatisfiable iff the dynamic-ordering axioms imply CC axioms 4-5.
/// `withDisjunction` = false drops the final disjunction of the selectors.
CnfFormula buildPropositionTwoFormula(bool withDisjunction = true);

/// DIMACS output; a `c symconf ...` comment line precedes the header when the
/// formula carries a problem description.
void emitDimacs(const CnfFormula& formula, std::ostream& out);
/// One line "<id> <name>" per variable.
void emitVarMap(const CnfFormula& formula, std::ostream& out);
/// Writes <stem>.cnf and <stem>.map.
void writeFormulaFiles(const CnfFormula& formula, const std::string& stem);

struct DimacsFile {
  int numVars = 0;
  std::vector<Clause> clauses;
  std::optional<ProblemSpec> problem;
};

DimacsFile parseDimacs(std::istream& in);
DimacsFile readDimacsFile(const std::string& path);

/// Evaluates every clause against a model indexed by variable id (index 0 unused).
bool satisfiesAll(const std::vector<Clause>& clauses, const std::vector<bool>& model);

// ---- implementation of templates ----

template <typename LitFn>
std::vector<Clause> ccAxiomClauses(int n, LitFn lit) {
  std::vector<Clause> out;
  // Axiom 4 (interiority)
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
          out.push_back({lit(i, j, k), lit(i, k, l), lit(k, j, l), lit(j, i, l)});
        }
  // Axiom 5 (transitivity)
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          for (int m = 1; m <= n; ++m) {
            const int idx[5] = {i, j, k, l, m};
            bool distinct = true;
            for (int a = 0; a < 5 && distinct; ++a)
              for (int b = a + 1; b < 5; ++b)
                if (idx[a] == idx[b]) distinct = false;
            if (!distinct) continue;
            out.push_back({lit(l, i, m), lit(l, j, m), lit(l, k, m), lit(l, j, i), lit(l, k, j), lit(l, i, k)});
          }
  return out;
}

}  // namespace symconf
