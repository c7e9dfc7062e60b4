#include "symconf/encoder.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symconf {

// ---------------------------------------------------------------- ProblemSpec

std::string toString(PositionMode m) {
  return m == PositionMode::GeneralPosition ? "general" : "collinear";
}

std::string toString(SymmetryBreaking sb) {
  switch (sb) {
    case SymmetryBreaking::None: return "none";
    case SymmetryBreaking::ConvexLayersAndQuadrant: return "layers";
    case SymmetryBreaking::AngularOrder: return "angular";
  }
  return "none";
}

PositionMode parsePositionMode(const std::string& text) {
  if (text == "general" || text == "general_position" || text == "generalPosition") return PositionMode::GeneralPosition;
  if (text == "collinear" || text == "collinear_allowed" || text == "collinearAllowed") return PositionMode::CollinearAllowed;
  throw std::invalid_argument("unknown mode '" + text + "'");
}

SymmetryBreaking parseSymmetryBreaking(const std::string& text) {
  if (text == "none" || text == "false" || text == "0") return SymmetryBreaking::None;
  if (text == "layers" || text == "true" || text == "1" || text == "convex_layers_and_quadrant" ||
      text == "convexLayersAndQuadrant") {
    return SymmetryBreaking::ConvexLayersAndQuadrant;
  }
  if (text == "angular" || text == "angular_order") return SymmetryBreaking::AngularOrder;
  throw std::invalid_argument("unknown symmetry_breaking '" + text + "'");
}

void ProblemSpec::validate() const {
  if (n < 1) throw std::invalid_argument("need at least 1 point");
  if (noKGon) {
    if (mode != PositionMode::GeneralPosition) throw std::invalid_argument("no_kgon requires general position mode");
    if (*noKGon < 4) throw std::invalid_argument("no_kgon needs k >= 4");
  }
  if (imbalanceAtLeast) {
    if (mode != PositionMode::CollinearAllowed) throw std::invalid_argument("imbalance_at_least requires collinear mode");
    if (*imbalanceAtLeast < 0) throw std::invalid_argument("imbalance_at_least must be nonnegative");
  }
  SFoldSymmetry sym = symmetry();
  if (symmetryBreaking == SymmetryBreaking::ConvexLayersAndQuadrant) {
    if (mode != PositionMode::GeneralPosition || sym.s() < 3 || sym.cycles() < 1) {
      throw std::invalid_argument("symmetry breaking unsupported for this shape");
    }
  }
  if (symmetryBreaking == SymmetryBreaking::AngularOrder && sym.s() != 1) {
    throw std::invalid_argument("angular symmetry breaking requires s = 1");
  }
}

std::string ProblemSpec::describe() const {
  std::ostringstream out;
  out << "n=" << n << " s=" << s << " center=" << (center ? 1 : 0) << " mode=" << toString(mode)
      << " no_kgon=" << noKGon.value_or(0) << " imbalance_at_least=" << imbalanceAtLeast.value_or(0)
      << " symmetry_breaking=" << toString(symmetryBreaking) << " quadrant=" << (quadrantClauses ? 1 : 0);
  return out.str();
}

ProblemSpec ProblemSpec::parseDescription(const std::string& text) {
  ProblemSpec spec;
  std::istringstream in(text);
  std::string token;
  bool sawImbalance = false;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "n") spec.n = std::stoi(value);
    else if (key == "s") spec.s = std::stoi(value);
    else if (key == "center") spec.center = value == "1" || value == "true";
    else if (key == "mode") spec.mode = parsePositionMode(value);
    else if (key == "no_kgon") { if (std::stoi(value) > 0) spec.noKGon = std::stoi(value); }
    else if (key == "imbalance_at_least") { sawImbalance = true; spec.imbalanceAtLeast = std::stoi(value); }
    else if (key == "symmetry_breaking") spec.symmetryBreaking = parseSymmetryBreaking(value);
    else if (key == "quadrant") spec.quadrantClauses = value == "1" || value == "true";
  }
  if (sawImbalance && spec.mode != PositionMode::CollinearAllowed) spec.imbalanceAtLeast.reset();
  return spec;
}

// ---------------------------------------------------------------- VarTable

int VarTable::allocate(VarKind kind, std::string name, int classIndex) {
  const int id = size() + 1;
  auto [it, inserted] = byName_.emplace(name, id);
  if (!inserted) throw std::logic_error("duplicate variable name " + name);
  vars_.push_back({kind, std::move(name), classIndex});
  return id;
}

int VarTable::find(const std::string& name) const {
  auto it = byName_.find(name);
  return it == byName_.end() ? 0 : it->second;
}

std::vector<int> VarTable::idsOfKind(VarKind kind) const {
  std::vector<int> out;
  for (int id = 1; id <= size(); ++id)
    if (vars_[static_cast<std::size_t>(id - 1)].kind == kind) out.push_back(id);
  return out;
}

bool normalizeClause(Clause& clause) {
  std::sort(clause.begin(), clause.end(), [](int l, int r) {
    return std::abs(l) != std::abs(r) ? std::abs(l) < std::abs(r) : l < r;
  });
  clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
  for (std::size_t x = 1; x < clause.size(); ++x)
    if (clause[x] == -clause[x - 1]) return false;
  return true;
}

// ---------------------------------------------------------------- Encoder

namespace {

std::string tripleName(char letter, const TripleKey& k) {
  return std::string(1, letter) + "_" + std::to_string(k.i) + "_" + std::to_string(k.j) + "_" + std::to_string(k.k);
}

std::vector<LitKind> kindsFor(PositionMode mode) {
  if (mode == PositionMode::GeneralPosition) return {LitKind::A};
  return {LitKind::A, LitKind::B, LitKind::C};
}

void appendNormalized(std::vector<Clause>& out, Clause clause) {
  if (normalizeClause(clause)) out.push_back(std::move(clause));
}

std::size_t quadIndex(int n, const std::array<int, 4>& q) {
  const std::size_t nn = static_cast<std::size_t>(n);
  return (((static_cast<std::size_t>(q[0] - 1) * nn + (q[1] - 1)) * nn + (q[2] - 1)) * nn) + (q[3] - 1);
}

}  // namespace

Encoder::Encoder(ProblemSpec spec) : spec_(std::move(spec)), sym_(SFoldSymmetry::identity(0)) {
  spec_.validate();
  sym_ = spec_.symmetry();
  const auto kinds = kindsFor(spec_.mode);
  classes_ = std::make_shared<LiteralClassTable>(sym_, kinds);
  orientationBase_ = 0;
  for (std::size_t c = 0; c < classes_->size(); ++c) {
    const auto& rep = classes_->classes()[c].representative;
    vars_.allocate(VarKind::Orientation, tripleName(kindLetter(rep.kind), rep.key), static_cast<int>(c));
  }
}

bool Encoder::hasContradictoryClass() const {
  return std::any_of(classes_->classes().begin(), classes_->classes().end(),
                     [](const LiteralClass& c) { return c.status == ClassStatus::Contradictory; });
}

int Encoder::orientationLit(int i, int j, int k, LitKind kind) const {
  const ClassRef ref = classes_->lookup(i, j, k, kind);
  return ref.polarity * (orientationBase_ + ref.classIndex + 1);
}

void Encoder::allocateOrderVars() {
  if (!orderVar_.empty()) return;
  const int n = spec_.n;
  orderVar_.assign(static_cast<std::size_t>(n + 1) * (n + 1), 0);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      orderVar_[static_cast<std::size_t>(i) * (n + 1) + j] =
          vars_.allocate(VarKind::Order, "ord_" + std::to_string(i) + "_" + std::to_string(j));
}

int Encoder::orderLit(int i, int j) const {
  if (orderVar_.empty()) throw std::logic_error("ordering variables not allocated");
  if (i == j) throw std::invalid_argument("order literal on equal indices");
  const int n = spec_.n;
  if (i < j) return orderVar_[static_cast<std::size_t>(i) * (n + 1) + j];
  return -orderVar_[static_cast<std::size_t>(j) * (n + 1) + i];
}

std::vector<Clause> Encoder::encodeLinearOrder() {
  allocateOrderVars();
  const int n = spec_.n;
  std::vector<Clause> out;
  // Totality and asymmetry hold structurally: one variable per unordered pair.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (i == j || j == k || i == k) continue;
        out.push_back({-orderLit(i, j), -orderLit(j, k), orderLit(i, k)});
      }
  return out;
}

std::vector<Clause> Encoder::encodeDynamicOrderingAxioms() {
  allocateOrderVars();
  const int n = spec_.n;
  std::vector<Clause> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
          if (std::max(j, k) < l) {
            // (i<j & i<k & i<l) -> a_ijk | -a_ijl | a_ikl
            appendNormalized(out, {-orderLit(i, j), -orderLit(i, k), -orderLit(i, l), orientationLit(i, j, k),
                                   -orientationLit(i, j, l), orientationLit(i, k, l)});
          }
          // (i<k & j<k & k<l) -> a_ijk | -a_ikl | a_jkl
          appendNormalized(out, {-orderLit(i, k), -orderLit(j, k), -orderLit(k, l), orientationLit(i, j, k),
                                 -orientationLit(i, k, l), orientationLit(j, k, l)});
        }
  return out;
}

std::vector<Clause> Encoder::encodeCollinearityAxioms() {
  if (spec_.mode != PositionMode::CollinearAllowed) throw std::logic_error("collinearity axioms need collinear mode");
  allocateOrderVars();
  const int n = spec_.n;
  std::vector<Clause> out;
  auto A = [&](int x, int y, int z) { return orientationLit(x, y, z, LitKind::A); };
  auto B = [&](int x, int y, int z) { return orientationLit(x, y, z, LitKind::B); };
  auto C = [&](int x, int y, int z) { return orientationLit(x, y, z, LitKind::C); };
  // guard -> (p <-> q), with guard a conjunction of literals.
  auto iff = [&](const Clause& guard, int p, int q) {
    Clause c1, c2;
    for (int g : guard) {
      c1.push_back(-g);
      c2.push_back(-g);
    }
    c1.push_back(-p);
    c1.push_back(q);
    c2.push_back(p);
    c2.push_back(-q);
    appendNormalized(out, std::move(c1));
    appendNormalized(out, std::move(c2));
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        const int cijk = C(i, j, k);
        for (int l = 1; l <= n; ++l) {
          if (l == i || l == j || l == k) continue;
          // (1) collinearity is transitive
          iff({cijk}, C(i, j, l), C(i, k, l));
          iff({cijk}, C(i, k, l), C(j, k, l));
          // (2)-(4) and their mirrored orderings (every order literal negated)
          for (int dir : {1, -1}) {
            const int ij = dir * orderLit(i, j);
            const int jk = dir * orderLit(j, k);
            const int ik = dir * orderLit(i, k);
            // (2) i < j < k: all three directions agree
            iff({ij, jk, cijk}, A(i, j, l), A(i, k, l));
            iff({ij, jk, cijk}, A(i, k, l), A(j, k, l));
            // (3) i < k < j
            iff({ik, -jk, cijk}, A(i, j, l), A(i, k, l));
            iff({ik, -jk, cijk}, A(i, j, l), B(j, k, l));
            // (4) k < i < j
            iff({-ik, ij, cijk}, A(i, j, l), B(i, k, l));
            iff({-ik, ij, cijk}, A(i, j, l), B(j, k, l));
          }
        }
      }
  return out;
}

std::vector<Clause> Encoder::encodeExactlyOne() {
  if (spec_.mode != PositionMode::CollinearAllowed) throw std::logic_error("exactly-one needs collinear mode");
  const int n = spec_.n;
  std::vector<Clause> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        const int a = orientationLit(i, j, k, LitKind::A);
        const int b = orientationLit(i, j, k, LitKind::B);
        const int c = orientationLit(i, j, k, LitKind::C);
        appendNormalized(out, {a, b, c});
        appendNormalized(out, {-a, -b});
        appendNormalized(out, {-a, -c});
        appendNormalized(out, {-b, -c});
      }
  return out;
}

int& Encoder::convSlot(const std::array<int, 4>& q) { return convVar_[quadIndex(spec_.n, q)]; }

int Encoder::convSlotValue(const std::array<int, 4>& q) const { return convVar_[quadIndex(spec_.n, q)]; }

void Encoder::allocateConvVars() {
  if (!convVar_.empty()) return;
  const int n = spec_.n;
  const std::size_t nn = static_cast<std::size_t>(n);
  convVar_.assign(nn * nn * nn * nn, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          const std::array<int, 4> q{i, j, k, l};
          if (!isLexMinInOrbit(q, sym_)) continue;
          convSlot(q) = vars_.allocate(VarKind::Conv, "conv_" + std::to_string(i) + "_" + std::to_string(j) + "_" +
                                                          std::to_string(k) + "_" + std::to_string(l));
        }
}

int Encoder::convLit(std::array<int, 4> quad) const {
  if (convVar_.empty()) throw std::logic_error("conv variables not allocated");
  std::sort(quad.begin(), quad.end());
  const auto rep = orbitMinimum(quad, sym_);
  return convSlotValue({rep[0], rep[1], rep[2], rep[3]});
}

std::vector<Clause> Encoder::encodeConvexityVars() {
  if (spec_.mode != PositionMode::GeneralPosition) throw std::logic_error("conv variables need general position");
  allocateConvVars();
  const int n = spec_.n;
  std::vector<Clause> out;
  // z <-> (p <-> q)
  auto xnor = [&](int z, int p, int q) {
    appendNormalized(out, {-z, -p, q});
    appendNormalized(out, {-z, p, -q});
    appendNormalized(out, {z, p, q});
    appendNormalized(out, {z, -p, -q});
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          const std::array<int, 4> q{i, j, k, l};
          const int conv = convSlotValue(q);
          if (conv == 0) continue;
          const std::string suffix =
              std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k) + "_" + std::to_string(l);
          const int x = vars_.allocate(VarKind::Aux, "convx_" + suffix);
          const int y = vars_.allocate(VarKind::Aux, "convy_" + suffix);
          // Four points are in convex position iff the product of their four
          // orientations is positive.
          xnor(x, orientationLit(i, j, k), orientationLit(i, j, l));
          xnor(y, orientationLit(i, k, l), orientationLit(j, k, l));
          xnor(conv, x, y);
        }
  return out;
}

std::vector<Clause> Encoder::encodeNoKGon(int k) {
  allocateConvVars();
  const int n = spec_.n;
  if (k < 4 || k > n) return {};
  std::vector<Clause> out;
  std::vector<int> subset(static_cast<std::size_t>(k));
  for (int x = 0; x < k; ++x) subset[static_cast<std::size_t>(x)] = x + 1;
  std::vector<int> quad(4);
  while (true) {
    if (isLexMinInOrbit(subset, sym_)) {
      Clause clause;
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
          for (int c = b + 1; c < k; ++c)
            for (int d = c + 1; d < k; ++d)
              clause.push_back(-convLit({subset[a], subset[b], subset[c], subset[d]}));
      appendNormalized(out, std::move(clause));
    }
    int pos = k - 1;
    while (pos >= 0 && subset[static_cast<std::size_t>(pos)] == n - k + pos + 1) --pos;
    if (pos < 0) break;
    ++subset[static_cast<std::size_t>(pos)];
    for (int x = pos + 1; x < k; ++x) subset[static_cast<std::size_t>(x)] = subset[static_cast<std::size_t>(x - 1)] + 1;
  }
  return out;
}

int Encoder::counterLit(int i, int j, int family, int m) const {
  if (i > j) std::swap(i, j);
  auto it = counterVars_.find({i, j, family});
  if (it == counterVars_.end()) throw std::out_of_range("no counter for pair");
  if (m < 0 || m > spec_.n - 2) throw std::out_of_range("counter level out of range");
  return it->second + m;
}

std::vector<Clause> Encoder::encodeImbalanceAtLeast(int c) {
  if (spec_.mode != PositionMode::CollinearAllowed) throw std::logic_error("imbalance needs collinear mode");
  const int n = spec_.n;
  std::vector<Clause> out;
  if (c <= 0) return out;
  const int N = n - 2;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const std::array<int, 2> pair{i, j};
      if (!isLexMinInOrbit(pair, sym_)) continue;
      int indicatorBase[2] = {0, 0};
      for (int family = 0; family < 2; ++family) {
        const LitKind kind = family == 0 ? LitKind::A : LitKind::B;
        const char tag = family == 0 ? 's' : 't';
        std::vector<int> items;
        for (int k = 1; k <= n; ++k)
          if (k != i && k != j) items.push_back(orientationLit(i, j, k, kind));
        const std::string pairName = std::to_string(i) + "_" + std::to_string(j);
        // Sequential counter: ladder[k][m] <-> at least m of the first k items.
        // Entries 0 denote the constants true (m == 0) or false (m > k).
        std::vector<std::vector<int>> ladder(static_cast<std::size_t>(N + 1));
        for (int k = 1; k <= N; ++k) {
          ladder[k].assign(static_cast<std::size_t>(k + 1), 0);
          for (int m = 1; m <= k; ++m)
            ladder[k][m] = vars_.allocate(VarKind::Aux, std::string("sinz_") + tag + "_" + pairName + "_" +
                                                            std::to_string(k) + "_" + std::to_string(m));
        }
        const int kTrue = 1 << 30;  // sentinel literals for constants
        const int kFalse = -(1 << 30);
        auto at = [&](int k, int m) -> int {
          if (m <= 0) return kTrue;
          if (m > k) return kFalse;
          return ladder[k][m];
        };
        // Emits a clause, dropping satisfied clauses and false literals.
        auto emit = [&](std::initializer_list<int> lits) {
          Clause clause;
          for (int lit : lits) {
            if (lit == kTrue) return;
            if (lit == kFalse) continue;
            clause.push_back(lit);
          }
          appendNormalized(out, std::move(clause));
        };
        auto neg = [&](int lit) { return lit == kTrue ? kFalse : (lit == kFalse ? kTrue : -lit); };
        for (int k = 1; k <= N; ++k) {
          const int x = items[static_cast<std::size_t>(k - 1)];
          for (int m = 1; m <= k; ++m) {
            const int r = ladder[k][m];
            const int keep = at(k - 1, m);
            const int step = at(k - 1, m - 1);
            // r <-> keep | (step & x)
            emit({-r, keep, x});
            emit({-r, keep, step});
            emit({neg(keep), r});
            emit({neg(step), -x, r});
          }
        }
        // Exact-count indicators: level m <-> (at least m) & !(at least m+1).
        indicatorBase[family] = vars_.size() + 1;
        for (int m = 0; m <= N; ++m) {
          const int ind = vars_.allocate(VarKind::Counter, std::string("cnt_") + tag + "_" + pairName + "_" +
                                                               std::to_string(m));
          const int atLeast = at(N, m);
          const int atLeastNext = at(N, m + 1);
          emit({-ind, atLeast});
          emit({-ind, neg(atLeastNext)});
          emit({neg(atLeast), atLeastNext, ind});
        }
        counterVars_[{i, j, family}] = indicatorBase[family];
      }
      for (int x = 0; x <= N; ++x)
        for (int y = 0; y <= N; ++y)
          if (std::abs(x - y) < c) out.push_back({-(indicatorBase[0] + x), -(indicatorBase[1] + y)});
    }
  return out;
}

std::vector<Clause> Encoder::encodeConvexLayerClauses() {
  std::vector<Clause> out;
  if (spec_.symmetryBreaking != SymmetryBreaking::ConvexLayersAndQuadrant) return out;
  const int s = sym_.s();
  std::set<Clause> seen;
  // Layer t+1 lies to the left of every directed edge i -> pi(i) of layer t.
  for (int t = 0; t + 1 < sym_.cycles(); ++t)
    for (int i = t * s + 1; i <= t * s + s; ++i)
      for (int j = (t + 1) * s + 1; j <= (t + 1) * s + s; ++j) {
        Clause c{orientationLit(i, sym_.apply(i), j)};
        if (seen.insert(c).second) out.push_back(std::move(c));
      }
  return out;
}

std::vector<Clause> Encoder::encodeQuadrantClauses() {
  std::vector<Clause> out;
  const int s = sym_.s();
  if (spec_.symmetryBreaking != SymmetryBreaking::ConvexLayersAndQuadrant || !spec_.quadrantClauses) return out;
  // The first point of every inner layer lies in the open sector swept
  // counterclockwise from the ray towards point 1 to the ray towards point 2.
  // Rotation puts exactly one point of each layer in that sector.
  std::vector<Clause> units;
  const int c = spec_.n;
  for (int i = s + 1; i + s - 1 <= sym_.cycles() * s; i += s) {
    if (sym_.hasCenter()) {
      units.push_back({orientationLit(c, 1, i)});
      units.push_back({-orientationLit(c, 2, i)});
    } else if (s % 2 == 0 && s >= 4) {
      // Lines 1 -> 1+s/2 and 2 -> 2+s/2 pass through the rotation center.
      units.push_back({-orientationLit(1, 1 + s / 2, i)});
      units.push_back({orientationLit(2, 2 + s / 2, i)});
    }
  }
  std::set<Clause> seen;
  for (auto& u : units)
    if (seen.insert(u).second) out.push_back(std::move(u));
  return out;
}

std::vector<Clause> Encoder::encodeAngularOrderClauses() {
  std::vector<Clause> out;
  if (spec_.symmetryBreaking != SymmetryBreaking::AngularOrder) return out;
  // After a generic rotation point 1 is the unique leftmost point; the others
  // are labeled by angle around it, ties (collinear with 1) by distance.
  for (int j = 2; j <= spec_.n; ++j) out.push_back({orderLit(1, j)});
  for (int i = 2; i <= spec_.n; ++i)
    for (int j = i + 1; j <= spec_.n; ++j) {
      if (spec_.mode == PositionMode::GeneralPosition) out.push_back({orientationLit(1, i, j)});
      else out.push_back({-orientationLit(1, i, j, LitKind::B)});
    }
  return out;
}

std::vector<Clause> Encoder::encodeSymmetryBreaking() {
  auto out = encodeConvexLayerClauses();
  for (auto& c : encodeQuadrantClauses()) out.push_back(std::move(c));
  for (auto& c : encodeAngularOrderClauses()) out.push_back(std::move(c));
  return out;
}

std::vector<Clause> Encoder::encodeForcedClasses() {
  std::vector<Clause> out;
  const auto& cls = classes_->classes();
  for (std::size_t c = 0; c < cls.size(); ++c) {
    const int var = orientationBase_ + static_cast<int>(c) + 1;
    if (cls[c].status == ClassStatus::ForcedTrue) out.push_back({var});
    if (cls[c].status == ClassStatus::ForcedFalse) out.push_back({-var});
  }
  return out;
}

CnfFormula Encoder::encode() {
  CnfFormula f;
  f.problem = spec_;
  f.classes = classes_;
  auto add = [&](const std::string& family, std::vector<Clause> clauses) {
    f.breakdown.push_back({family, clauses.size()});
    for (auto& c : clauses) f.clauses.push_back(std::move(c));
  };
  if (spec_.mode == PositionMode::GeneralPosition && hasContradictoryClass()) {
    f.vars = vars_;
    f.triviallyUnsat = true;
    f.clauses.push_back({});
    f.breakdown.push_back({"contradictory_class", 1});
    return f;
  }
  add("linear_order", encodeLinearOrder());
  add("dynamic_ordering", encodeDynamicOrderingAxioms());
  if (spec_.mode == PositionMode::CollinearAllowed) {
    add("exactly_one", encodeExactlyOne());
    add("collinearity", encodeCollinearityAxioms());
    add("forced_classes", encodeForcedClasses());
  }
  if (spec_.noKGon) {
    add("conv_definition", encodeConvexityVars());
    add("no_kgon", encodeNoKGon(*spec_.noKGon));
  }
  if (spec_.imbalanceAtLeast) add("imbalance", encodeImbalanceAtLeast(*spec_.imbalanceAtLeast));
  if (spec_.symmetryBreaking == SymmetryBreaking::ConvexLayersAndQuadrant) {
    add("symmetry_breaking_layers", encodeConvexLayerClauses());
    add("symmetry_breaking_quadrant", encodeQuadrantClauses());
  }
  if (spec_.symmetryBreaking == SymmetryBreaking::AngularOrder) add("symmetry_breaking_angular", encodeAngularOrderClauses());
  f.vars = vars_;
  return f;
}

// ---------------------------------------------------------------- ordering axioms imply CC axioms

CnfFormula buildPropositionTwoFormula(bool withDisjunction) {
  ProblemSpec spec;
  spec.n = 5;
  Encoder enc(spec);
  CnfFormula f;
  f.problem = spec;
  f.classes = nullptr;
  f.clauses = enc.encodeLinearOrder();
  f.breakdown.push_back({"linear_order", f.clauses.size()});
  auto doa = enc.encodeDynamicOrderingAxioms();
  f.breakdown.push_back({"dynamic_ordering", doa.size()});
  f.clauses.insert(f.clauses.end(), doa.begin(), doa.end());
  auto cc = ccAxiomClauses(5, [&](int i, int j, int k) { return enc.orientationLit(i, j, k); });
  VarTable vars = enc.vars();
  Clause selectors;
  std::size_t selectorClauses = 0;
  for (std::size_t c = 0; c < cc.size(); ++c) {
    const int y = vars.allocate(VarKind::Aux, "ycc_" + std::to_string(c + 1));
    selectors.push_back(y);
    for (int lit : cc[c]) {
      f.clauses.push_back({-lit, -y});
      ++selectorClauses;
    }
  }
  f.breakdown.push_back({"negated_cc_selectors", selectorClauses});
  if (withDisjunction) {
    f.clauses.push_back(selectors);
    f.breakdown.push_back({"selector_disjunction", 1});
  }
  f.vars = std::move(vars);
  return f;
}

// ---------------------------------------------------------------- DIMACS

void emitDimacs(const CnfFormula& formula, std::ostream& out) {
  if (formula.problem) out << "c symconf " << formula.problem->describe() << '\n';
  out << "p cnf " << formula.numVars() << ' ' << formula.clauses.size() << '\n';
  std::string line;
  for (const auto& clause : formula.clauses) {
    line.clear();
    for (int lit : clause) {
      line += std::to_string(lit);
      line += ' ';
    }
    line += "0\n";
    out << line;
  }
}

void emitVarMap(const CnfFormula& formula, std::ostream& out) {
  for (int id = 1; id <= formula.numVars(); ++id) out << id << ' ' << formula.vars.name(id) << '\n';
}

void writeFormulaFiles(const CnfFormula& formula, const std::string& stem) {
  std::ofstream cnf(stem + ".cnf");
  std::ofstream map(stem + ".map");
  if (!cnf || !map) throw std::runtime_error("cannot write " + stem + ".cnf/.map");
  emitDimacs(formula, cnf);
  emitVarMap(formula, map);
  if (!cnf || !map) throw std::runtime_error("I/O failure writing " + stem);
}

DimacsFile parseDimacs(std::istream& in) {
  DimacsFile out;
  std::string line;
  bool sawHeader = false;
  std::size_t declaredClauses = 0;
  Clause current;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == 'c') {
      const std::string tag = "c symconf ";
      if (line.rfind(tag, 0) == 0) out.problem = ProblemSpec::parseDescription(line.substr(tag.size()));
      continue;
    }
    if (line[0] == 'p') {
      std::istringstream hdr(line);
      std::string p, cnf;
      if (!(hdr >> p >> cnf >> out.numVars >> declaredClauses) || cnf != "cnf") {
        throw std::runtime_error("bad DIMACS header");
      }
      sawHeader = true;
      continue;
    }
    std::istringstream body(line);
    int lit;
    while (body >> lit) {
      if (lit == 0) {
        out.clauses.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
  }
  if (!sawHeader) throw std::runtime_error("missing DIMACS header");
  if (!current.empty()) out.clauses.push_back(std::move(current));
  return out;
}

DimacsFile readDimacsFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parseDimacs(in);
}

bool satisfiesAll(const std::vector<Clause>& clauses, const std::vector<bool>& model) {
  for (const auto& clause : clauses) {
    bool sat = false;
    for (int lit : clause) {
      const auto v = static_cast<std::size_t>(std::abs(lit));
      if (v < model.size() && model[v] == (lit > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

}  // namespace symconf
