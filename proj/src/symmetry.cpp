#include "symconf/symmetry.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "symconf/orientation_assignment.hpp"

namespace symconf {

char kindLetter(LitKind k) {
  switch (k) {
    case LitKind::A: return 'a';
    case LitKind::B: return 'b';
    case LitKind::C: return 'c';
  }
  return '?';
}

SignedLiteral canonicalize(int i, int j, int k, LitKind kind) {
  return canonicalize(i, j, k, kind, LiteralSemantics::GeneralPosition);
}

SignedLiteral canonicalize(int i, int j, int k, LitKind kind, LiteralSemantics sem) {
  if (i == j || j == k || i == k) throw std::invalid_argument("degenerate triple");
  const int parity = sortTriple(i, j, k);
  SignedLiteral out{kind, {i, j, k}, 1};
  if (kind == LitKind::C || parity > 0) return out;
  if (sem == LiteralSemantics::GeneralPosition) {
    out.polarity = -1;
  } else {
    out.kind = kind == LitKind::A ? LitKind::B : LitKind::A;
  }
  return out;
}

SFoldSymmetry::SFoldSymmetry(int n, int s, bool center) : n_(n), s_(s), center_(center) {
  if (n < 0 || s < 1) throw std::invalid_argument("invalid symmetry shape");
  if (s == 1) {
    center_ = false;
    return;
  }
  const int rem = n % s;
  if (center ? rem != 1 : rem != 0) {
    throw std::invalid_argument("symmetry needs n = m*s, or n = m*s + 1 with a center point");
  }
}

SFoldSymmetry SFoldSymmetry::fromShape(int n, int s) {
  return SFoldSymmetry(n, s, s > 1 && n % s == 1);
}

int SFoldSymmetry::apply(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("index out of range");
  if (center_ && i == n_) return i;
  const int block = (i - 1) / s_;
  const int offset = (i - 1) % s_;
  return block * s_ + (offset + 1) % s_ + 1;
}

int SFoldSymmetry::applyPower(int i, int t) const {
  if (i < 1 || i > n_) throw std::out_of_range("index out of range");
  if (center_ && i == n_) return i;
  t = ((t % s_) + s_) % s_;
  const int block = (i - 1) / s_;
  const int offset = (i - 1) % s_;
  return block * s_ + (offset + t) % s_ + 1;
}

int SFoldSymmetry::orbitRepresentative(int i) const {
  if (center_ && i == n_) return i;
  return ((i - 1) / s_) * s_ + 1;
}

int SFoldSymmetry::orbitOffset(int i) const {
  if (center_ && i == n_) return 0;
  return (i - 1) % s_;
}

SignedLiteral applyPermutationToLiteral(const SignedLiteral& lit, const SFoldSymmetry& sym, LiteralSemantics sem) {
  SignedLiteral image = canonicalize(sym.apply(lit.key.i), sym.apply(lit.key.j), sym.apply(lit.key.k), lit.kind, sem);
  image.polarity *= lit.polarity;
  return image;
}

LiteralClassTable::LiteralClassTable(const SFoldSymmetry& sym, std::span<const LitKind> kinds)
    : sym_(sym), kinds_(kinds.begin(), kinds.end()) {
  std::sort(kinds_.begin(), kinds_.end());
  kinds_.erase(std::unique(kinds_.begin(), kinds_.end()), kinds_.end());
  sem_ = hasKind(LitKind::B) ? LiteralSemantics::Collinear : LiteralSemantics::GeneralPosition;
  if (sem_ == LiteralSemantics::Collinear && !hasKind(LitKind::A)) {
    throw std::invalid_argument("collinear literal families need both A and B");
  }
  const int n = sym_.n();
  const std::size_t nn = static_cast<std::size_t>(n);
  index_.assign(3 * nn * nn * nn, ClassRef{});

  for (LitKind kind : kinds_) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
          const TripleKey key{i, j, k};
          if (index_[slot(kind, key)].classIndex >= 0) continue;
          LiteralClass cls;
          const SignedLiteral start{kind, key, 1};
          SignedLiteral cur = start;
          bool selfNegated = false;
          do {
            cls.members.push_back(cur);
            cur = applyPermutationToLiteral(cur, sym_, sem_);
          } while (!(cur.kind == start.kind && cur.key == start.key));
          if (cur.polarity < 0) selfNegated = true;
          std::sort(cls.members.begin(), cls.members.end());
          cls.members.erase(std::unique(cls.members.begin(), cls.members.end()), cls.members.end());
          // Normalize relative to the lexicographically smallest member.
          const SignedLiteral& smallest = *std::min_element(
              cls.members.begin(), cls.members.end(), [](const SignedLiteral& l, const SignedLiteral& r) {
                return std::tie(l.kind, l.key) < std::tie(r.kind, r.key);
              });
          const int flip = smallest.polarity;
          for (auto& m : cls.members) m.polarity *= flip;
          cls.representative = {smallest.kind, smallest.key, 1};
          if (selfNegated) cls.status = ClassStatus::Contradictory;
          if (sem_ == LiteralSemantics::Collinear && kind != LitKind::C) {
            const bool hasA = std::any_of(cls.members.begin(), cls.members.end(),
                                          [](const SignedLiteral& m) { return m.kind == LitKind::A; });
            const bool hasB = std::any_of(cls.members.begin(), cls.members.end(),
                                          [](const SignedLiteral& m) { return m.kind == LitKind::B; });
            if (hasA && hasB) cls.status = ClassStatus::ForcedFalse;
          }
          const int idx = static_cast<int>(classes_.size());
          for (const auto& m : cls.members) index_[slot(m.kind, m.key)] = {idx, m.polarity};
          classes_.push_back(std::move(cls));
        }
  }

  // Deterministic class order by representative.
  std::vector<int> order(classes_.size());
  for (std::size_t c = 0; c < order.size(); ++c) order[c] = static_cast<int>(c);
  std::sort(order.begin(), order.end(), [&](int l, int r) {
    return std::tie(classes_[l].representative.kind, classes_[l].representative.key) <
           std::tie(classes_[r].representative.kind, classes_[r].representative.key);
  });
  std::vector<LiteralClass> sorted;
  sorted.reserve(classes_.size());
  std::vector<int> newIndex(classes_.size());
  for (std::size_t c = 0; c < order.size(); ++c) {
    newIndex[order[c]] = static_cast<int>(c);
    sorted.push_back(std::move(classes_[order[c]]));
  }
  classes_ = std::move(sorted);
  for (auto& ref : index_)
    if (ref.classIndex >= 0) ref.classIndex = newIndex[ref.classIndex];

  // A triple whose A and B literals coincide can only be collinear.
  if (sem_ == LiteralSemantics::Collinear && hasKind(LitKind::C)) {
    for (const auto& cls : classes_) {
      if (cls.status != ClassStatus::ForcedFalse) continue;
      for (const auto& m : cls.members) {
        ClassRef c = index_[slot(LitKind::C, m.key)];
        classes_[c.classIndex].status = ClassStatus::ForcedTrue;
      }
    }
  }
}

bool LiteralClassTable::hasKind(LitKind k) const {
  return std::find(kinds_.begin(), kinds_.end(), k) != kinds_.end();
}

std::size_t LiteralClassTable::slot(LitKind kind, const TripleKey& key) const {
  const std::size_t n = static_cast<std::size_t>(sym_.n());
  return ((static_cast<std::size_t>(kind) * n + (key.i - 1)) * n + (key.j - 1)) * n + (key.k - 1);
}

ClassRef LiteralClassTable::lookup(const SignedLiteral& lit) const {
  if (!hasKind(lit.kind)) throw std::invalid_argument("literal kind not in class table");
  const auto& key = lit.key;
  if (!(1 <= key.i && key.i < key.j && key.j < key.k && key.k <= sym_.n())) {
    throw std::invalid_argument("literal key must be a sorted triple within range");
  }
  ClassRef ref = index_[slot(lit.kind, key)];
  ref.polarity *= lit.polarity;
  return ref;
}

ClassRef LiteralClassTable::lookup(int i, int j, int k, LitKind kind) const {
  return lookup(canonicalize(i, j, k, kind, sem_));
}

LiteralClassTable buildLiteralClasses(int n, const SFoldSymmetry& sym, std::span<const LitKind> kinds) {
  if (sym.n() != n) throw std::invalid_argument("symmetry size does not match n");
  return LiteralClassTable(sym, kinds);
}

std::vector<std::vector<int>> orbitOfIndexSet(std::span<const int> indices, const SFoldSymmetry& sym) {
  std::vector<std::vector<int>> orbit;
  for (int t = 0; t < sym.s(); ++t) {
    std::vector<int> image;
    image.reserve(indices.size());
    for (int i : indices) image.push_back(sym.applyPower(i, t));
    std::sort(image.begin(), image.end());
    if (std::find(orbit.begin(), orbit.end(), image) == orbit.end()) orbit.push_back(std::move(image));
  }
  return orbit;
}

std::vector<int> orbitMinimum(std::span<const int> indices, const SFoldSymmetry& sym) {
  std::vector<int> best;
  std::vector<int> image(indices.size());
  for (int t = 0; t < sym.s(); ++t) {
    for (std::size_t x = 0; x < indices.size(); ++x) image[x] = sym.applyPower(indices[x], t);
    std::sort(image.begin(), image.end());
    if (t == 0 || image < best) best = image;
  }
  return best;
}

bool isLexMinInOrbit(std::span<const int> indices, const SFoldSymmetry& sym) {
  std::vector<int> sorted(indices.begin(), indices.end());
  std::sort(sorted.begin(), sorted.end());
  return orbitMinimum(sorted, sym) == sorted;
}

}  // namespace symconf
