#include "symconf/collinear_realizer.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "symconf/verify.hpp"

namespace symconf {

std::vector<std::array<int, 2>> LineFamily::uncoveredPairs() const {
  std::vector<std::vector<bool>> covered(static_cast<std::size_t>(n) + 1, std::vector<bool>(static_cast<std::size_t>(n) + 1));
  for (const auto& l : lines)
    for (int a : l)
      for (int b : l) covered[a][b] = true;
  std::vector<std::array<int, 2>> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (!covered[a][b]) out.push_back({a, b});
  return out;
}

LineFamily extractLines(const OrientationAssignment& tau) {
  LineFamily fam;
  fam.n = tau.n();
  const int n = tau.n();
  // Closure of the pair (a, b): itself plus every point collinear with it.
  auto closure = [&](int a, int b) {
    std::vector<int> line{a, b};
    for (int c = 1; c <= n; ++c)
      if (c != a && c != b && tau.get(a, b, c) == Orientation::Collinear) line.push_back(c);
    std::sort(line.begin(), line.end());
    return line;
  };
  std::set<std::vector<int>> seen;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      auto line = closure(a, b);
      if (line.size() < 3 || seen.count(line)) continue;
      for (std::size_t x = 0; x < line.size(); ++x)
        for (std::size_t y = x + 1; y < line.size(); ++y)
          if (closure(line[x], line[y]) != line) throw std::invalid_argument("inconsistent collinearity");
      seen.insert(line);
      fam.lines.push_back(std::move(line));
    }
  return fam;
}

int DependencyPlan::countKind(SlotKind k) const {
  return static_cast<int>(std::count_if(steps.begin(), steps.end(), [k](const PlanStep& s) { return s.kind == k; }));
}

DependencyPlan planDependencies(const LineFamily& fam, const std::optional<SFoldSymmetry>& sym) {
  DependencyPlan plan;
  plan.n = fam.n;
  const int n = fam.n;
  if (sym && !sym->isIdentity()) {
    if (sym->n() != n) throw std::invalid_argument("symmetry size does not match line family");
    plan.sym = sym;
  }
  std::vector<std::vector<int>> linesOf(static_cast<std::size_t>(n) + 1);
  for (std::size_t l = 0; l < fam.lines.size(); ++l)
    for (int p : fam.lines[l]) linesOf[p].push_back(static_cast<int>(l));
  std::vector<bool> resolved(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> order;  // resolution order, used to pick carrier anchors

  auto markResolved = [&](int p) {
    if (plan.sym) {
      for (int t = 0; t < plan.sym->s(); ++t) {
        const int q = plan.sym->applyPower(p, t);
        if (!resolved[q]) {
          resolved[q] = true;
          order.push_back(q);
        }
      }
    } else {
      resolved[p] = true;
      order.push_back(p);
    }
  };
  // First two resolved members of a line, if any.
  auto anchors = [&](int l) -> std::optional<std::array<int, 2>> {
    std::array<int, 2> out{0, 0};
    int found = 0;
    for (int q : order) {
      if (std::find(fam.lines[l].begin(), fam.lines[l].end(), q) == fam.lines[l].end()) continue;
      out[found++] = q;
      if (found == 2) return out;
    }
    return std::nullopt;
  };

  if (plan.sym && plan.sym->hasCenter()) {
    PlanStep step;
    step.point = n;
    step.kind = SlotKind::Pinned;
    step.firstParam = plan.numParams;
    plan.steps.push_back(step);
    markResolved(n);
  }
  while (true) {
    int bestPoint = 0, bestRank = -1;
    for (int x = 1; x <= n; ++x) {
      if (resolved[x]) continue;
      int determined = 0;
      for (int l : linesOf[x])
        if (anchors(l)) ++determined;
      const int rank = std::min(determined, 2);
      if (rank > bestRank) {
        bestRank = rank;
        bestPoint = x;
      }
    }
    if (bestPoint == 0) break;
    PlanStep step;
    step.point = bestPoint;
    step.firstParam = plan.numParams;
    std::vector<std::pair<int, std::array<int, 2>>> carriers;
    for (int l : linesOf[bestPoint])
      if (auto a = anchors(l)) carriers.push_back({l, *a});
    if (carriers.size() >= 2) {
      step.kind = SlotKind::Dependent;
      step.lineIndexA = carriers[0].first;
      step.lineA = carriers[0].second;
      step.lineIndexB = carriers[1].first;
      step.lineB = carriers[1].second;
    } else if (carriers.size() == 1) {
      step.kind = SlotKind::OnLine;
      step.lineIndexA = carriers[0].first;
      step.lineA = carriers[0].second;
      plan.numParams += 1;
    } else {
      step.kind = SlotKind::Free;
      plan.numParams += 2;
    }
    plan.steps.push_back(step);
    markResolved(bestPoint);
  }
  return plan;
}

namespace {

template <typename C>
Point<C> sub(const Point<C>& a, const Point<C>& b) {
  return {a.x - b.x, a.y - b.y};
}

template <typename C>
C cross(const Point<C>& a, const Point<C>& b) {
  return a.x * b.y - a.y * b.x;
}

/// Places every point of the plan; `rot(p, t)` rotates by t steps of the
/// symmetry, `parallel(den, u, v)` flags degenerate intersections.
template <typename C, typename Rot, typename Parallel>
std::optional<PointSet<C>> resolveGeneric(const DependencyPlan& plan, const std::vector<C>& params, Rot rot,
                                          Parallel parallel) {
  PointSet<C> P(static_cast<std::size_t>(plan.n));
  for (const auto& step : plan.steps) {
    Point<C> pos;
    const std::size_t f = static_cast<std::size_t>(step.firstParam);
    switch (step.kind) {
      case SlotKind::Free: pos = {params[f], params[f + 1]}; break;
      case SlotKind::Pinned: pos = {C(0), C(0)}; break;
      case SlotKind::OnLine: {
        const auto& a = P[step.lineA[0] - 1];
        const auto d = sub(P[step.lineA[1] - 1], a);
        pos = {a.x + params[f] * d.x, a.y + params[f] * d.y};
        break;
      }
      case SlotKind::Dependent: {
        const auto& a = P[step.lineA[0] - 1];
        const auto u = sub(P[step.lineA[1] - 1], a);
        const auto& b = P[step.lineB[0] - 1];
        const auto v = sub(P[step.lineB[1] - 1], b);
        const C den = cross(u, v);
        if (parallel(den, u, v)) return std::nullopt;
        const C t = cross(sub(b, a), v) / den;
        pos = {a.x + t * u.x, a.y + t * u.y};
        break;
      }
    }
    P[step.point - 1] = pos;
    if (plan.sym && step.kind != SlotKind::Pinned)
      for (int t = 1; t < plan.sym->s(); ++t) P[plan.sym->applyPower(step.point, t) - 1] = rot(pos, t);
  }
  return P;
}

std::vector<std::pair<double, double>> paramBounds(const DependencyPlan& plan, const ObjectiveParams& op) {
  std::vector<std::pair<double, double>> b(static_cast<std::size_t>(plan.numParams));
  for (const auto& step : plan.steps) {
    const std::size_t f = static_cast<std::size_t>(step.firstParam);
    if (step.kind == SlotKind::Free) b[f] = b[f + 1] = {-op.bound, op.bound};
    if (step.kind == SlotKind::OnLine) b[f] = {-op.lineParamBound, op.lineParamBound};
  }
  return b;
}

QuadPoint exactRotate(const QuadPoint& p, int s, int t) {
  t = ((t % s) + s) % s;
  switch (s) {
    case 1: return p;
    case 2: return t == 0 ? p : QuadPoint{-p.x, -p.y};
    case 3: return rotateThirdTurns(p, t);
    case 4: {
      QuadPoint q = p;
      for (int k = 0; k < t; ++k) q = {-q.y, q.x};
      return q;
    }
    case 6: {
      // 60 degrees = half turn followed by two thirds of a turn.
      QuadPoint q = rotateThirdTurns(p, 2 * t);
      return t % 2 ? QuadPoint{-q.x, -q.y} : q;
    }
    default: throw std::invalid_argument("exact rotation needs s in {1, 2, 3, 4, 6}");
  }
}

}  // namespace

std::optional<FloatPointSet> resolvePlan(const DependencyPlan& plan, const std::vector<double>& params) {
  if (static_cast<int>(params.size()) != plan.numParams) throw std::invalid_argument("parameter count mismatch");
  const int s = plan.sym ? plan.sym->s() : 1;
  auto rot = [s](const FloatPoint& p, int t) { return rotate(p, 2.0 * M_PI * t / s); };
  auto parallel = [](double den, const FloatPoint& u, const FloatPoint& v) {
    return std::abs(den) <= 1e-12 * std::hypot(u.x, u.y) * std::hypot(v.x, v.y) || !std::isfinite(den);
  };
  return resolveGeneric<double>(plan, params, rot, parallel);
}

int conservativeImbalance(const FloatPointSet& P, const ObjectiveParams& op, int* linesAtMin) {
  const int n = static_cast<int>(P.size());
  double scale = 0.0;
  for (const auto& p : P) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
  if (!std::isfinite(scale)) return INT_MIN;
  scale = std::max(scale, 1e-300);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (std::hypot(P[a].x - P[b].x, P[a].y - P[b].y) <= op.bandTolerance * scale) return INT_MIN;
  int best = INT_MAX, atMin = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const FloatPoint d = sub(P[b], P[a]);
      const double len = std::hypot(d.x, d.y);
      int left = 0, right = 0, unsure = 0;
      for (int z = 0; z < n; ++z) {
        if (z == a || z == b) continue;
        const double dist = cross(d, sub(P[z], P[a])) / len;
        if (std::abs(dist) <= op.onLineTolerance * scale) continue;
        if (std::abs(dist) <= op.bandTolerance * scale) ++unsure;
        else if (dist > 0) ++left;
        else ++right;
      }
      const int delta = std::max(0, std::abs(left - right) - unsure);
      if (delta < best) {
        best = delta;
        atMin = 1;
      } else if (delta == best) {
        ++atMin;
      }
    }
  if (linesAtMin) *linesAtMin = atMin;
  return best == INT_MAX ? 0 : best;
}

double imbalanceObjective(const std::vector<double>& params, const DependencyPlan& plan, const LineFamily&,
                          const ObjectiveParams& op) {
  auto P = resolvePlan(plan, params);
  if (!P) return -1e9;
  int atMin = 0;
  const int delta = conservativeImbalance(*P, op, &atMin);
  if (delta == INT_MIN) return -1e9;
  const double pairs = static_cast<double>(plan.n) * (plan.n - 1) / 2.0;
  return delta - atMin / (pairs + 1.0);
}

DEResult optimizeImbalance(const DependencyPlan& plan, const LineFamily& lines, int target, const DEParams& de,
                           const ObjectiveParams& op,
                           const std::function<bool(const std::vector<double>&, double)>& accept) {
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
  DEResult res;
  std::mt19937_64 rng(de.seed);
  const int D = plan.numParams;
  const auto bounds = paramBounds(plan, op);
  auto score = [&](const std::vector<double>& x) {
    ++res.evaluations;
    return imbalanceObjective(x, plan, lines, op);
  };
  // Objective values above target - 1 mean the conservative minimum reached the target.
  auto reached = [&](double s) { return s > target - 1.0; };
  if (D == 0) {
    res.best = {};
    res.bestScore = score(res.best);
    if (accept) accept(res.best, res.bestScore);
    res.seconds = elapsed();
    return res;
  }
  const int NP = std::max(5, de.populationFactor * D);
  std::vector<std::vector<double>> pop(static_cast<std::size_t>(NP), std::vector<double>(static_cast<std::size_t>(D)));
  std::vector<double> fit(static_cast<std::size_t>(NP));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < NP; ++i) {
    for (int d = 0; d < D; ++d) pop[i][d] = bounds[d].first + unit(rng) * (bounds[d].second - bounds[d].first);
    fit[i] = score(pop[i]);
  }
  int bestIdx = static_cast<int>(std::max_element(fit.begin(), fit.end()) - fit.begin());
  res.best = pop[bestIdx];
  res.bestScore = fit[bestIdx];
  bool offered = false;
  auto offer = [&]() {
    if (!accept || offered || !reached(res.bestScore)) return false;
    offered = true;
    return accept(res.best, res.bestScore);
  };
  if (offer()) {
    res.seconds = elapsed();
    return res;
  }
  std::uniform_int_distribution<int> pickIdx(0, NP - 1);
  std::uniform_int_distribution<int> pickDim(0, D - 1);
  std::vector<double> trial(static_cast<std::size_t>(D));
  while (true) {
    if (de.maxGenerations > 0 && res.generations >= de.maxGenerations) break;
    if (de.budgetSeconds > 0 && elapsed() >= de.budgetSeconds) break;
    if (!accept && reached(res.bestScore)) break;
    ++res.generations;
    const double F = de.fMin + unit(rng) * (de.fMax - de.fMin);
    for (int i = 0; i < NP; ++i) {
      int r1, r2, r3;
      do r1 = pickIdx(rng); while (r1 == i);
      do r2 = pickIdx(rng); while (r2 == i || r2 == r1);
      do r3 = pickIdx(rng); while (r3 == i || r3 == r1 || r3 == r2);
      const int jrand = pickDim(rng);
      for (int d = 0; d < D; ++d) {
        if (d == jrand || unit(rng) < de.crossover) {
          double v = pop[r1][d] + F * (pop[r2][d] - pop[r3][d]);
          if (v < bounds[d].first || v > bounds[d].second)
            v = bounds[d].first + unit(rng) * (bounds[d].second - bounds[d].first);
          trial[d] = v;
        } else {
          trial[d] = pop[i][d];
        }
      }
      const double f = score(trial);
      if (f >= fit[i]) {
        pop[i] = trial;
        fit[i] = f;
        if (f > res.bestScore) {
          res.bestScore = f;
          res.best = trial;
          offered = false;
        }
      }
    }
    if (offer()) break;
  }
  res.seconds = elapsed();
  return res;
}

ExactPointSet snapToExact(const std::vector<double>& params, const DependencyPlan& plan, long long maxDen) {
  if (static_cast<int>(params.size()) != plan.numParams) throw std::invalid_argument("parameter count mismatch");
  std::vector<QuadRational> exact;
  exact.reserve(params.size());
  for (double v : params) exact.emplace_back(snapToRational(v, maxDen));
  const int s = plan.sym ? plan.sym->s() : 1;
  auto rot = [s](const QuadPoint& p, int t) { return exactRotate(p, s, t); };
  auto parallel = [](const QuadRational& den, const QuadPoint&, const QuadPoint&) { return den == QuadRational(0); };
  auto P = resolveGeneric<QuadRational>(plan, exact, rot, parallel);
  if (!P) throw std::runtime_error("snapped configuration degenerates: parallel defining lines");
  for (std::size_t a = 0; a < P->size(); ++a)
    for (std::size_t b = a + 1; b < P->size(); ++b)
      if ((*P)[a] == (*P)[b]) throw std::runtime_error("snapped configuration degenerates: coincident points");
  return *P;
}

CollinearRealizeResult realizeCollinear(const OrientationAssignment& tau, int target, const DEParams& de,
                                        const std::optional<SFoldSymmetry>& sym, const ObjectiveParams& op) {
  const auto start = std::chrono::steady_clock::now();
  if (sym && !checkCombinatorialSymmetry(tau, *sym)) {
    throw std::invalid_argument("assignment is not invariant under the symmetry");
  }
  const LineFamily fam = extractLines(tau);
  const DependencyPlan plan = planDependencies(fam, sym);
  CollinearRealizeResult out;
  out.familyLines = static_cast<int>(fam.lines.size());
  out.dependentPoints = plan.dependentCount();
  out.exactDelta = -1;

  auto consider = [&](const std::vector<double>& params) {
    for (long long den : {1000000LL, 10000000LL, 100000000LL, 1000000000LL}) {
      ExactPointSet P;
      try {
        P = snapToExact(params, plan, den);
      } catch (const std::runtime_error&) {
        continue;
      }
      const int delta = minImbalance(P).delta;
      if (delta > out.exactDelta) {
        out.exactDelta = delta;
        out.exact = P;
      }
      if (delta >= target) return true;
    }
    return false;
  };
  auto accept = [&](const std::vector<double>& params, double) {
    if (consider(params)) {
      out.success = true;
      return true;
    }
    return false;
  };
  const DEResult r = optimizeImbalance(plan, fam, target, de, op, accept);
  out.bestScore = r.bestScore;
  out.generations = r.generations;
  if (!out.success && out.exactDelta < 0) consider(r.best);
  if (out.exactDelta < 0) out.exactDelta = 0;
  if (!out.exact.empty()) {
    for (const auto& line : fam.lines) {
      bool exactLine = true;
      for (std::size_t k = 2; k < line.size() && exactLine; ++k)
        exactLine = orient(out.exact[line[0] - 1], out.exact[line[1] - 1], out.exact[line[k] - 1]) == Orientation::Collinear;
      out.exactLines += exactLine;
    }
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace symconf
