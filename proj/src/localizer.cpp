#include "symconf/localizer.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

namespace symconf {

void SearchParams::validate() const {
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  if (topK < 1) throw std::invalid_argument("topK must be >= 1");
  if (ptMovements < 0) throw std::invalid_argument("ptMovements must be >= 0");
  if (!(minRadius > 0) || !(minRadius <= maxRadius)) throw std::invalid_argument("need 0 < minRadius <= maxRadius");
  if (resetRadius < 0) throw std::invalid_argument("resetRadius must be >= 0");
  if (restartThreshold < 0) throw std::invalid_argument("restartThreshold must be >= 0");
}

namespace {

void requireGeneralTargets(const OrientationAssignment& tau) {
  if (tau.hasCollinearTriple()) throw std::invalid_argument("collinear targets unsupported");
}

/// Dense copy of the target signs for fast lookup: sign(i, j, k) for i < j < k.
class TargetTable {
 public:
  explicit TargetTable(const OrientationAssignment& tau) : n_(tau.n()), v_(static_cast<std::size_t>(n_) * n_ * n_, 0) {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k)
          if (i != j && j != k && i != k) v_[idx(i, j, k)] = static_cast<std::int8_t>(toInt(tau.get(i + 1, j + 1, k + 1)));
  }
  /// 0-based, any order.
  int operator()(int i, int j, int k) const { return v_[idx(i, j, k)]; }
  int n() const { return n_; }

 private:
  std::size_t idx(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
  }
  int n_;
  std::vector<std::int8_t> v_;
};

inline bool unsat(const FloatPointSet& P, const TargetTable& T, int i, int j, int k) {
  const double det = orientDeterminant(P[i], P[j], P[k]);
  const int s = signOf(det);
  return s == 0 || s != T(i, j, k);
}

EvalResult evalTable(const FloatPointSet& P, const TargetTable& T) {
  const int n = T.n();
  EvalResult r;
  r.F.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (unsat(P, T, i, j, k)) {
          ++r.u;
          ++r.F[i];
          ++r.F[j];
          ++r.F[k];
        }
  return r;
}

/// Triples meeting `moved` (0-based), each attributed to its first moved member.
void localEvalInto(const FloatPointSet& P, const TargetTable& T, const std::vector<int>& moved,
                   const std::vector<int>& rank, EvalResult& out) {
  const int n = T.n();
  out.u = 0;
  out.F.assign(static_cast<std::size_t>(n), 0);
  for (int m : moved) {
    const int rm = rank[m];
    for (int j = 0; j < n; ++j) {
      if (j == m || rank[j] < rm) continue;
      for (int k = j + 1; k < n; ++k) {
        if (k == m || rank[k] < rm) continue;
        if (unsat(P, T, m, j, k)) {
          ++out.u;
          ++out.F[m];
          ++out.F[j];
          ++out.F[k];
        }
      }
    }
  }
}

FloatPoint sampleDisk(const FloatPoint& c, double r, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  while (true) {
    const double dx = u(rng), dy = u(rng);
    if (dx * dx + dy * dy <= 1.0) return {c.x + r * dx, c.y + r * dy};
  }
}

/// Geometry of the free points: each group is a moved index set whose members
/// follow its first element by rotation.
struct Layout {
  std::vector<std::vector<int>> groups;  // 0-based; groups[g][t] = pi^t(rep)
  std::vector<int> groupOf;              // -1 for pinned points
  std::vector<FloatPoint> rotations;     // (cos, sin) of 2 pi t / s
  int pinned = -1;
};

Layout makeLayout(int n, const std::optional<SFoldSymmetry>& sym) {
  Layout L;
  L.groupOf.assign(static_cast<std::size_t>(n), -1);
  if (!sym || sym->isIdentity()) {
    for (int i = 0; i < n; ++i) {
      L.groupOf[i] = static_cast<int>(L.groups.size());
      L.groups.push_back({i});
    }
    L.rotations = {{1.0, 0.0}};
    return L;
  }
  const int s = sym->s();
  for (int t = 0; t < s; ++t) {
    const double a = 2.0 * M_PI * t / s;
    L.rotations.push_back({std::cos(a), std::sin(a)});
  }
  for (int c = 0; c < sym->cycles(); ++c) {
    std::vector<int> g;
    for (int t = 0; t < s; ++t) g.push_back(sym->applyPower(c * s + 1, t) - 1);
    for (int x : g) L.groupOf[x] = static_cast<int>(L.groups.size());
    L.groups.push_back(std::move(g));
  }
  if (sym->hasCenter()) L.pinned = n - 1;
  return L;
}

void placeGroup(FloatPointSet& P, const Layout& L, int g, const FloatPoint& rep) {
  const auto& members = L.groups[g];
  for (std::size_t t = 0; t < members.size(); ++t) {
    const FloatPoint& r = L.rotations[t % L.rotations.size()];
    P[members[t]] = {rep.x * r.x - rep.y * r.y, rep.x * r.y + rep.y * r.x};
  }
}

struct Shared {
  Leaderboard board;
  std::atomic<bool> stop{false};
  std::mutex mu;
  bool success = false;
  RealizeResult result;
  std::atomic<long long> iterations{0};
  std::atomic<long long> restarts{0};
  explicit Shared(int topK) : board(topK) {}
};

class Worker {
 public:
  Worker(const OrientationAssignment& tau, const TargetTable& T, const SearchParams& params, const Layout& L,
         Shared& shared, int thread, std::chrono::steady_clock::time_point deadline, bool hasDeadline)
      : tau_(tau), T_(T), params_(params), L_(L), shared_(shared),
        rng_(params.seed ^ static_cast<std::uint64_t>(thread)), deadline_(deadline), hasDeadline_(hasDeadline) {
    n_ = T.n();
    rank_.assign(static_cast<std::size_t>(n_), n_);
  }

  void run() {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    P_.assign(static_cast<std::size_t>(n_), {0.0, 0.0});
    for (std::size_t g = 0; g < L_.groups.size(); ++g) placeGroup(P_, L_, static_cast<int>(g), {unit(rng_), unit(rng_)});
    EvalResult cur = evalTable(P_, T_);
    shared_.board.offer(P_, cur.u);
    long itsSinceCheck = 0;
    long long iterations = 0;
    EvalResult before, after;
    while (!shared_.stop.load(std::memory_order_relaxed)) {
      if (cur.u == 0) {
        if (tryFinish()) return;
        // Float orientations disagree with exact ones: restart nearby.
        restartFrom(P_, cur);
        continue;
      }
      if (hasDeadline_ && std::chrono::steady_clock::now() >= deadline_) break;
      if (params_.maxIterations > 0 && iterations >= params_.maxIterations) break;
      ++iterations;
      shared_.iterations.fetch_add(1, std::memory_order_relaxed);

      // Choose the point to move proportionally to its unsat constraints.
      std::vector<long> weights;
      std::vector<int> candidates;
      for (int x = 0; x < n_; ++x) {
        if (L_.groupOf[x] < 0) continue;
        candidates.push_back(x);
        weights.push_back(cur.F[x]);
      }
      const int i = weightedSample(candidates, weights, rng_);
      const int g = L_.groupOf[i];
      const auto& moved = L_.groups[g];
      for (std::size_t t = 0; t < moved.size(); ++t) rank_[moved[t]] = static_cast<int>(t);
      // The group representative drives the whole orbit.
      const int rep = moved.front();
      FloatPoint p = P_[rep];
      localEvalInto(P_, T_, moved, rank_, before);
      for (int step = 0; step <= params_.ptMovements; ++step) {
        const double r = std::max(params_.minRadius, params_.maxRadius / std::ldexp(1.0, step));
        const FloatPoint q = sampleDisk(p, r, rng_);
        std::vector<FloatPoint> saved;
        for (int x : moved) saved.push_back(P_[x]);
        placeGroup(P_, L_, g, q);
        localEvalInto(P_, T_, moved, rank_, after);
        if (after.u <= before.u) {
          for (int x = 0; x < n_; ++x) cur.F[x] += after.F[x] - before.F[x];
          const bool strict = after.u < before.u;
          cur.u += after.u - before.u;
          p = q;
          std::swap(before, after);
          if (strict) {
            shared_.board.offer(P_, cur.u);
            itsSinceCheck = 0;
          }
        } else {
          for (std::size_t t = 0; t < moved.size(); ++t) P_[moved[t]] = saved[t];
        }
        if (cur.u == 0) break;
      }
      for (int x : moved) rank_[x] = n_;
      if (params_.checkBookkeeping) {
        EvalResult fresh = evalTable(P_, T_);
        if (fresh.u != cur.u || fresh.F != cur.F) throw std::logic_error("incremental bookkeeping diverged");
      }
      ++itsSinceCheck;
      if (itsSinceCheck > params_.restartThreshold && cur.u > 0) {
        auto start = shared_.board.sample(rng_);
        restartFrom(start ? *start : P_, cur);
        itsSinceCheck = 0;
      }
    }
  }

 private:
  void restartFrom(const FloatPointSet& start, EvalResult& cur) {
    shared_.restarts.fetch_add(1, std::memory_order_relaxed);
    for (std::size_t g = 0; g < L_.groups.size(); ++g) {
      const int rep = L_.groups[g].front();
      placeGroup(P_, L_, static_cast<int>(g), sampleDisk(start[rep], params_.resetRadius, rng_));
    }
    cur = evalTable(P_, T_);
  }

  bool tryFinish() {
    auto snap = certifiedSnap(P_, tau_);
    if (!snap) return false;
    std::lock_guard<std::mutex> lock(shared_.mu);
    if (!shared_.success) {
      shared_.success = true;
      shared_.result.points = P_;
      shared_.result.exact = std::move(snap->first);
      shared_.result.snapDenominator = snap->second;
    }
    shared_.stop.store(true);
    return true;
  }

  const OrientationAssignment& tau_;
  const TargetTable& T_;
  const SearchParams& params_;
  const Layout& L_;
  Shared& shared_;
  std::mt19937_64 rng_;
  std::chrono::steady_clock::time_point deadline_;
  bool hasDeadline_;
  int n_;
  FloatPointSet P_;
  std::vector<int> rank_;
};

}  // namespace

EvalResult eval(const FloatPointSet& pts, const OrientationAssignment& tau) {
  requireGeneralTargets(tau);
  if (static_cast<int>(pts.size()) != tau.n()) throw std::invalid_argument("point count does not match assignment");
  return evalTable(pts, TargetTable(tau));
}

EvalResult localEvalSet(const FloatPointSet& pts, const OrientationAssignment& tau, const std::vector<int>& moved) {
  requireGeneralTargets(tau);
  const int n = tau.n();
  if (static_cast<int>(pts.size()) != n) throw std::invalid_argument("point count does not match assignment");
  std::vector<int> rank(static_cast<std::size_t>(n), n);
  std::vector<int> zeroBased;
  for (int m : moved) {
    if (m < 1 || m > n) throw std::out_of_range("point index out of range");
    if (rank[m - 1] < n) continue;
    rank[m - 1] = static_cast<int>(zeroBased.size());
    zeroBased.push_back(m - 1);
  }
  EvalResult out;
  localEvalInto(pts, TargetTable(tau), zeroBased, rank, out);
  return out;
}

std::vector<long> localEval(const FloatPointSet& pts, const OrientationAssignment& tau, int i) {
  return localEvalSet(pts, tau, {i}).F;
}

void Leaderboard::offer(const FloatPointSet& pts, long u) {
  std::lock_guard<std::mutex> lock(mu_);
  if (static_cast<int>(entries_.size()) >= topK_ && u >= entries_.back().second) return;
  auto pos = std::upper_bound(entries_.begin(), entries_.end(), u,
                              [](long v, const std::pair<FloatPointSet, long>& e) { return v < e.second; });
  entries_.insert(pos, {pts, u});
  if (static_cast<int>(entries_.size()) > topK_) entries_.pop_back();
}

std::optional<FloatPointSet> Leaderboard::sample(std::mt19937_64& rng) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (entries_.empty()) return std::nullopt;
  const long maxU = entries_.back().second;
  std::vector<long> weights;
  for (const auto& e : entries_) weights.push_back(maxU - e.second);
  return entries_[weightedSampleIndex(weights, rng)].first;
}

std::optional<long> Leaderboard::bestUnsat() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (entries_.empty()) return std::nullopt;
  return entries_.front().second;
}

std::optional<std::pair<FloatPointSet, long>> Leaderboard::best() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (entries_.empty()) return std::nullopt;
  return entries_.front();
}

std::size_t Leaderboard::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

std::optional<std::pair<RationalPointSet, long long>> certifiedSnap(const FloatPointSet& pts,
                                                                    const OrientationAssignment& tau) {
  for (long long den : {1000000LL, 1000000000LL, 1000000000000LL}) {
    RationalPointSet snapped = snapFloatToRational(pts, den);
    if (certify(snapped, tau).ok) return std::make_pair(std::move(snapped), den);
  }
  RationalPointSet exact = exactRational(pts);
  if (certify(exact, tau).ok) return std::make_pair(std::move(exact), 0LL);
  return std::nullopt;
}

RealizeResult realize(const OrientationAssignment& tau, const SearchParams& params,
                      const std::optional<SFoldSymmetry>& sym) {
  params.validate();
  if (!tau.isTotal()) throw std::invalid_argument("assignment must be total");
  requireGeneralTargets(tau);
  if (sym) {
    if (sym->n() != tau.n()) throw std::invalid_argument("symmetry size does not match assignment");
    if (!checkCombinatorialSymmetry(tau, *sym)) throw std::invalid_argument("assignment is not invariant under the symmetry");
  }
  const auto start = std::chrono::steady_clock::now();
  RealizeResult result;
  const int n = tau.n();
  if (n < 3) {
    result.success = true;
    for (int i = 0; i < n; ++i) result.points.push_back({static_cast<double>(i), 0.0});
    result.exact = exactRational(result.points);
    return result;
  }
  const TargetTable T(tau);
  const Layout L = makeLayout(n, sym);
  Shared shared(params.topK);
  const bool hasDeadline = params.budgetSeconds > 0;
  const auto deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                    std::chrono::duration<double>(hasDeadline ? params.budgetSeconds : 0.0));
  std::vector<std::unique_ptr<Worker>> workers;
  for (int t = 0; t < params.threads; ++t)
    workers.push_back(std::make_unique<Worker>(tau, T, params, L, shared, t, deadline, hasDeadline));
  if (params.threads == 1) {
    workers.front()->run();
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failureMu;
    for (auto& w : workers)
      pool.emplace_back([&, wp = w.get()] {
        try {
          wp->run();
        } catch (...) {
          std::lock_guard<std::mutex> lock(failureMu);
          if (!failure) failure = std::current_exception();
          shared.stop.store(true);
        }
      });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }
  result = shared.success ? shared.result : RealizeResult{};
  result.success = shared.success;
  if (!result.success) {
    if (auto best = shared.board.best()) {
      result.points = best->first;
      result.bestUnsat = best->second;
    }
  }
  result.iterations = shared.iterations.load();
  result.restarts = shared.restarts.load();
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace symconf
