#include "symconf/verify.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

namespace symconf {

namespace {

template <typename C>
CertifyResult certifyImpl(const PointSet<C>& pts, const OrientationAssignment& tau) {
  if (static_cast<int>(pts.size()) != tau.n()) throw std::invalid_argument("point count does not match assignment");
  CertifyResult r;
  const int n = tau.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        const Orientation actual = orient(pts[i - 1], pts[j - 1], pts[k - 1]);
        const Orientation expected = tau.get(i, j, k);
        if (actual != expected) r.violations.push_back({{i, j, k}, expected, actual});
      }
  r.ok = r.violations.empty();
  return r;
}

void requireGeneralPosition(const OrientationAssignment& tau) {
  if (tau.hasCollinearTriple()) throw std::invalid_argument("general position required");
}

/// Dense table of convexity over sorted quadruples.
class ConvTable {
 public:
  explicit ConvTable(const OrientationAssignment& tau) : n_(tau.n()), bits_(static_cast<std::size_t>(n_) * n_ * n_ * n_) {
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j)
        for (int k = j + 1; k <= n_; ++k)
          for (int l = k + 1; l <= n_; ++l) bits_[idx(i, j, k, l)] = convexQuad(tau, i, j, k, l);
  }
  bool operator()(int i, int j, int k, int l) const { return bits_[idx(i, j, k, l)]; }

 private:
  std::size_t idx(int i, int j, int k, int l) const {
    const std::size_t n = static_cast<std::size_t>(n_);
    return ((static_cast<std::size_t>(i - 1) * n + (j - 1)) * n + (k - 1)) * n + (l - 1);
  }
  int n_;
  std::vector<bool> bits_;
};

}  // namespace

CertifyResult certify(const RationalPointSet& pts, const OrientationAssignment& tau) { return certifyImpl(pts, tau); }
CertifyResult certify(const ExactPointSet& pts, const OrientationAssignment& tau) { return certifyImpl(pts, tau); }

Rational snapToRational(double x, long long maxDen) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite coordinate");
  if (maxDen < 1) throw std::invalid_argument("denominator bound must be positive");
  Rational rest(x);  // exact value of the double
  const mpz_class bound(static_cast<double>(maxDen));
  // Convergent recurrence p = a p1 + p2, q = a q1 + q2.
  mpz_class p1(1), p2(0), q1(0), q2(1);
  while (true) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    const mpz_class p = a * p1 + p2;
    const mpz_class q = a * q1 + q2;
    if (q > bound) break;
    p2 = p1;
    p1 = p;
    q2 = q1;
    q1 = q;
    const Rational frac = rest - Rational(a);
    if (sgn(frac) == 0) break;
    rest = 1 / frac;
  }
  Rational out(p1, q1);
  out.canonicalize();
  return out;
}

RationalPointSet snapFloatToRational(const FloatPointSet& pts, long long maxDen) {
  RationalPointSet out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back({snapToRational(p.x, maxDen), snapToRational(p.y, maxDen)});
  return out;
}

RationalPointSet exactRational(const FloatPointSet& pts) {
  RationalPointSet out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw std::invalid_argument("non-finite coordinate");
    out.push_back({Rational(p.x), Rational(p.y)});
  }
  return out;
}

ExactPointSet toQuad(const RationalPointSet& pts) {
  ExactPointSet out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back({QuadRational(p.x), QuadRational(p.y)});
  return out;
}

OrientationAssignment orientationsOf(const ExactPointSet& pts) { return OrientationAssignment::fromPoints(pts); }
OrientationAssignment orientationsOf(const RationalPointSet& pts) { return OrientationAssignment::fromPoints(pts); }

OrientationAssignment orientationsOf(const std::vector<HighPoint>& pts) {
  const int n = static_cast<int>(pts.size());
  OrientationAssignment tau(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        auto o = certifiedOrient(pts[i - 1], pts[j - 1], pts[k - 1]);
        if (!o) throw std::runtime_error("orientation undecidable at working precision");
        tau.set(i, j, k, *o);
      }
  return tau;
}

bool convexQuad(const OrientationAssignment& tau, int i, int j, int k, int l) {
  const int p = toInt(tau.get(i, j, k)) * toInt(tau.get(i, j, l)) * toInt(tau.get(i, k, l)) * toInt(tau.get(j, k, l));
  return p > 0;
}

long long countKGons(const OrientationAssignment& tau, int k) {
  requireGeneralPosition(tau);
  const int n = tau.n();
  if (k < 1 || k > n) return 0;
  if (k <= 3) {
    long long c = 1;
    for (int x = 0; x < k; ++x) c = c * (n - x) / (x + 1);
    return c;
  }
  const ConvTable conv(tau);
  long long count = 0;
  std::vector<int> chosen;
  // Depth-first extension keeping every 4-subset convex.
  auto extend = [&](auto&& self, int next) -> void {
    if (static_cast<int>(chosen.size()) == k) {
      ++count;
      return;
    }
    for (int x = next; x <= n - (k - static_cast<int>(chosen.size())) + 1; ++x) {
      bool ok = true;
      const int m = static_cast<int>(chosen.size());
      for (int a = 0; a < m && ok; ++a)
        for (int b = a + 1; b < m && ok; ++b)
          for (int c = b + 1; c < m && ok; ++c)
            if (!conv(chosen[a], chosen[b], chosen[c], x)) ok = false;
      if (!ok) continue;
      chosen.push_back(x);
      self(self, x + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 1);
  return count;
}

long long countKGons(const ExactPointSet& pts, int k) { return countKGons(orientationsOf(pts), k); }

ImbalanceResult minImbalance(const OrientationAssignment& tau) {
  const int n = tau.n();
  if (n < 2) throw std::invalid_argument("need at least two points");
  ImbalanceResult best{INT_MAX, {0, 0}};
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      int left = 0, right = 0;
      for (int c = 1; c <= n; ++c) {
        if (c == a || c == b) continue;
        const int o = toInt(tau.get(a, b, c));
        left += o > 0;
        right += o < 0;
      }
      const int d = std::abs(left - right);
      if (d < best.delta) best = {d, {a, b}};
    }
  return best;
}

ImbalanceResult minImbalance(const ExactPointSet& pts) {
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      if (pts[a] == pts[b]) throw std::invalid_argument("duplicate points");
  return minImbalance(orientationsOf(pts));
}

std::vector<std::vector<int>> convexLayers(const OrientationAssignment& tau) {
  requireGeneralPosition(tau);
  std::vector<int> rest(static_cast<std::size_t>(tau.n()));
  for (int i = 0; i < tau.n(); ++i) rest[static_cast<std::size_t>(i)] = i + 1;
  std::vector<std::vector<int>> layers;
  while (!rest.empty()) {
    std::vector<int> hull;
    if (rest.size() <= 3) {
      hull = rest;
    } else {
      std::vector<bool> onHull(static_cast<std::size_t>(tau.n()) + 1, false);
      // x -> y is a counterclockwise hull edge iff every other point is to its left.
      for (int x : rest)
        for (int y : rest) {
          if (x == y || (onHull[x] && onHull[y])) continue;
          bool edge = true;
          for (int z : rest) {
            if (z == x || z == y) continue;
            if (tau.get(x, y, z) != Orientation::Counterclockwise) {
              edge = false;
              break;
            }
          }
          if (edge) onHull[x] = onHull[y] = true;
        }
      for (int x : rest)
        if (onHull[x]) hull.push_back(x);
    }
    std::vector<int> remaining;
    std::set_difference(rest.begin(), rest.end(), hull.begin(), hull.end(), std::back_inserter(remaining));
    layers.push_back(std::move(hull));
    rest = std::move(remaining);
  }
  return layers;
}

std::vector<std::vector<int>> convexLayers(const ExactPointSet& pts) { return convexLayers(orientationsOf(pts)); }

bool checkCombinatorialSymmetry(const OrientationAssignment& tau, const SFoldSymmetry& sym) {
  if (sym.n() != tau.n()) throw std::invalid_argument("symmetry size does not match assignment");
  const int n = tau.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (tau.get(i, j, k) != tau.get(sym.apply(i), sym.apply(j), sym.apply(k))) return false;
  return true;
}

bool checkCombinatorialSymmetry(const ExactPointSet& pts, const SFoldSymmetry& sym) {
  return checkCombinatorialSymmetry(orientationsOf(pts), sym);
}

StatsReport computeStats(const OrientationAssignment& tau, const std::optional<SFoldSymmetry>& sym) {
  StatsReport r;
  r.n = tau.n();
  r.generalPosition = !tau.hasCollinearTriple();
  if (r.generalPosition) {
    for (int k = 4; k <= 7; ++k) r.kGons[static_cast<std::size_t>(k - 4)] = countKGons(tau, k);
    r.layers = convexLayers(tau);
  }
  if (r.n >= 2) r.imbalance = minImbalance(tau);
  if (sym) {
    r.symmetryOrder = sym->s();
    r.symmetric = checkCombinatorialSymmetry(tau, *sym);
  }
  return r;
}

namespace {

std::string joinLayer(const std::vector<int>& layer) {
  std::string s = "{";
  for (std::size_t x = 0; x < layer.size(); ++x) s += (x ? "," : "") + std::to_string(layer[x]);
  return s + "}";
}

}  // namespace

std::string formatReport(const StatsReport& r) {
  std::ostringstream out;
  out << "points: " << r.n << '\n';
  if (r.certification) {
    out << "certified: " << (r.certification->ok ? "true" : "false") << '\n';
    for (const auto& v : r.certification->violations) {
      out << "  violation (" << v.triple.i << "," << v.triple.j << "," << v.triple.k << "): expected "
          << toInt(v.expected) << " actual " << toInt(v.actual) << '\n';
    }
  }
  out << "general position: " << (r.generalPosition ? "true" : "false") << '\n';
  if (r.generalPosition) {
    for (int k = 4; k <= 7; ++k) {
      const long long c = r.kGons[static_cast<std::size_t>(k - 4)];
      out << "no " << k << "-gon: " << (c == 0 ? "true" : "false") << "; " << k << "-gons: " << c << '\n';
    }
    out << "layers:";
    for (const auto& l : r.layers) out << ' ' << joinLayer(l);
    out << '\n';
  }
  if (r.n >= 2) {
    out << "Δ_min = " << r.imbalance.delta << " (line " << r.imbalance.witness[0] << "-" << r.imbalance.witness[1]
        << ")\n";
  }
  if (r.symmetric) out << r.symmetryOrder << "-fold symmetric: " << (*r.symmetric ? "true" : "false") << '\n';
  return out.str();
}

std::string formatSummary(const StatsReport& r) {
  std::ostringstream out;
  out << "n=" << r.n << '\n';
  if (r.certification) out << "certified=" << (r.certification->ok ? 1 : 0) << '\n';
  out << "general_position=" << (r.generalPosition ? 1 : 0) << '\n';
  if (r.generalPosition) {
    for (int k = 4; k <= 7; ++k) out << "gons_" << k << "=" << r.kGons[static_cast<std::size_t>(k - 4)] << '\n';
    out << "layers=" << r.layers.size() << '\n';
    for (std::size_t t = 0; t < r.layers.size(); ++t) out << "layer_" << t + 1 << "=" << joinLayer(r.layers[t]) << '\n';
  }
  if (r.n >= 2) out << "delta_min=" << r.imbalance.delta << '\n';
  if (r.symmetric) out << "symmetric=" << (*r.symmetric ? 1 : 0) << '\n';
  return out.str();
}

}  // namespace symconf
