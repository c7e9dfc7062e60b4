#include "symconf/geom.hpp"

#include <boost/math/constants/constants.hpp>

namespace symconf {

int signQuadRational(const QuadRational& q) {
  const int sa = sgn(q.a);
  const int sb = sgn(q.b);
  if (sa == 0) return sb;
  if (sb == 0 || sa == sb) return sa;
  // Opposite signs: |a| vs |b|*sqrt(3), compared through squares.
  const Rational diff = q.a * q.a - 3 * q.b * q.b;
  return sa * sgn(diff);
}

QuadRational operator/(const QuadRational& l, const QuadRational& r) {
  const Rational norm = r.a * r.a - 3 * r.b * r.b;
  if (sgn(norm) == 0) throw std::domain_error("division by zero in Q(sqrt 3)");
  // l / r = l * conj(r) / norm(r)
  const QuadRational conj{r.a, -r.b};
  QuadRational num = l * conj;
  return {num.a / norm, num.b / norm};
}

double QuadRational::toDouble() const {
  static const double kSqrt3 = std::sqrt(3.0);
  return a.get_d() + b.get_d() * kSqrt3;
}

FloatPoint rotate(const FloatPoint& p, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {p.x * c - p.y * s, p.x * s + p.y * c};
}

QuadPoint rotateThirdTurns(const QuadPoint& p, int turns) {
  turns = ((turns % 3) + 3) % 3;
  QuadPoint out = p;
  // cos(2pi/3) = -1/2, sin(2pi/3) = sqrt(3)/2
  const QuadRational c{Rational(-1, 2), Rational(0)};
  const QuadRational s{Rational(0), Rational(1, 2)};
  for (int t = 0; t < turns; ++t) {
    QuadPoint next{out.x * c - out.y * s, out.x * s + out.y * c};
    out = std::move(next);
  }
  return out;
}

FloatPoint toFloat(const QuadPoint& p) { return {p.x.toDouble(), p.y.toDouble()}; }

FloatPointSet toFloat(const ExactPointSet& pts) {
  FloatPointSet out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(toFloat(p));
  return out;
}

ExactPointSet exactFromDoubles(const FloatPointSet& pts) {
  ExactPointSet out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw std::invalid_argument("non-finite coordinate");
    out.push_back({QuadRational(Rational(p.x)), QuadRational(Rational(p.y))});
  }
  return out;
}

namespace {

HighFloat toHigh(const Rational& r) {
  return HighFloat(r.get_num().get_str()) / HighFloat(r.get_den().get_str());
}

}  // namespace

HighPoint rotateHigh(const RationalPoint& seed, int s, int k) {
  const HighFloat angle = boost::math::constants::two_pi<HighFloat>() * k / s;
  const HighFloat c = cos(angle);
  const HighFloat sn = sin(angle);
  const HighFloat x = toHigh(seed.x);
  const HighFloat y = toHigh(seed.y);
  return {x * c - y * sn, x * sn + y * c};
}

HighPoint toHigh(const QuadPoint& p) {
  static const HighFloat kSqrt3 = sqrt(HighFloat(3));
  return {toHigh(p.x.a) + toHigh(p.x.b) * kSqrt3, toHigh(p.y.a) + toHigh(p.y.b) * kSqrt3};
}

std::optional<Orientation> certifiedOrient(const HighPoint& p, const HighPoint& q, const HighPoint& r) {
  using boost::multiprecision::abs;
  const HighFloat det = orientDeterminant(p, q, r);
  HighFloat scale = 1;
  for (const HighPoint* pt : {&p, &q, &r}) {
    scale = std::max(scale, abs(pt->x));
    scale = std::max(scale, abs(pt->y));
  }
  // Inputs carry relative error near 2^-330; 1e-80 leaves a wide margin.
  const HighFloat bound = HighFloat("1e-80") * scale * scale;
  if (abs(det) <= bound) return std::nullopt;
  return det > 0 ? Orientation::Counterclockwise : Orientation::Clockwise;
}

}  // namespace symconf
