#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gmpxx.h>

namespace symconf {

/// Arbitrary-precision rational number; GMP keeps it canonical (gcd 1, positive denominator).
using Rational = mpq_class;

/// a + b*sqrt(3) with rational a and b.
struct QuadRational {
  Rational a{0};
  Rational b{0};

  QuadRational() = default;
  QuadRational(Rational ra, Rational rb = Rational(0)) : a(std::move(ra)), b(std::move(rb)) {}
  QuadRational(long v) : a(v), b(0) {}

  bool isRational() const { return sgn(b) == 0; }
  double toDouble() const;

  friend QuadRational operator+(const QuadRational& l, const QuadRational& r) {
    return {l.a + r.a, l.b + r.b};
  }
  friend QuadRational operator-(const QuadRational& l, const QuadRational& r) {
    return {l.a - r.a, l.b - r.b};
  }
  friend QuadRational operator-(const QuadRational& v) { return {-v.a, -v.b}; }
  friend QuadRational operator*(const QuadRational& l, const QuadRational& r) {
    return {l.a * r.a + 3 * l.b * r.b, l.a * r.b + l.b * r.a};
  }
  /// Throws std::domain_error on division by zero.
  friend QuadRational operator/(const QuadRational& l, const QuadRational& r);

  friend bool operator==(const QuadRational& l, const QuadRational& r) {
    return l.a == r.a && l.b == r.b;
  }
};

/// Exact sign of a + b*sqrt(3).
int signQuadRational(const QuadRational& q);

/// Total order on QuadRational via the sign of the difference.
inline bool operator<(const QuadRational& l, const QuadRational& r) {
  return signQuadRational(l - r) < 0;
}

inline int signOf(double v) { return (v > 0.0) - (v < 0.0); }
inline int signOf(const Rational& v) { return sgn(v); }
inline int signOf(const QuadRational& v) { return signQuadRational(v); }

template <typename C>
struct Point {
  C x{};
  C y{};

  friend bool operator==(const Point& l, const Point& r) { return l.x == r.x && l.y == r.y; }
};

using FloatPoint = Point<double>;
using RationalPoint = Point<Rational>;
using QuadPoint = Point<QuadRational>;

template <typename C>
using PointSet = std::vector<Point<C>>;

using FloatPointSet = PointSet<double>;
using ExactPointSet = PointSet<QuadRational>;

enum class Orientation : std::int8_t { Clockwise = -1, Collinear = 0, Counterclockwise = 1 };

inline int toInt(Orientation o) { return static_cast<int>(o); }
inline Orientation orientationFromSign(int s) {
  return s > 0 ? Orientation::Counterclockwise : (s < 0 ? Orientation::Clockwise : Orientation::Collinear);
}
inline Orientation operator-(Orientation o) { return orientationFromSign(-toInt(o)); }

/// Signed doubled area of (p, q, r): (q-p) x (r-p).
template <typename C>
C orientDeterminant(const Point<C>& p, const Point<C>& q, const Point<C>& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

/// Triple orientation. For doubles the determinant sign is taken with no epsilon.
template <typename C>
Orientation orient(const Point<C>& p, const Point<C>& q, const Point<C>& r) {
  return orientationFromSign(signOf(orientDeterminant(p, q, r)));
}

/// Rotation about the origin by `angle` radians.
FloatPoint rotate(const FloatPoint& p, double angle);

/// Exact rotation by a multiple of 120 degrees: cos and sin lie in Q(sqrt 3).
QuadPoint rotateThirdTurns(const QuadPoint& p, int turns);

FloatPoint toFloat(const QuadPoint& p);
FloatPointSet toFloat(const ExactPointSet& pts);
ExactPointSet exactFromDoubles(const FloatPointSet& pts);

/// ~330-bit binary float for point sets whose coordinates leave Q(sqrt 3),
/// such as rotations by 2*pi/5.
using HighFloat = boost::multiprecision::cpp_bin_float_100;
using HighPoint = Point<HighFloat>;

/// rho^k(seed) for the rotation by 2*pi/s.
HighPoint rotateHigh(const RationalPoint& seed, int s, int k);
HighPoint toHigh(const QuadPoint& p);

/// Orientation whose sign is certain given the working precision; nullopt
/// when the determinant is too close to zero to decide.
std::optional<Orientation> certifiedOrient(const HighPoint& p, const HighPoint& q, const HighPoint& r);

}  // namespace symconf
