#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "symconf/geom.hpp"

namespace symconf {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coordinate grammar: INT, INT/INT, or a sum of a rational term and a
// "<rational>*rt3" term (either may be omitted when zero). Decimal literals
// such as 0.25 or 1e-3 are also accepted and converted exactly.
QuadRational parseCoordinate(std::string_view text);
std::string formatCoordinate(const QuadRational& v);
std::string formatRational(const Rational& v);
/// 17 significant digits, round-trips every double.
std::string formatDouble(double v);

ExactPointSet readPointSet(std::istream& in);
ExactPointSet readPointSetFile(const std::string& path);

void writePointSet(std::ostream& out, const ExactPointSet& pts);
void writePointSet(std::ostream& out, const FloatPointSet& pts);
void writePointSetFile(const std::string& path, const ExactPointSet& pts);
void writePointSetFile(const std::string& path, const FloatPointSet& pts);

}  // namespace symconf
