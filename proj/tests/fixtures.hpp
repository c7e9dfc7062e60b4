#pragma once

// Published coordinate tables used as fixtures.

#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "symconf/geom.hpp"
#include "symconf/pointset_io.hpp"

namespace fixtures {

/// 16 points, 4-fold symmetric, no 6-gon.
inline const std::vector<std::pair<std::string, std::string>>& fourFoldText() {
  static const std::vector<std::pair<std::string, std::string>> t = {
      {"-30", "0"},       {"0", "-30"},      {"30", "0"},       {"0", "30"},
      {"-20", "-7/2"},    {"7/2", "-20"},    {"20", "7/2"},     {"-7/2", "20"},
      {"-13", "-6"},      {"6", "-13"},      {"13", "6"},       {"-6", "13"},
      {"-19/10", "-6/5"}, {"6/5", "-19/10"}, {"19/10", "6/5"},  {"-6/5", "19/10"}};
  return t;
}

/// 21 points in Q(sqrt 3), 2-everywhere-unbalanced.
inline const std::vector<std::pair<std::string, std::string>>& unbalancedText() {
  static const std::vector<std::pair<std::string, std::string>> t = {
      {"-3*rt3", "-1"},         {"36/11*rt3", "-20/11"}, {"3/2*rt3", "-5/2"},   {"rt3", "-1"},
      {"1/2*rt3", "1/2"},       {"961/520*rt3", "-961/520"}, {"-7/8*rt3", "-13/40"}, {"rt3", "5"},
      {"-28/11*rt3", "-4"},     {"-2*rt3", "-1"},        {"-rt3", "-1"},        {"0", "-1"},
      {"-961/520*rt3", "-961/520"}, {"11/40*rt3", "59/40"}, {"2*rt3", "-4"},    {"-8/11*rt3", "64/11"},
      {"1/2*rt3", "7/2"},       {"0", "2"},              {"-1/2*rt3", "1/2"},   {"0", "961/260"},
      {"3/5*rt3", "-23/20"}};
  return t;
}

inline symconf::ExactPointSet toExact(const std::vector<std::pair<std::string, std::string>>& t) {
  symconf::ExactPointSet out;
  for (const auto& [x, y] : t) out.push_back({symconf::parseCoordinate(x), symconf::parseCoordinate(y)});
  return out;
}

inline symconf::ExactPointSet fourFold() { return toExact(fourFoldText()); }
inline symconf::ExactPointSet unbalanced21() { return toExact(unbalancedText()); }

/// 5-fold configuration with center 16: seeds and rotation powers per index.
inline std::vector<symconf::HighPoint> fiveFold() {
  using symconf::RationalPoint;
  const RationalPoint a{-12, -17}, b{-15, 2}, c{-13, 0};
  const int powA[5] = {4, 0, 1, 2, 3};
  std::vector<symconf::HighPoint> out;
  for (int k : powA) out.push_back(symconf::rotateHigh(a, 5, k));
  for (int k = 0; k < 5; ++k) out.push_back(symconf::rotateHigh(b, 5, k));
  for (int k = 0; k < 5; ++k) out.push_back(symconf::rotateHigh(c, 5, k));
  out.push_back(symconf::rotateHigh(RationalPoint{0, 0}, 5, 0));
  return out;
}

/// Same tables in the oracle's own representation.
inline std::vector<oracle::QPoint> fourFoldOracle() {
  std::vector<oracle::QPoint> out;
  for (const auto& [x, y] : fourFoldText()) out.push_back({mpq_class(x), mpq_class(y)});
  for (auto& p : out) p.x.canonicalize(), p.y.canonicalize();
  return out;
}

inline oracle::Q3 parseQ3(const std::string& s) {
  // Forms used by the table: "p", "p/q", "p/q*rt3", "p*rt3", "rt3", "-rt3".
  const auto pos = s.find("rt3");
  if (pos == std::string::npos) {
    mpq_class v(s);
    v.canonicalize();
    return {v, 0};
  }
  std::string coef = s.substr(0, pos);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  if (coef.empty()) coef = "1";
  if (coef == "-") coef = "-1";
  mpq_class v(coef);
  v.canonicalize();
  return {0, v};
}

inline std::vector<oracle::Q3Point> unbalanced21Oracle() {
  std::vector<oracle::Q3Point> out;
  for (const auto& [x, y] : unbalancedText()) out.push_back({parseQ3(x), parseQ3(y)});
  return out;
}

}  // namespace fixtures
