#pragma once

#include <string>
#include <vector>

#include "symconf/geom.hpp"

namespace symconf {

struct PlotOptions {
  /// Index sets drawn as segments between their extreme points.
  std::vector<std::vector<int>> lines;
  bool labels = true;
  /// Draw rays from the origin through each point of the first orbit.
  int symmetryGuides = 0;
};

/// Deterministic SVG 1.1 rendering on a 600x600 canvas with a 5% margin.
std::string renderSvg(const FloatPointSet& pts, const PlotOptions& options = {});

}  // namespace symconf
