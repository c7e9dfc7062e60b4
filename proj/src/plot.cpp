#include "symconf/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace symconf {

namespace {

constexpr double kCanvas = 600.0;
constexpr double kMargin = 0.05 * kCanvas;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string renderSvg(const FloatPointSet& pts, const PlotOptions& options) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"600\" height=\"600\" fill=\"white\"/>\n";
  if (pts.empty()) {
    out << "</svg>\n";
    return out.str();
  }
  double minX = pts[0].x, maxX = pts[0].x, minY = pts[0].y, maxY = pts[0].y;
  for (const auto& p : pts) {
    minX = std::min(minX, p.x);
    maxX = std::max(maxX, p.x);
    minY = std::min(minY, p.y);
    maxY = std::max(maxY, p.y);
  }
  const double span = std::max({maxX - minX, maxY - minY, 1e-12});
  const double scale = (kCanvas - 2 * kMargin) / span;
  const double offX = kMargin + ((kCanvas - 2 * kMargin) - (maxX - minX) * scale) / 2;
  const double offY = kMargin + ((kCanvas - 2 * kMargin) - (maxY - minY) * scale) / 2;
  auto sx = [&](double x) { return offX + (x - minX) * scale; };
  auto sy = [&](double y) { return kCanvas - (offY + (y - minY) * scale); };

  if (options.symmetryGuides > 1) {
    const double r = span;
    for (int t = 0; t < options.symmetryGuides; ++t) {
      const double a = std::atan2(pts[0].y, pts[0].x) + 2.0 * M_PI * t / options.symmetryGuides;
      out << "<line x1=\"" << num(sx(0)) << "\" y1=\"" << num(sy(0)) << "\" x2=\"" << num(sx(r * std::cos(a)))
          << "\" y2=\"" << num(sy(r * std::sin(a))) << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 4\"/>\n";
    }
  }
  for (const auto& line : options.lines) {
    if (line.size() < 2) continue;
    // Extreme points along the direction of the first two members.
    const FloatPoint& a = pts[line[0] - 1];
    const FloatPoint& b = pts[line[1] - 1];
    const double dx = b.x - a.x, dy = b.y - a.y;
    auto param = [&](int i) { return (pts[i - 1].x - a.x) * dx + (pts[i - 1].y - a.y) * dy; };
    int lo = line[0], hi = line[0];
    for (int i : line) {
      if (param(i) < param(lo)) lo = i;
      if (param(i) > param(hi)) hi = i;
    }
    out << "<line x1=\"" << num(sx(pts[lo - 1].x)) << "\" y1=\"" << num(sy(pts[lo - 1].y)) << "\" x2=\""
        << num(sx(pts[hi - 1].x)) << "\" y2=\"" << num(sy(pts[hi - 1].y)) << "\" stroke=\"#3366cc\" stroke-width=\"1\"/>\n";
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out << "<circle cx=\"" << num(sx(pts[i].x)) << "\" cy=\"" << num(sy(pts[i].y)) << "\" r=\"4\" fill=\"black\"/>\n";
    if (options.labels) {
      out << "<text x=\"" << num(sx(pts[i].x) + 6) << "\" y=\"" << num(sy(pts[i].y) - 6)
          << "\" font-size=\"11\" font-family=\"sans-serif\">" << i + 1 << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace symconf
