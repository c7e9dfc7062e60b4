#include <doctest.h>

#include <string>

#include "symconf/plot.hpp"

using namespace symconf;

namespace {

std::size_t occurrences(const std::string& s, const std::string& what) {
  std::size_t c = 0;
  for (std::size_t p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++c;
  return c;
}

}  // namespace

TEST_SUITE("plot") {
  TEST_CASE("rendering is deterministic and complete") {
    const FloatPointSet pts{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {-1, -3.5}};
    PlotOptions opt;
    opt.lines = {{1, 2, 3}};
    const std::string a = renderSvg(pts, opt);
    CHECK(a == renderSvg(pts, opt));
    CHECK(a.find("<svg") != std::string::npos);
    CHECK(occurrences(a, "<circle") == 5);
    CHECK(occurrences(a, "<line") == 1);
    CHECK(occurrences(a, "<text") == 5);
    CHECK(a.find("</svg>") != std::string::npos);
  }

  TEST_CASE("options") {
    const FloatPointSet pts{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    PlotOptions opt;
    opt.labels = false;
    opt.symmetryGuides = 4;
    const std::string s = renderSvg(pts, opt);
    CHECK(occurrences(s, "<text") == 0);
    CHECK(occurrences(s, "<line") == 4);
  }

  TEST_CASE("empty and degenerate inputs") {
    const std::string e = renderSvg({});
    CHECK(occurrences(e, "<circle") == 0);
    CHECK(e.find("</svg>") != std::string::npos);
    const std::string one = renderSvg(FloatPointSet{{3, 3}});
    CHECK(occurrences(one, "<circle") == 1);
    CHECK(one.find("nan") == std::string::npos);
  }
}
