#include "symconf/orientation_assignment.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "symconf/pointset_io.hpp"

namespace symconf {

int sortTriple(int& i, int& j, int& k) {
  int parity = 1;
  if (i > j) { std::swap(i, j); parity = -parity; }
  if (j > k) { std::swap(j, k); parity = -parity; }
  if (i > j) { std::swap(i, j); parity = -parity; }
  return parity;
}

OrientationAssignment::OrientationAssignment(int n)
    : n_(n), values_(static_cast<std::size_t>(n) * n * n, kUnset) {
  if (n < 0) throw std::invalid_argument("negative point count");
}

void OrientationAssignment::checkIndices(int i, int j, int k) const {
  if (i < 1 || j < 1 || k < 1 || i > n_ || j > n_ || k > n_) throw std::out_of_range("triple index out of range");
  if (i == j || j == k || i == k) throw std::invalid_argument("degenerate triple");
}

Orientation OrientationAssignment::get(int i, int j, int k) const {
  checkIndices(i, j, k);
  const int parity = sortTriple(i, j, k);
  const std::int8_t v = values_[index(i, j, k)];
  if (v == kUnset) throw std::logic_error("triple not assigned");
  return orientationFromSign(parity * v);
}

void OrientationAssignment::set(int i, int j, int k, Orientation o) {
  checkIndices(i, j, k);
  const int parity = sortTriple(i, j, k);
  values_[index(i, j, k)] = static_cast<std::int8_t>(parity * toInt(o));
}

bool OrientationAssignment::isSet(int i, int j, int k) const {
  checkIndices(i, j, k);
  sortTriple(i, j, k);
  return values_[index(i, j, k)] != kUnset;
}

bool OrientationAssignment::isTotal() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      for (int k = j + 1; k <= n_; ++k)
        if (values_[index(i, j, k)] == kUnset) return false;
  return true;
}

bool OrientationAssignment::hasCollinearTriple() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      for (int k = j + 1; k <= n_; ++k)
        if (values_[index(i, j, k)] == 0) return true;
  return false;
}

OrientationAssignment readAssignment(std::istream& in) {
  struct Entry {
    int i, j, k, v;
  };
  std::vector<Entry> entries;
  int n = 0;
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    Entry e{};
    std::string extra;
    if (!(fields >> e.i >> e.j >> e.k >> e.v) || (fields >> extra) || e.v < -1 || e.v > 1) {
      throw ParseError("line " + std::to_string(lineNo) + ": expected 'i j k v'");
    }
    if (e.i < 1 || e.j < 1 || e.k < 1 || e.i == e.j || e.j == e.k || e.i == e.k) {
      throw ParseError("line " + std::to_string(lineNo) + ": bad triple");
    }
    n = std::max({n, e.i, e.j, e.k});
    entries.push_back(e);
  }
  OrientationAssignment tau(n);
  for (const auto& e : entries) tau.set(e.i, e.j, e.k, orientationFromSign(e.v));
  if (!tau.isTotal()) throw ParseError("assignment does not cover every triple");
  return tau;
}

OrientationAssignment readAssignmentFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return readAssignment(in);
}

void writeAssignment(std::ostream& out, const OrientationAssignment& tau) {
  const int n = tau.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) out << i << ' ' << j << ' ' << k << ' ' << toInt(tau.get(i, j, k)) << '\n';
}

void writeAssignmentFile(const std::string& path, const OrientationAssignment& tau) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  writeAssignment(out, tau);
}

}  // namespace symconf
