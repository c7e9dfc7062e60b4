#include "symconf/pointset_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace symconf {

namespace {

bool isDecimalLiteral(std::string_view s) {
  return s.find_first_of(".eE") != std::string_view::npos;
}

Rational parseInteger(std::string_view digits) {
  if (digits.empty()) throw ParseError("empty integer");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad integer '" + std::string(digits) + "'");
  }
  return Rational(mpz_class(std::string(digits)));
}

Rational parseDecimal(std::string_view s) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) negative = s[pos++] == '-';
  std::string mantissa;
  long exponent = 0;
  bool sawDigit = false;
  bool afterPoint = false;
  for (; pos < s.size(); ++pos) {
    const char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa.push_back(c);
      sawDigit = true;
      if (afterPoint) --exponent;
    } else if (c == '.' && !afterPoint) {
      afterPoint = true;
    } else {
      break;
    }
  }
  if (!sawDigit) throw ParseError("bad decimal '" + std::string(s) + "'");
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') throw ParseError("bad decimal '" + std::string(s) + "'");
    ++pos;
    long e = 0;
    std::string_view rest = s.substr(pos);
    if (!rest.empty() && rest.front() == '+') rest.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), e);
    if (ec != std::errc() || ptr != rest.data() + rest.size()) throw ParseError("bad exponent in '" + std::string(s) + "'");
    exponent += e;
  }
  Rational value{mpz_class(mantissa)};
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0) {
    value /= Rational(power);
  } else {
    value *= Rational(power);
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

// One unsigned term: "p", "p/q", "p*rt3", "p/q*rt3" or "rt3".
QuadRational parseUnsignedTerm(std::string_view t) {
  bool radical = false;
  if (t.size() >= 3 && t.substr(t.size() - 3) == "rt3") {
    radical = true;
    t.remove_suffix(3);
    if (!t.empty()) {
      if (t.back() != '*') throw ParseError("expected '*' before rt3");
      t.remove_suffix(1);
    }
  }
  Rational value(1);
  if (!t.empty() || !radical) {
    const auto slash = t.find('/');
    if (slash == std::string_view::npos) {
      value = parseInteger(t);
    } else {
      const Rational num = parseInteger(t.substr(0, slash));
      const Rational den = parseInteger(t.substr(slash + 1));
      if (sgn(den) == 0) throw ParseError("zero denominator");
      value = num / den;
    }
  }
  value.canonicalize();
  return radical ? QuadRational(Rational(0), value) : QuadRational(value, Rational(0));
}

}  // namespace

QuadRational parseCoordinate(std::string_view text) {
  if (text.empty()) throw ParseError("empty coordinate");
  if (isDecimalLiteral(text) && text.find("rt3") == std::string_view::npos) {
    return QuadRational(parseDecimal(text));
  }
  QuadRational total;
  std::size_t pos = 0;
  int terms = 0;
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (terms > 0) {
      throw ParseError("expected '+' or '-' in '" + std::string(text) + "'");
    }
    std::size_t end = pos;
    while (end < text.size() && text[end] != '+' && text[end] != '-') ++end;
    QuadRational term = parseUnsignedTerm(text.substr(pos, end - pos));
    total = sign > 0 ? total + term : total - term;
    pos = end;
    if (++terms > 2) throw ParseError("too many terms in '" + std::string(text) + "'");
  }
  if (terms == 0) throw ParseError("empty coordinate");
  return total;
}

std::string formatRational(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string formatCoordinate(const QuadRational& v) {
  if (sgn(v.b) == 0) return formatRational(v.a);
  std::string radical = formatRational(abs(v.b)) + "*rt3";
  if (sgn(v.a) == 0) return (sgn(v.b) < 0 ? "-" : "") + radical;
  return formatRational(v.a) + (sgn(v.b) < 0 ? "-" : "+") + radical;
}

std::string formatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ExactPointSet readPointSet(std::istream& in) {
  ExactPointSet out;
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string xs, ys, extra;
    if (!(fields >> xs >> ys) || (fields >> extra)) {
      throw ParseError("line " + std::to_string(lineNo) + ": expected two coordinates");
    }
    try {
      out.push_back({parseCoordinate(xs), parseCoordinate(ys)});
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineNo) + ": " + e.what());
    }
  }
  return out;
}

ExactPointSet readPointSetFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return readPointSet(in);
}

void writePointSet(std::ostream& out, const ExactPointSet& pts) {
  for (const auto& p : pts) out << formatCoordinate(p.x) << ' ' << formatCoordinate(p.y) << '\n';
}

void writePointSet(std::ostream& out, const FloatPointSet& pts) {
  for (const auto& p : pts) out << formatDouble(p.x) << ' ' << formatDouble(p.y) << '\n';
}

void writePointSetFile(const std::string& path, const ExactPointSet& pts) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  writePointSet(out, pts);
}

void writePointSetFile(const std::string& path, const FloatPointSet& pts) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  writePointSet(out, pts);
}

}  // namespace symconf
