#pragma once

// Plain-text instance and solution files.
//
//   pctc 1
//   delta <d>
//   n <count>
//   <x> <y>      (count lines)
//
// Blank lines and lines starting with '#' are skipped. Numbers are written in
// shortest round-trip form so write/parse is bit exact.

#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "geom.hpp"
#include "solver.hpp"

namespace pctc::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class NegativeDelta : public ParseError {
 public:
  using ParseError::ParseError;
};

class CountMismatch : public ParseError {
 public:
  using ParseError::ParseError;
};

inline std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw std::runtime_error("to_chars failed");
  return std::string(buf, end);
}

namespace detail {

struct Line {
  int number;
  std::vector<std::string_view> words;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
      if (j > i) line.words.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (line.words.empty() || line.words.front().front() == '#') continue;
    out.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return out;
}

inline double number(const Line& l, std::size_t k) {
  if (k >= l.words.size()) throw ParseError(l.number, "missing number");
  std::string_view w = l.words[k];
  if (!w.empty() && w.front() == '+') w.remove_prefix(1);
  double v = 0.0;
  auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc() || p != w.data() + w.size() || !std::isfinite(v))
    throw ParseError(l.number, "bad number '" + std::string(l.words[k]) + "'");
  return v;
}

inline long integer(const Line& l, std::size_t k) {
  if (k >= l.words.size()) throw ParseError(l.number, "missing integer");
  std::string_view w = l.words[k];
  long v = 0;
  auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc() || p != w.data() + w.size()) throw ParseError(l.number, "bad integer '" + std::string(w) + "'");
  return v;
}

inline void expect(const Line& l, std::string_view key, std::size_t arity) {
  if (l.words.front() != key) throw ParseError(l.number, "expected '" + std::string(key) + "'");
  if (l.words.size() != arity + 1) throw ParseError(l.number, "'" + std::string(key) + "' takes " + std::to_string(arity) + " value(s)");
}

}  // namespace detail

inline Instance parse_instance(std::string_view text) {
  const auto lines = detail::tokenize(text);
  auto at = [&](std::size_t k) -> const detail::Line& {
    if (k >= lines.size()) {
      const int last = lines.empty() ? 1 : lines.back().number;
      throw ParseError(last, "unexpected end of input");
    }
    return lines[k];
  };
  detail::expect(at(0), "pctc", 1);
  if (detail::integer(at(0), 1) != 1) throw ParseError(at(0).number, "unsupported format version");
  detail::expect(at(1), "delta", 1);
  Instance inst;
  inst.delta = detail::number(at(1), 1);
  if (inst.delta < 0.0) throw NegativeDelta(at(1).number, "delta must be non-negative");
  detail::expect(at(2), "n", 1);
  const long n = detail::integer(at(2), 1);
  if (n < 0) throw ParseError(at(2).number, "negative point count");
  const std::size_t have = lines.size() - 3;
  if (have != std::size_t(n))
    throw CountMismatch(at(2).number, "n " + std::to_string(n) + " but " + std::to_string(have) + " point line(s)");
  inst.points.reserve(std::size_t(n));
  for (std::size_t k = 3; k < lines.size(); ++k) {
    const auto& l = lines[k];
    if (l.words.size() != 2) throw ParseError(l.number, "point lines hold two numbers");
    inst.points.push_back({detail::number(l, 0), detail::number(l, 1)});
  }
  return inst;
}

inline std::string write_instance(const Instance& inst) {
  std::string s = "pctc 1\ndelta " + format_double(inst.delta) + "\nn " + std::to_string(inst.points.size()) + "\n";
  for (const Point& p : inst.points) s += format_double(p.x) + " " + format_double(p.y) + "\n";
  return s;
}

struct SolutionFile {
  Disk d1, d2;
  std::string tag;
  double cost = 0.0;
  std::optional<double> coverage, pcc;  // residuals as recorded
};

inline std::string write_solution(const SolveReport& r) {
  std::string s = "pctc-solution 1\n";
  s += "disk " + format_double(r.solution.d1.center.x) + " " + format_double(r.solution.d1.center.y) + " " +
       format_double(r.solution.d1.radius) + "\n";
  s += "disk " + format_double(r.solution.d2.center.x) + " " + format_double(r.solution.d2.center.y) + " " +
       format_double(r.solution.d2.radius) + "\n";
  s += std::string("case ") + case_name(r.tag) + "\n";
  s += "cost " + format_double(r.solution.cost) + "\n";
  s += "coverage " + format_double(r.verification.coverage) + "\n";
  s += "pcc " + format_double(r.verification.pcc) + "\n";
  return s;
}

inline SolutionFile parse_solution(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty solution");
  detail::expect(lines[0], "pctc-solution", 1);
  SolutionFile f;
  int disks = 0;
  bool have_case = false, have_cost = false;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& l = lines[k];
    const auto key = l.words.front();
    if (key == "disk") {
      detail::expect(l, "disk", 3);
      if (disks == 2) throw ParseError(l.number, "more than two disks");
      Disk d{{detail::number(l, 1), detail::number(l, 2)}, detail::number(l, 3)};
      if (d.radius < 0.0) throw ParseError(l.number, "negative radius");
      (disks++ == 0 ? f.d1 : f.d2) = d;
    } else if (key == "case") {
      detail::expect(l, "case", 1);
      f.tag = std::string(l.words[1]);
      if (f.tag != "nearby" && f.tag != "distant" && f.tag != "far") throw ParseError(l.number, "unknown case tag");
      have_case = true;
    } else if (key == "cost") {
      detail::expect(l, "cost", 1);
      f.cost = detail::number(l, 1);
      have_cost = true;
    } else if (key == "coverage") {
      detail::expect(l, "coverage", 1);
      f.coverage = detail::number(l, 1);
    } else if (key == "pcc") {
      detail::expect(l, "pcc", 1);
      f.pcc = detail::number(l, 1);
    } else {
      throw ParseError(l.number, "unknown key '" + std::string(key) + "'");
    }
  }
  const int last = lines.back().number;
  if (disks != 2) throw ParseError(last, "solution needs two disks");
  if (!have_case || !have_cost) throw ParseError(last, "solution needs case and cost");
  return f;
}

}  // namespace pctc::io
