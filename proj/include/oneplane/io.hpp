#pragma once
// Text formats: drawings, family manifests and planarization traces.

#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "oneplane/embedding.hpp"
#include "oneplane/generators.hpp"
#include "oneplane/planarize.hpp"

namespace oneplane {

namespace detail {

inline std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    std::size_t j = line.find(' ', i);
    if (j == std::string_view::npos) j = line.size();
    out.push_back(line.substr(i, j - i));
    i = j + 1;
  }
  if (!line.empty() && line.back() == ' ') out.push_back({});
  return out;
}

// Lines of a document; a missing final newline is tolerated.
inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = text.find('\n', i);
    if (j == std::string::npos) j = text.size();
    out.push_back(text.substr(i, j - i));
    i = j + 1;
  }
  return out;
}

class LineParser {
 public:
  LineParser(std::string_view line, int lineno) : words_(split_words(line)), lineno_(lineno) {}

  std::size_t size() const { return words_.size(); }
  std::string_view word(std::size_t i) const { return words_[i]; }

  // Canonical non-negative decimal: no sign, no leading zeros.
  long long number(std::size_t i) const {
    std::string_view w = words_.at(i);
    if (w.empty() || (w.size() > 1 && w[0] == '0')) fail("malformed number '" + std::string(w) + "'");
    long long v = 0;
    auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc() || p != w.data() + w.size() || v < 0)
      fail("malformed number '" + std::string(w) + "'");
    return v;
  }
  // Like number() but allows a leading minus sign.
  long long signed_number(std::size_t i) const {
    std::string_view w = words_.at(i);
    if (!w.empty() && w[0] == '-') {
      if (w.size() == 1 || w == "-0") fail("malformed number '" + std::string(w) + "'");
      LineParser tail(w.substr(1), lineno_);
      return -tail.number(0);
    }
    return number(i);
  }
  int index(std::size_t i, long long bound) const {
    long long v = number(i);
    if (v >= bound) fail("id " + std::to_string(v) + " out of range");
    return static_cast<int>(v);
  }
  void arity(std::size_t k) const {
    if (words_.size() != k) fail("expected " + std::to_string(k) + " fields");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("parse-error", "line " + std::to_string(lineno_) + ": " + msg);
  }

 private:
  std::vector<std::string_view> words_;
  int lineno_;
};

}  // namespace detail

inline std::string serialize_drawing(const Drawing& d) {
  std::ostringstream os;
  os << "oneplane 1\n";
  os << "n " << d.n() << '\n';
  for (int e = 0; e < d.m(); ++e) os << "e " << e << ' ' << d.graph.edges[e].u << ' ' << d.graph.edges[e].v << '\n';
  for (int c = 0; c < d.num_crossings(); ++c)
    os << "x " << c << ' ' << d.crossings[c].a << ' ' << d.crossings[c].b << '\n';
  for (std::size_t x = 0; x < d.rotations.size(); ++x) {
    os << "r " << x;
    for (const EdgeEnd& end : d.rotations[x]) {
      os << ' ' << end.edge << '.' << end.side;
      if (end.crossing >= 0) os << '@' << end.crossing;
    }
    os << '\n';
  }
  return os.str();
}

// Strict parse: sections in order (header, n, edges, crossings, rotations),
// ids dense and in order, every skeleton node listed once. Structural
// validity of the drawing is left to validate_drawing.
inline Drawing parse_drawing(const std::string& text) {
  auto lines = detail::split_lines(text);
  Drawing d;
  std::size_t i = 0;
  auto parser = [&](std::size_t k) { return detail::LineParser(lines[k], static_cast<int>(k) + 1); };
  if (lines.empty() || lines[0] != "oneplane 1") throw Error("parse-error", "line 1: expected header 'oneplane 1'");
  ++i;
  if (i >= lines.size()) throw Error("parse-error", "missing 'n' line");
  {
    auto p = parser(i);
    if (p.size() == 0 || p.word(0) != "n") p.fail("expected 'n <count>'");
    p.arity(2);
    long long n = p.number(1);
    if (n > 100'000'000) p.fail("vertex count too large");
    d.graph.n = static_cast<int>(n);
    ++i;
  }
  auto tag = [&](std::size_t k) -> std::string_view {
    std::string_view l = lines[k];
    return l.substr(0, l.find(' '));
  };
  for (; i < lines.size() && tag(i) == "e"; ++i) {
    auto p = parser(i);
    p.arity(4);
    if (p.number(1) != d.m()) p.fail("edge ids must be dense and in order");
    d.graph.edges.push_back({p.index(2, d.n()), p.index(3, d.n())});
  }
  for (; i < lines.size() && tag(i) == "x"; ++i) {
    auto p = parser(i);
    p.arity(4);
    if (p.number(1) != d.num_crossings()) p.fail("crossing ids must be dense and in order");
    d.crossings.push_back({p.index(2, d.m()), p.index(3, d.m())});
  }
  const int nodes = d.num_nodes();
  for (; i < lines.size() && tag(i) == "r"; ++i) {
    auto p = parser(i);
    if (p.size() < 2) p.fail("expected 'r <node> <edge-ends>'");
    if (p.number(1) != static_cast<long long>(d.rotations.size())) p.fail("rotation nodes must be dense and in order");
    if (static_cast<int>(d.rotations.size()) >= nodes) p.fail("more rotation lines than skeleton nodes");
    std::vector<EdgeEnd> rot;
    for (std::size_t w = 2; w < p.size(); ++w) {
      std::string_view tok = p.word(w);
      auto dot = tok.find('.');
      if (dot == std::string_view::npos || dot + 2 > tok.size()) p.fail("malformed edge-end '" + std::string(tok) + "'");
      std::string_view side = tok.substr(dot + 1, 1);
      std::string_view rest = tok.substr(dot + 2);
      if (side != "0" && side != "1") p.fail("edge-end side must be 0 or 1");
      EdgeEnd end;
      end.edge = detail::LineParser(tok.substr(0, dot), static_cast<int>(i) + 1).index(0, d.m());
      end.side = side == "1" ? 1 : 0;
      if (!rest.empty()) {
        if (rest[0] != '@' || rest.size() < 2) p.fail("malformed edge-end '" + std::string(tok) + "'");
        end.crossing = detail::LineParser(rest.substr(1), static_cast<int>(i) + 1).index(0, d.num_crossings());
      }
      rot.push_back(end);
    }
    d.rotations.push_back(std::move(rot));
  }
  if (i < lines.size()) parser(i).fail("unexpected line '" + lines[i] + "'");
  if (static_cast<int>(d.rotations.size()) != nodes)
    throw Error("parse-error", "expected " + std::to_string(nodes) + " rotation lines, found " +
                                   std::to_string(d.rotations.size()));
  return d;
}

inline std::string serialize_manifest(const Manifest& m) {
  std::ostringstream os;
  os << "manifest 1\n";
  os << "family " << m.family << '\n';
  for (const auto& [k, v] : m.values) os << "value " << k << ' ' << v << '\n';
  for (const auto& [k, s] : m.sets) {
    os << "set " << k;
    for (int v : s) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

inline Manifest parse_manifest(const std::string& text) {
  auto lines = detail::split_lines(text);
  if (lines.empty() || lines[0] != "manifest 1") throw Error("parse-error", "line 1: expected header 'manifest 1'");
  if (lines.size() < 2) throw Error("parse-error", "missing 'family' line");
  Manifest m;
  detail::LineParser fam(lines[1], 2);
  if (fam.size() != 2 || fam.word(0) != "family" || fam.word(1).empty()) fam.fail("expected 'family <name>'");
  m.family = std::string(fam.word(1));
  for (std::size_t i = 2; i < lines.size(); ++i) {
    detail::LineParser p(lines[i], static_cast<int>(i) + 1);
    if (p.size() < 2 || p.word(1).empty()) p.fail("expected 'value' or 'set' line");
    std::string key(p.word(1));
    if (p.word(0) == "value") {
      p.arity(3);
      if (!m.values.emplace(key, p.signed_number(2)).second) p.fail("duplicate key " + key);
    } else if (p.word(0) == "set") {
      std::vector<int> s;
      for (std::size_t w = 2; w < p.size(); ++w) s.push_back(p.index(w, 1LL << 31));
      if (!m.sets.emplace(key, std::move(s)).second) p.fail("duplicate key " + key);
    } else {
      p.fail("unknown line '" + lines[i] + "'");
    }
  }
  return m;
}

// One line per crossing: id, rule, deleted edge, witness triangle or "-".
inline std::string serialize_trace(const std::vector<DeletionRecord>& trace) {
  std::ostringstream os;
  for (const auto& r : trace) {
    os << r.crossing << ' ' << to_string(r.decision.rule) << ' ' << r.decision.deleted;
    if (r.decision.witness)
      for (int v : *r.decision.witness) os << ' ' << v;
    else
      os << " -";
    os << '\n';
  }
  return os.str();
}

}  // namespace oneplane
