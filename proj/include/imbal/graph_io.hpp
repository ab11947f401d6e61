#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "imbal/core.hpp"
#include "imbal/error.hpp"

// Text formats:
//
//   graph file   first non-comment line "n r", then one "u v m" line per arc
//                group (0-based vertices, u != v, m >= 1). Lines starting with
//                '#' and blank lines are ignored. Repeated (u, v) lines add up.
//   sequence     comma-separated integers, e.g. "-2,-2,4".

namespace imbal::io {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename Int>
bool parse_int(std::string_view text, Int& out) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc{} && ptr == end && !text.empty();
}

inline Error line_error(std::size_t line_no, const std::string& what) {
  return Error(Errc::parse_error, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace detail

inline RGraph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<RGraph> g;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = detail::split_ws(line);
    if (fields.empty() || fields.front().front() == '#') continue;
    if (!g) {
      std::size_t n = 0;
      Multiplicity r = 0;
      if (fields.size() != 2 || !detail::parse_int(fields[0], n) ||
          !detail::parse_int(fields[1], r) || n < 1 || r < 1) {
        throw detail::line_error(line_no, "header must be \"n r\" with two positive integers");
      }
      g.emplace(n, r);
      continue;
    }
    Vertex u = 0, v = 0;
    Multiplicity m = 0;
    if (fields.size() != 3 || !detail::parse_int(fields[0], u) ||
        !detail::parse_int(fields[1], v) || !detail::parse_int(fields[2], m)) {
      throw detail::line_error(line_no, "arc line must be \"u v m\"");
    }
    if (m < 1) throw detail::line_error(line_no, "multiplicity must be at least 1");
    try {
      g->add_arcs(u, v, m);
    } catch (const Error& e) {
      throw detail::line_error(line_no, e.what());
    }
  }
  if (!g) throw Error(Errc::parse_error, "missing header line \"n r\"");
  return *std::move(g);
}

inline RGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

// Canonical form: header, then arcs sorted by (u, v), one line each.
inline std::string serialize_graph(const RGraph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.capacity()) + "\n";
  for (const auto& [pair, m] : g.arcs()) {
    out += std::to_string(pair.first) + " " + std::to_string(pair.second) + " " +
           std::to_string(m) + "\n";
  }
  return out;
}

inline std::string to_dot(const RGraph& g) {
  std::string out = "digraph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out += "  v" + std::to_string(v) + ";\n";
  for (const auto& [pair, m] : g.arcs()) {
    out += "  v" + std::to_string(pair.first) + " -> v" + std::to_string(pair.second) +
           " [label=\"×" + std::to_string(m) + "\"];\n";
  }
  return out + "}\n";
}

inline std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    auto token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    std::int64_t value = 0;
    if (!detail::parse_int(token, value)) {
      throw Error(Errc::parse_error, "not an integer: \"" + std::string(token) + "\"");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename Range>
std::string join(const Range& values, std::string_view sep = ",") {
  std::string out;
  bool first = true;
  for (const auto& v : values) {
    if (!first) out += sep;
    out += std::to_string(v);
    first = false;
  }
  return out;
}

}  // namespace imbal::io
