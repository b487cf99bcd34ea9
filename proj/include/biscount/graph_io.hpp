#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "biscount/bigraph.hpp"
#include "biscount/error.hpp"

namespace biscount {

// Edge-list format: a header line "n d", then exactly n*d lines "u v"
// meaning the edge {X_u, Y_v}. Edges may appear in any order.

namespace detail {

inline std::vector<std::size_t> parse_uints(std::string_view line, std::size_t line_no) {
  std::vector<std::size_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || ptr == line.data() + i)
      throw InputError("line " + std::to_string(line_no) + ": expected a non-negative integer");
    i = static_cast<std::size_t>(ptr - line.data());
    if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
      throw InputError("line " + std::to_string(line_no) + ": unexpected character '" +
                       std::string(1, line[i]) + "'");
    out.push_back(value);
  }
  return out;
}

}  // namespace detail

inline BipartiteGraph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_line()) throw InputError("line 1: missing header \"n d\"");
  const auto header = detail::parse_uints(line, line_no);
  if (header.size() != 2) throw InputError("line " + std::to_string(line_no) + ": malformed header, expected \"n d\"");
  const std::size_t n = header[0], d = header[1];
  if (n == 0 || d == 0 || d > n)
    throw InputError("line " + std::to_string(line_no) + ": header requires 1 <= d <= n");

  std::vector<Edge> edges;
  edges.reserve(n * d);
  std::set<Edge> seen;
  std::vector<std::size_t> deg_x(n, 0), deg_y(n, 0);
  while (next_line()) {
    const auto uv = detail::parse_uints(line, line_no);
    if (uv.size() != 2)
      throw InputError("line " + std::to_string(line_no) + ": expected \"u v\"");
    const auto [u, v] = std::pair{uv[0], uv[1]};
    if (u >= n || v >= n)
      throw InputError("line " + std::to_string(line_no) + ": index out of range (n=" + std::to_string(n) + ")");
    if (!seen.emplace(u, v).second)
      throw InputError("line " + std::to_string(line_no) + ": duplicate edge " + std::to_string(u) + " " +
                       std::to_string(v));
    if (++deg_x[u] > d)
      throw InputError("line " + std::to_string(line_no) + ": x" + std::to_string(u) + " exceeds degree " +
                       std::to_string(d));
    if (++deg_y[v] > d)
      throw InputError("line " + std::to_string(line_no) + ": y" + std::to_string(v) + " exceeds degree " +
                       std::to_string(d));
    edges.emplace_back(u, v);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (deg_x[i] != d)
      throw InputError("line " + std::to_string(line_no) + ": non-regular degree sequence, x" + std::to_string(i) +
                       " has degree " + std::to_string(deg_x[i]) + " (expected " + std::to_string(d) + ")");
    if (deg_y[i] != d)
      throw InputError("line " + std::to_string(line_no) + ": non-regular degree sequence, y" + std::to_string(i) +
                       " has degree " + std::to_string(deg_y[i]) + " (expected " + std::to_string(d) + ")");
  }
  return BipartiteGraph(n, d, edges);
}

inline BipartiteGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

inline BipartiteGraph read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_graph(in);
}

inline void write_graph(const BipartiteGraph& g, std::ostream& out) {
  out << g.n() << ' ' << g.d() << '\n';
  for (const auto& [x, y] : g.edges()) out << x << ' ' << y << '\n';
}

inline void write_graph(const BipartiteGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  write_graph(g, out);
  if (!out) throw InputError("write failed: " + path);
}

}  // namespace biscount
