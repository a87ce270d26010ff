#include <charconv>
#include <string>
#include <vector>

#include "dee/errors.hpp"
#include "dee/graph.hpp"

namespace dee {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

// Exactly two non-negative integers separated by whitespace.
bool parse_pair(std::string_view line, long long& a, long long& b) {
  auto skip_ws = [&](std::size_t pos) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    return pos;
  };
  const char* base = line.data();
  std::size_t pos = skip_ws(0);
  auto r1 = std::from_chars(base + pos, base + line.size(), a);
  if (r1.ec != std::errc{} || r1.ptr == base + pos) return false;
  pos = static_cast<std::size_t>(r1.ptr - base);
  const std::size_t after_first = pos;
  pos = skip_ws(pos);
  if (pos == after_first) return false;
  auto r2 = std::from_chars(base + pos, base + line.size(), b);
  if (r2.ec != std::errc{} || r2.ptr == base + pos) return false;
  pos = skip_ws(static_cast<std::size_t>(r2.ptr - base));
  return pos == line.size();
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  for (auto line : split_lines(text)) {
    if (!is_blank(line)) lines.push_back(line);
  }
  if (lines.empty()) throw ParseError("edge list: empty input");

  long long n = 0;
  long long m = 0;
  if (!parse_pair(lines[0], n, m)) throw ParseError("edge list: malformed header line, expected \"n m\"");
  if (n < 1) throw ParseError("edge list: vertex count must be at least 1");
  if (m < 0) throw ParseError("edge list: negative edge count");
  if (m > n * (n - 1) / 2) throw ParseError("edge list: more edges than vertex pairs");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw ParseError("edge list: header declares " + std::to_string(m) + " edges but found " +
                     std::to_string(lines.size() - 1));
  }

  Graph g(static_cast<int>(n));
  for (std::size_t k = 1; k < lines.size(); ++k) {
    long long u = 0;
    long long v = 0;
    const std::string where = "edge list line " + std::to_string(k + 1) + ": ";
    if (!parse_pair(lines[k], u, v)) throw ParseError(where + "malformed, expected \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(where + "vertex out of range");
    if (u == v) throw ParseError(where + "self-loop");
    if (g.adjacent(static_cast<int>(u), static_cast<int>(v))) throw ParseError(where + "duplicate edge");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.size() >= 10 && line.substr(0, 10) == ">>graph6<<") line.remove_prefix(10);
  if (line.empty()) throw ParseError("graph6: empty string");
  for (char c : line) {
    if (c < 63 || c > 126) throw ParseError("graph6: invalid character");
  }
  if (line[0] == 126) throw ParseError("graph6: long form (n >= 63) is not supported");

  const int n = line[0] - 63;
  if (n == 0) throw ParseError("graph6: zero-vertex graphs are not supported");
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t payload = (bits + 5) / 6;
  if (line.size() - 1 < payload) throw ParseError("graph6: truncated payload");
  if (line.size() - 1 > payload) throw ParseError("graph6: trailing characters after payload");

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int group = line[1 + k / 6] - 63;
      if ((group >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n >= 63) throw PreconditionError("graph6 long form (n >= 63) is not supported");
  std::string out(1, static_cast<char>(63 + n));
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

}  // namespace dee
