#include "evgi/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "evgi/error.hpp"

namespace evgi
{

Graph::Graph(std::size_t vertex_count) : _n(vertex_count), _adj(vertex_count * vertex_count, 0)
{}

Graph::Graph(std::size_t vertex_count, std::vector<Edge> const &edges) : Graph(vertex_count)
{
  for (auto [u, v] : edges)
    add_edge(u, v);
}

void Graph::add_edge(Point u, Point v)
{
  if (u >= _n || v >= _n)
    throw std::invalid_argument("edge vertex out of range");
  if (u == v)
    throw std::invalid_argument("loops are not allowed");
  if (adjacent(u, v))
    throw std::invalid_argument("duplicate edge");
  _adj[u * _n + v] = _adj[v * _n + u] = 1;
  _edges.emplace_back(std::min(u, v), std::max(u, v));
}

std::vector<Edge> Graph::edges() const
{
  auto sorted = _edges;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

Graph Graph::relabeled(Permutation const &p) const
{
  if (p.degree() != _n)
    throw std::invalid_argument("relabeling degree mismatch");
  Graph g(_n);
  for (auto [u, v] : _edges)
    g.add_edge(p(u), p(v));
  return g;
}

std::vector<std::vector<Point>> Graph::connected_components() const
{
  std::vector<std::vector<Point>> components;
  std::vector<bool> seen(_n, false);
  for (Point s = 0; s < _n; ++s) {
    if (seen[s])
      continue;
    std::vector<Point> comp{s};
    seen[s] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (Point w = 0; w < _n; ++w)
        if (!seen[w] && adjacent(comp[k], w)) {
          seen[w] = true;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

Graph Graph::disjoint_union(Graph const &a, Graph const &b)
{
  Graph g(a._n + b._n);
  for (auto [u, v] : a.edges())
    g.add_edge(u, v);
  auto const shift = static_cast<Point>(a._n);
  for (auto [u, v] : b.edges())
    g.add_edge(u + shift, v + shift);
  return g;
}

namespace
{

std::vector<std::string_view> split_lines(std::string_view text)
{
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<unsigned long long> parse_numbers(std::string_view line, std::size_t line_no)
{
  std::vector<unsigned long long> values;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    unsigned long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t'))
      throw InputError("line " + std::to_string(line_no) + ": malformed line '" +
                       std::string(line) + "'");
    values.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return values;
}

bool blank(std::string_view line)
{
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

} // namespace

Graph parse_edge_list(std::string_view text)
{
  auto lines = split_lines(text);
  std::size_t idx = 0;
  while (idx < lines.size() && blank(lines[idx]))
    ++idx;
  if (idx == lines.size())
    throw InputError("line 1: missing 'n m' header");
  auto header = parse_numbers(lines[idx], idx + 1);
  if (header.size() != 2)
    throw InputError("line " + std::to_string(idx + 1) + ": expected 'n m' header");
  auto const n = header[0];
  auto const m = header[1];
  if (n == 0)
    throw InputError("line " + std::to_string(idx + 1) + ": graph must have a vertex");
  Graph g(n);
  std::size_t read = 0;
  for (++idx; idx < lines.size(); ++idx) {
    auto const line_no = idx + 1;
    if (blank(lines[idx]))
      continue;
    if (read == m)
      throw InputError("line " + std::to_string(line_no) + ": more than " +
                       std::to_string(m) + " edges");
    auto uv = parse_numbers(lines[idx], line_no);
    auto where = "line " + std::to_string(line_no) + ": ";
    if (uv.size() != 2)
      throw InputError(where + "malformed line, expected 'u v'");
    if (uv[0] < 1 || uv[0] > n || uv[1] < 1 || uv[1] > n)
      throw InputError(where + "vertex out of range");
    if (uv[0] == uv[1])
      throw InputError(where + "loop at vertex " + std::to_string(uv[0]));
    auto u = static_cast<Point>(uv[0] - 1);
    auto v = static_cast<Point>(uv[1] - 1);
    if (g.adjacent(u, v))
      throw InputError(where + "duplicate edge " + std::to_string(uv[0]) + " " +
                       std::to_string(uv[1]));
    g.add_edge(u, v);
    ++read;
  }
  if (read != m)
    throw InputError("line " + std::to_string(lines.size()) + ": expected " +
                     std::to_string(m) + " edges, found " + std::to_string(read));
  return g;
}

Graph parse_graph6(std::string_view text)
{
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header)
    text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  if (text.find('\n') != std::string_view::npos)
    throw InputError("line 2: graph6 input must contain a single graph");
  for (char c : text)
    if (c < 63 || c > 126)
      throw InputError("line 1: invalid graph6 character");
  std::size_t pos = 0;
  auto byte = [&]() -> unsigned {
    if (pos >= text.size())
      throw InputError("line 1: truncated graph6 data");
    return static_cast<unsigned>(text[pos++]) - 63u;
  };
  unsigned long long n = 0;
  unsigned first = byte();
  if (first < 63) {
    n = first;
  } else {
    unsigned second = byte();
    int count = 3;
    if (second == 63) {
      count = 6;
      second = byte();
    }
    n = second;
    for (int i = 1; i < count; ++i)
      n = (n << 6) | byte();
  }
  if (n == 0)
    throw InputError("line 1: graph must have a vertex");
  Graph g(n);
  unsigned current = 0;
  int bits_left = 0;
  for (Point j = 1; j < n; ++j)
    for (Point i = 0; i < j; ++i) {
      if (bits_left == 0) {
        current = byte();
        bits_left = 6;
      }
      --bits_left;
      if ((current >> bits_left) & 1u)
        g.add_edge(i, j);
    }
  if (pos != text.size())
    throw InputError("line 1: trailing graph6 data");
  return g;
}

Graph parse_graph(std::string_view text, GraphFormat format)
{
  return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edge_list(text);
}

GraphFormat detect_format(std::string_view text)
{
  auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string_view::npos)
    return GraphFormat::edge_list;
  auto end = text.find('\n', start);
  auto line = text.substr(start, end == std::string_view::npos ? text.size() - start : end - start);
  bool digits = std::all_of(line.begin(), line.end(), [](char c) {
    return (c >= '0' && c <= '9') || c == ' ' || c == '\t' || c == '\r';
  });
  return digits ? GraphFormat::edge_list : GraphFormat::graph6;
}

std::string to_graph6(Graph const &g)
{
  std::string out;
  auto n = g.vertex_count();
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n < 258048) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  unsigned current = 0;
  int bits = 0;
  for (Point j = 1; j < n; ++j)
    for (Point i = 0; i < j; ++i) {
      current = (current << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++bits == 6) {
        out.push_back(static_cast<char>(current + 63));
        current = 0;
        bits = 0;
      }
    }
  if (bits > 0)
    out.push_back(static_cast<char>((current << (6 - bits)) + 63));
  return out;
}

std::string to_edge_list(Graph const &g)
{
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges())
    out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

namespace named
{

Graph empty(std::size_t n) { return Graph(n); }

Graph complete(std::size_t n)
{
  Graph g(n);
  for (Point i = 0; i < n; ++i)
    for (Point j = i + 1; j < n; ++j)
      g.add_edge(i, j);
  return g;
}

Graph path(std::size_t n)
{
  Graph g(n);
  for (Point i = 0; i + 1 < n; ++i)
    g.add_edge(i, i + 1);
  return g;
}

Graph cycle(std::size_t n)
{
  Graph g = path(n);
  if (n >= 3)
    g.add_edge(static_cast<Point>(n - 1), 0);
  return g;
}

Graph star(std::size_t leaves)
{
  Graph g(leaves + 1);
  for (Point i = 1; i <= leaves; ++i)
    g.add_edge(0, i);
  return g;
}

Graph petersen()
{
  Graph g(10);
  for (Point i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

} // namespace named

} // namespace evgi
