#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evgi/permutation.hpp"

namespace evgi
{

using Edge = std::pair<Point, Point>;

/// Simple undirected graph on vertices 0..n-1.
class Graph
{
public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);
  Graph(std::size_t vertex_count, std::vector<Edge> const &edges);

  /// Throws std::invalid_argument for loops, duplicates and bad vertices.
  void add_edge(Point u, Point v);

  std::size_t vertex_count() const { return _n; }
  std::size_t edge_count() const { return _edges.size(); }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool adjacent(Point u, Point v) const { return _adj[u * _n + v] != 0; }

  /// Image of the graph under a vertex relabeling.
  Graph relabeled(Permutation const &p) const;

  /// Vertex sets of connected components, ordered by smallest vertex.
  std::vector<std::vector<Point>> connected_components() const;

  static Graph disjoint_union(Graph const &a, Graph const &b);

  bool operator==(Graph const &other) const { return _n == other._n && _adj == other._adj; }

private:
  std::size_t _n = 0;
  std::vector<unsigned char> _adj;
  std::vector<Edge> _edges;
};

enum class GraphFormat
{
  edge_list,
  graph6
};

/// "n m" header, then m lines "u v" with 1-based vertices.
Graph parse_edge_list(std::string_view text);

/// Standard graph6 encoding; an optional ">>graph6<<" header is accepted.
Graph parse_graph6(std::string_view text);

Graph parse_graph(std::string_view text, GraphFormat format);

/// Edge list when the first non-blank line is all digits and blanks.
GraphFormat detect_format(std::string_view text);

std::string to_graph6(Graph const &g);
std::string to_edge_list(Graph const &g);

namespace named
{
Graph empty(std::size_t n);
Graph complete(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph star(std::size_t leaves);
Graph petersen();
} // namespace named

} // namespace evgi
