#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "evgi/graph.hpp"
#include "evgi/permutation.hpp"

namespace evgi::testing
{

inline Permutation random_permutation(std::size_t n, std::mt19937_64 &rng)
{
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64 &rng)
{
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Point i = 0; i < n; ++i)
    for (Point j = i + 1; j < n; ++j)
      if (coin(rng))
        g.add_edge(i, j);
  return g;
}

/// Graph on n vertices whose edges are the set bits of `mask` over pairs i<j.
inline Graph graph_from_mask(std::size_t n, unsigned long long mask)
{
  Graph g(n);
  unsigned bit = 0;
  for (Point i = 0; i < n; ++i)
    for (Point j = i + 1; j < n; ++j, ++bit)
      if ((mask >> bit) & 1ULL)
        g.add_edge(i, j);
  return g;
}

template <class Range>
std::set<Permutation> as_set(Range const &r)
{
  return std::set<Permutation>(r.begin(), r.end());
}

} // namespace evgi::testing
