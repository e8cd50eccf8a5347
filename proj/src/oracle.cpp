#include "evgi/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace evgi::oracle
{

std::vector<Permutation> brute_aut(Graph const &g)
{
  auto const n = g.vertex_count();
  if (n > 10)
    throw std::length_error("brute_aut: at most 10 vertices");
  std::vector<Point> p(n);
  std::iota(p.begin(), p.end(), Point{0});
  std::vector<Permutation> result;
  do {
    bool ok = true;
    for (Point i = 0; ok && i < n; ++i)
      for (Point j = i + 1; j < n; ++j)
        if (g.adjacent(i, j) != g.adjacent(p[i], p[j])) {
          ok = false;
          break;
        }
    if (ok)
      result.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return result;
}

std::optional<std::vector<Point>> brute_iso(Graph const &a, Graph const &b)
{
  auto const n = a.vertex_count();
  if (n > 8 || b.vertex_count() > 8)
    throw std::length_error("brute_iso: at most 8 vertices");
  if (n != b.vertex_count() || a.edge_count() != b.edge_count())
    return std::nullopt;
  std::vector<Point> p(n);
  std::iota(p.begin(), p.end(), Point{0});
  do {
    bool ok = true;
    for (Point i = 0; ok && i < n; ++i)
      for (Point j = i + 1; j < n; ++j)
        if (a.adjacent(i, j) != b.adjacent(p[i], p[j])) {
          ok = false;
          break;
        }
    if (ok)
      return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

std::vector<Permutation> brute_geom_aut(std::vector<std::vector<double>> const &points,
                                        double eps)
{
  auto const m = points.size();
  if (m > 8)
    throw std::length_error("brute_geom_aut: at most 8 points");
  auto dist = [&](std::vector<double> const &x, std::vector<double> const &y) {
    double s = 0;
    for (std::size_t k = 0; k < x.size(); ++k)
      s += (x[k] - y[k]) * (x[k] - y[k]);
    return std::sqrt(s);
  };
  std::vector<double> zero(m ? points[0].size() : 0, 0.0);
  std::vector<Point> p(m);
  std::iota(p.begin(), p.end(), Point{0});
  std::vector<Permutation> result;
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < m; ++i) {
      if (std::abs(dist(points[i], zero) - dist(points[p[i]], zero)) > eps)
        ok = false;
      for (std::size_t j = i + 1; ok && j < m; ++j)
        if (std::abs(dist(points[i], points[j]) - dist(points[p[i]], points[p[j]])) > eps)
          ok = false;
    }
    if (ok)
      result.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return result;
}

std::vector<Permutation> enumerate_closure(std::size_t degree,
                                           std::span<Permutation const> generators,
                                           std::size_t limit)
{
  std::set<Permutation> seen{Permutation(degree)};
  std::vector<Permutation> queue{Permutation(degree)};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (auto const &s : generators) {
      auto next = s * queue[k];
      if (seen.insert(next).second) {
        if (seen.size() > limit)
          throw std::length_error("enumerate_closure: group exceeds limit");
        queue.push_back(std::move(next));
      }
    }
  return {seen.begin(), seen.end()};
}

std::vector<Permutation> brute_coset_meet(PermCoset const &a, PermCoset const &b)
{
  if (a.is_empty() || b.is_empty())
    return {};
  auto enumerate = [](PermCoset const &c) {
    auto group = enumerate_closure(c.degree(), c.group().generators(), 10000);
    std::set<Permutation> elements;
    for (auto const &g : group)
      elements.insert(g * c.representative());
    return elements;
  };
  auto ea = enumerate(a);
  auto eb = enumerate(b);
  std::vector<Permutation> meet;
  std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(meet));
  return meet;
}

BigInt characteristic_polynomial_at(Graph const &g, long long x)
{
  auto const n = g.vertex_count();
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = (i == j ? BigInt(x) : BigInt(0)) - (i != j && g.adjacent(Point(i), Point(j)) ? 1 : 0);

  // Bareiss: every division below is exact.
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0)
        ++r;
      if (r == n)
        return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return n == 0 ? BigInt(1) : sign * m[n - 1][n - 1];
}

namespace
{

using TraceMultiset = std::map<std::vector<std::vector<Point>>, BigInt>;

TraceMultiset restricted(std::span<Hyperedge const> edges, std::size_t colors,
                         std::vector<Permutation const *> const &apply)
{
  TraceMultiset out;
  for (auto const &e : edges) {
    std::vector<std::vector<Point>> key;
    for (std::size_t c = 0; c < colors; ++c)
      key.push_back(apply.empty() ? e.traces[c] : apply[c]->image_of_set(e.traces[c]));
    out[key] += e.multiplicity;
  }
  return out;
}

} // namespace

std::vector<Permutation> brute_hyp_iso(ColoredMultiHypergraph const &x, std::span<Hyperedge const> a,
                                       std::span<Hyperedge const> b, std::size_t colors)
{
  std::size_t total = 1;
  for (std::size_t c = 0; c < colors; ++c) {
    total *= x.groups[c].size();
    if (total > 100000)
      throw std::length_error("brute_hyp_iso: product group too large");
  }
  auto const target = restricted(b, colors, {});
  std::vector<std::size_t> idx(x.color_count(), 0);
  for (std::size_t c = colors; c < x.color_count(); ++c)
    idx[c] = x.groups[c].identity_index();
  std::vector<Permutation> result;
  for (std::size_t t = 0; t < total; ++t) {
    std::size_t rest = t;
    std::vector<Permutation const *> apply;
    for (std::size_t c = 0; c < colors; ++c) {
      idx[c] = rest % x.groups[c].size();
      rest /= x.groups[c].size();
      apply.push_back(&x.groups[c].element(idx[c]));
    }
    if (restricted(a, colors, apply) == target)
      result.push_back(product_element(x, idx));
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Permutation> brute_hyp_aut(ColoredMultiHypergraph const &x)
{
  return brute_hyp_iso(x, x.hyperedges, x.hyperedges, x.color_count());
}

} // namespace evgi::oracle
