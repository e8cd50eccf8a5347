#include "evgi/pointset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace evgi
{

namespace
{

struct DisjointSets
{
  std::vector<std::size_t> parent;

  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x)
  {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }

  void unite(std::size_t a, std::size_t b)
  {
    a = find(a);
    b = find(b);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  }
};

} // namespace

PointSet graph_point_set(Graph const &g)
{
  PointSet p;
  auto const n = g.vertex_count();
  auto const edges = g.edges();
  p.ambient_dimension = n;
  p.points = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                   static_cast<Eigen::Index>(n + edges.size()));
  for (std::size_t i = 0; i < n; ++i) {
    p.points(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 1.0;
    p.roles.push_back({true, Point(i), Point(i)});
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto const col = static_cast<Eigen::Index>(n + e);
    p.points(edges[e].first, col) = 1.0;
    p.points(edges[e].second, col) = 1.0;
    p.roles.push_back({false, edges[e].first, edges[e].second});
  }
  return p;
}

std::size_t point_rank(PointSet const &p)
{
  if (p.points.size() == 0)
    return 0;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(p.points);
  qr.setThreshold(1e-9);
  return static_cast<std::size_t>(qr.rank());
}

ProjectedPointSet project(PointSet const &p, EigenspaceGroup const &w, std::size_t subspace,
                          double eps_point)
{
  if (static_cast<std::size_t>(w.basis.rows()) != p.ambient_dimension)
    throw std::invalid_argument("eigenspace and point set dimensions differ");
  if (eps_point <= 0)
    throw std::invalid_argument("point tolerance must be positive");

  ProjectedPointSet out;
  out.subspace = subspace;
  out.eigenvalue = w.eigenvalue;
  out.basis = w.basis;
  Eigen::MatrixXd const coords = w.basis.transpose() * p.points;
  auto const count = static_cast<std::size_t>(coords.cols());
  auto col = [&](std::size_t i) { return coords.col(static_cast<Eigen::Index>(i)); };

  // Pairs closer than the guard band share a window in the first coordinate.
  double const band = 10 * eps_point;
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return coords(0, static_cast<Eigen::Index>(x)) < coords(0, static_cast<Eigen::Index>(y)); });
  DisjointSets sets(count);
  std::vector<std::pair<std::size_t, std::size_t>> near;
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = a + 1; b < count; ++b) {
      auto const i = order[a], j = order[b];
      if (coords(0, static_cast<Eigen::Index>(j)) - coords(0, static_cast<Eigen::Index>(i)) > band)
        break;
      double const d = (col(i) - col(j)).norm();
      if (d <= eps_point)
        sets.unite(i, j);
      else if (d <= band)
        near.emplace_back(i, j);
    }

  double worst_merged = 0;
  for (std::size_t i = 0; i < count; ++i)
    worst_merged = std::max(worst_merged, (col(i) - col(sets.find(i))).norm());
  double closest_apart = std::numeric_limits<double>::infinity();
  for (auto [i, j] : near)
    if (sets.find(i) != sets.find(j))
      closest_apart = std::min(closest_apart, (col(i) - col(j)).norm());
  if (worst_merged >= eps_point / 10) {
    std::ostringstream msg;
    msg << "eigenspace " << subspace << ": merged points lie " << worst_merged
        << " apart (tolerance " << eps_point << ")";
    out.warnings.push_back(msg.str());
  }
  if (closest_apart <= band) {
    std::ostringstream msg;
    msg << "eigenspace " << subspace << ": distinct points lie only " << closest_apart
        << " apart (tolerance " << eps_point << ")";
    out.warnings.push_back(msg.str());
  }

  std::vector<std::pair<std::vector<long long>, std::size_t>> keyed;
  for (std::size_t i = 0; i < count; ++i) {
    if (sets.find(i) != i)
      continue;
    Eigen::VectorXd const ambient = w.basis * col(i);
    std::vector<long long> key(static_cast<std::size_t>(ambient.size()));
    for (Eigen::Index r = 0; r < ambient.size(); ++r)
      key[static_cast<std::size_t>(r)] = std::llround(ambient(r) / eps_point);
    keyed.emplace_back(std::move(key), i);
  }
  std::sort(keyed.begin(), keyed.end());

  std::vector<std::size_t> slot(count);
  for (std::size_t d = 0; d < keyed.size(); ++d)
    slot[keyed[d].second] = d;
  out.fiber.resize(count);
  for (std::size_t i = 0; i < count; ++i)
    out.fiber[i] = slot[sets.find(i)];

  // Merged points are represented by their centroid, which every isometry respects.
  out.coordinates = Eigen::MatrixXd::Zero(coords.rows(), static_cast<Eigen::Index>(keyed.size()));
  std::vector<double> members(keyed.size(), 0.0);
  for (std::size_t i = 0; i < count; ++i) {
    out.coordinates.col(static_cast<Eigen::Index>(out.fiber[i])) += col(i);
    members[out.fiber[i]] += 1;
  }
  for (std::size_t d = 0; d < keyed.size(); ++d)
    out.coordinates.col(static_cast<Eigen::Index>(d)) /= members[d];
  return out;
}

std::vector<ProjectedPointSet> project_all(PointSet const &p, SpectralDecomposition const &dec,
                                           double eps_point)
{
  std::vector<ProjectedPointSet> out;
  out.reserve(dec.groups.size());
  for (std::size_t l = 0; l < dec.groups.size(); ++l)
    out.push_back(project(p, dec.groups[l], l, eps_point));
  return out;
}

std::vector<std::vector<std::size_t>> ell_equivalence_classes(ProjectedPointSet const &proj)
{
  std::vector<std::vector<std::size_t>> classes(proj.distinct_count());
  for (std::size_t i = 0; i < proj.fiber.size(); ++i)
    classes[proj.fiber[i]].push_back(i);
  return classes;
}

} // namespace evgi
