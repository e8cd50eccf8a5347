#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "evgi/graph.hpp"
#include "evgi/spectral.hpp"

namespace evgi
{

struct PointRole
{
  bool is_vertex = true;
  Point u = 0; // vertex, or first endpoint
  Point v = 0; // second endpoint for edge points
};

/// Unit vectors e_i for every vertex, then e_i+e_j per edge in lexicographic order.
struct PointSet
{
  std::size_t ambient_dimension = 0;
  Eigen::MatrixXd points; // one column per point
  std::vector<PointRole> roles;

  std::size_t size() const { return roles.size(); }
  std::size_t vertex_point_count() const { return ambient_dimension; }
};

PointSet graph_point_set(Graph const &g);

/// Numerical rank of the point matrix.
std::size_t point_rank(PointSet const &p);

struct ProjectedPointSet
{
  std::size_t subspace = 0;
  double eigenvalue = 0;
  Eigen::MatrixXd basis;           // orthonormal columns spanning the eigenspace
  Eigen::MatrixXd coordinates;     // distinct points in the basis, one column each
  std::vector<std::size_t> fiber;  // original point -> distinct point
  std::vector<std::string> warnings;

  std::size_t distinct_count() const { return static_cast<std::size_t>(coordinates.cols()); }

  /// Distinct points in ambient coordinates, one column each.
  Eigen::MatrixXd distinct_points() const { return basis * coordinates; }
};

/// Projects every point into every eigenspace. Points closer than eps_point
/// are merged (transitively) and replaced by their centroid. Distinct points
/// are ordered by the projection of their lowest-index member, rounded to
/// multiples of eps_point.
std::vector<ProjectedPointSet> project_all(PointSet const &p, SpectralDecomposition const &dec,
                                           double eps_point = 1e-6);

ProjectedPointSet project(PointSet const &p, EigenspaceGroup const &w, std::size_t subspace,
                          double eps_point = 1e-6);

/// Fibers of the projection, one class per distinct point, members ascending.
std::vector<std::vector<std::size_t>> ell_equivalence_classes(ProjectedPointSet const &proj);

} // namespace evgi
