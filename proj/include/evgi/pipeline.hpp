#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "evgi/geomaut.hpp"
#include "evgi/graph.hpp"
#include "evgi/hypaut.hpp"
#include "evgi/perm_group.hpp"
#include "evgi/pointset.hpp"
#include "evgi/spectral.hpp"

namespace evgi
{

/// Non-positive eigen and sweep tolerances select the size-dependent defaults.
struct PipelineOptions
{
  double eig_tol = 0;
  double sweep_tol = 0;
  double point_tol = 1e-6;
  double gram_tol = 1e-9;
  std::size_t cap = 1000000;
};

struct GeomAutInstance
{
  PointSet points;
  SpectralDecomposition spectrum;
};

GeomAutInstance geom_aut_instance(Graph const &g, PipelineOptions const &opt = {});

/// Colour l = distinct points of eigenspace l with G_l = its listed
/// automorphisms; one hyperedge per original point holding its fibre
/// representative in every colour.
ColoredMultiHypergraph reduce_to_hypaut(PointSet const &p, std::vector<ProjectedPointSet> const &projections,
                                        std::vector<GeometricAutomorphismList> const &auts);

/// Induced point permutation of a product element, restricted to the vertex
/// points. Throws InternalError when the element does not permute the
/// hyperedges or mixes vertex and edge points.
Permutation lift_to_vertex_permutation(PointSet const &p, std::vector<ProjectedPointSet> const &projections,
                                       ColoredMultiHypergraph const &x, std::vector<std::size_t> const &element);

/// Entrywise form of M_g^T A M_g = A in integer arithmetic.
bool verify_automorphism(Graph const &g, Permutation const &p);

struct AutResult
{
  PermGroup group;
  BigInt order = 1;
  bool verified = true;
  std::vector<Permutation> generators; // every one passed verify_automorphism
  SpectralDecomposition spectrum;
  std::vector<ProjectedPointSet> projections;
  std::vector<std::string> diagnostics;
};

/// Throws CapExceeded when an eigenspace symmetry group is too large to list.
AutResult automorphism_group(Graph const &g, PipelineOptions const &opt = {});

struct IsoResult
{
  bool isomorphic = false;
  std::optional<std::vector<Point>> witness; // vertex of X1 -> vertex of X2
  std::string reason;
  std::vector<std::string> diagnostics;
};

IsoResult isomorphic(Graph const &x1, Graph const &x2, PipelineOptions const &opt = {});

/// Eigenvalues and multiplicities agree up to the grouping tolerance.
bool same_grouped_spectrum(SpectralDecomposition const &a, SpectralDecomposition const &b, double tol);

} // namespace evgi
