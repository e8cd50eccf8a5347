#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "evgi/perm_group.hpp"
#include "evgi/permutation.hpp"

namespace evgi
{

/// Integer keys of all inner products <q_i, q_j>. Values closer than eps are
/// chained into one cluster and every member gets round(cluster mean / eps),
/// so keys respect every exact isometry of the points.
struct QuantizedGram
{
  std::size_t size = 0;
  std::vector<long long> keys; // row-major size x size
  std::vector<std::string> warnings;

  long long key(std::size_t i, std::size_t j) const { return keys[i * size + j]; }
};

/// `points` holds one point per column.
QuantizedGram quantized_gram(Eigen::MatrixXd const &points, double eps_gram = 1e-9);

struct GeometricAutomorphismList
{
  std::vector<Permutation> elements; // sorted, identity first
  ListedGroup group;
};

/// Every permutation preserving all Gram keys. Throws CapExceeded once more
/// than `cap` elements are found.
GeometricAutomorphismList list_geometric_automorphisms(QuantizedGram const &gram,
                                                       std::size_t cap = 1000000);

/// The orthogonal map A with A q_i = q_{pi(i)}; identity on the orthogonal
/// complement of the span. Throws ToleranceError if the residual or the
/// orthogonality defect exceeds `tol`.
Eigen::MatrixXd orthogonal_extension(Eigen::MatrixXd const &points, Permutation const &pi,
                                     double tol = 1e-6);

} // namespace evgi
