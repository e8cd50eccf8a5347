#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "evgi/graph.hpp"

namespace evgi
{

/// Dense real symmetric matrix; symmetry is checked exactly on construction.
class SymMatrix
{
public:
  explicit SymMatrix(Eigen::MatrixXd entries);

  std::size_t dimension() const { return static_cast<std::size_t>(_entries.rows()); }
  Eigen::MatrixXd const &entries() const { return _entries; }
  double operator()(std::size_t i, std::size_t j) const
  {
    return _entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

private:
  Eigen::MatrixXd _entries;
};

SymMatrix adjacency_matrix(Graph const &g);

struct EigenPair
{
  double value = 0;
  Eigen::VectorXd vector;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius mass is at most
/// `sweep_tol`. Throws ToleranceError after the sweep cap.
std::vector<EigenPair> eigendecompose(SymMatrix const &a, double sweep_tol);

/// One eigenvalue cluster. `basis` has orthonormal columns spanning W.
struct EigenspaceGroup
{
  double eigenvalue = 0;
  std::size_t multiplicity = 0;
  Eigen::MatrixXd basis;

  /// Orthogonal projector basis*basis^T onto the eigenspace.
  Eigen::MatrixXd projector() const { return basis * basis.transpose(); }

  /// proj(p) in ambient coordinates.
  Eigen::VectorXd project(Eigen::VectorXd const &p) const { return basis * (basis.transpose() * p); }
};

struct SpectralDecomposition
{
  std::size_t dimension = 0;
  std::vector<EigenspaceGroup> groups; // descending eigenvalue
  std::vector<std::string> warnings;

  std::size_t max_multiplicity() const;
};

/// Sorts eigenvalues descending and clusters them by single linkage with
/// gap threshold `eig_tol`; records a warning for every inter-cluster gap
/// below 10*eig_tol.
SpectralDecomposition group_eigenvalues(std::vector<EigenPair> raw, double eig_tol);

/// 1e-12 * n * max|A|.
double default_sweep_tolerance(SymMatrix const &a);

/// 1e-8 * max(1, n).
double default_eigen_tolerance(std::size_t n);

/// eigendecompose + group_eigenvalues; non-positive tolerances select defaults.
SpectralDecomposition decompose(SymMatrix const &a, double sweep_tol = 0, double eig_tol = 0);

inline std::size_t max_multiplicity(SpectralDecomposition const &dec)
{
  return dec.max_multiplicity();
}

} // namespace evgi
