#include "evgi/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "evgi/error.hpp"

namespace evgi
{

namespace
{

constexpr int max_sweeps = 100;

double off_diagonal_norm(Eigen::MatrixXd const &a)
{
  double s = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (i != j)
        s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

} // namespace

SymMatrix::SymMatrix(Eigen::MatrixXd entries) : _entries(std::move(entries))
{
  if (_entries.rows() != _entries.cols())
    throw std::invalid_argument("matrix is not square");
  for (Eigen::Index i = 0; i < _entries.rows(); ++i)
    for (Eigen::Index j = i + 1; j < _entries.cols(); ++j)
      if (_entries(i, j) != _entries(j, i))
        throw std::invalid_argument("matrix is not symmetric");
}

SymMatrix adjacency_matrix(Graph const &g)
{
  auto const n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges())
    a(u, v) = a(v, u) = 1.0;
  return SymMatrix(std::move(a));
}

std::vector<EigenPair> eigendecompose(SymMatrix const &sym, double sweep_tol)
{
  Eigen::MatrixXd a = sym.entries();
  auto const n = a.rows();
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);

  int sweep = 0;
  while (off_diagonal_norm(a) > sweep_tol) {
    if (++sweep > max_sweeps) {
      std::ostringstream msg;
      msg << "Jacobi iteration did not reach off-diagonal mass " << sweep_tol << " within "
          << max_sweeps << " sweeps (remaining " << off_diagonal_norm(a) << ")";
      throw ToleranceError(msg.str());
    }
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        double const apq = a(p, q);
        if (apq == 0.0)
          continue;
        double const theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double const t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double const c = 1.0 / std::sqrt(t * t + 1.0);
        double const s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          double const akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          double const apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) {
          double const vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<EigenPair> pairs;
  pairs.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::VectorXd vec = v.col(i);
    // Sign convention: the first clearly non-zero entry is positive.
    for (Eigen::Index k = 0; k < n; ++k)
      if (std::abs(vec(k)) > 1e-9) {
        if (vec(k) < 0)
          vec = -vec;
        break;
      }
    pairs.push_back({a(i, i), std::move(vec)});
  }
  return pairs;
}

std::size_t SpectralDecomposition::max_multiplicity() const
{
  std::size_t k = 0;
  for (auto const &g : groups)
    k = std::max(k, g.multiplicity);
  return k;
}

SpectralDecomposition group_eigenvalues(std::vector<EigenPair> raw, double eig_tol)
{
  SpectralDecomposition dec;
  if (raw.empty())
    return dec;
  dec.dimension = static_cast<std::size_t>(raw.front().vector.size());
  std::stable_sort(raw.begin(), raw.end(),
                   [](EigenPair const &x, EigenPair const &y) { return x.value > y.value; });

  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    EigenspaceGroup g;
    g.multiplicity = end - start;
    g.basis.resize(static_cast<Eigen::Index>(dec.dimension), static_cast<Eigen::Index>(g.multiplicity));
    double sum = 0;
    for (std::size_t i = start; i < end; ++i) {
      sum += raw[i].value;
      g.basis.col(static_cast<Eigen::Index>(i - start)) = raw[i].vector;
    }
    g.eigenvalue = sum / static_cast<double>(g.multiplicity);
    dec.groups.push_back(std::move(g));
    start = end;
  };
  for (std::size_t i = 1; i < raw.size(); ++i) {
    double const gap = raw[i - 1].value - raw[i].value;
    if (gap <= eig_tol)
      continue;
    if (gap < 10 * eig_tol) {
      std::ostringstream msg;
      msg << "eigenvalue gap " << gap << " between " << raw[i - 1].value << " and "
          << raw[i].value << " is below 10x the grouping tolerance " << eig_tol
          << "; grouping is tolerance-sensitive";
      dec.warnings.push_back(msg.str());
    }
    flush(i);
  }
  flush(raw.size());
  return dec;
}

double default_sweep_tolerance(SymMatrix const &a)
{
  double max_abs = a.entries().size() ? a.entries().cwiseAbs().maxCoeff() : 0.0;
  return 1e-12 * static_cast<double>(a.dimension()) * max_abs;
}

double default_eigen_tolerance(std::size_t n)
{
  return 1e-8 * std::max(1.0, static_cast<double>(n));
}

SpectralDecomposition decompose(SymMatrix const &a, double sweep_tol, double eig_tol)
{
  if (sweep_tol <= 0)
    sweep_tol = default_sweep_tolerance(a);
  if (eig_tol <= 0)
    eig_tol = default_eigen_tolerance(a.dimension());
  return group_eigenvalues(eigendecompose(a, sweep_tol), eig_tol);
}

} // namespace evgi
