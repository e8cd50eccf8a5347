#include "evgi/geomaut.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "evgi/error.hpp"

namespace evgi
{

QuantizedGram quantized_gram(Eigen::MatrixXd const &points, double eps_gram)
{
  if (eps_gram <= 0)
    throw std::invalid_argument("Gram tolerance must be positive");
  QuantizedGram gram;
  gram.size = static_cast<std::size_t>(points.cols());
  auto const m = gram.size;
  Eigen::MatrixXd const inner = points.transpose() * points;

  std::vector<std::pair<double, std::size_t>> values;
  values.reserve(m * (m + 1) / 2);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      values.emplace_back(inner(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)), i * m + j);
  std::sort(values.begin(), values.end());

  gram.keys.assign(m * m, 0);
  std::size_t fragile = 0;
  double fragile_gap = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    double sum = 0;
    for (std::size_t t = start; t < end; ++t)
      sum += values[t].first;
    auto const key = std::llround(sum / static_cast<double>(end - start) / eps_gram);
    for (std::size_t t = start; t < end; ++t) {
      auto const i = values[t].second / m, j = values[t].second % m;
      gram.keys[i * m + j] = gram.keys[j * m + i] = key;
    }
    start = end;
  };
  for (std::size_t t = 1; t < values.size(); ++t) {
    double const gap = values[t].first - values[t - 1].first;
    if (std::abs(gap - eps_gram) < 1e-2 * eps_gram) {
      ++fragile;
      fragile_gap = gap;
    }
    if (gap > eps_gram)
      flush(t);
  }
  if (!values.empty())
    flush(values.size());
  if (fragile) {
    std::ostringstream msg;
    msg << fragile << " inner-product gap(s) lie within 1% of the Gram tolerance "
        << eps_gram << " (e.g. " << fragile_gap << ")";
    gram.warnings.push_back(msg.str());
  }
  return gram;
}

namespace
{

class Lister
{
public:
  Lister(QuantizedGram const &gram, std::size_t cap) : _g(gram), _cap(cap), _image(gram.size, 0) {}

  std::vector<Permutation> run()
  {
    auto const m = _g.size;
    // Invariant of a point: its norm key and the multiset of its row keys.
    std::vector<std::vector<long long>> invariant(m);
    for (std::size_t i = 0; i < m; ++i) {
      auto &inv = invariant[i];
      for (std::size_t j = 0; j < m; ++j)
        if (j != i)
          inv.push_back(_g.key(i, j));
      std::sort(inv.begin(), inv.end());
      inv.push_back(_g.key(i, i));
    }
    std::vector<std::vector<Point>> cand(m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (invariant[i] == invariant[j])
          cand[i].push_back(Point(j));
    std::vector<bool> assigned(m, false);
    search(cand, assigned, 0);
    std::sort(_found.begin(), _found.end());
    return std::move(_found);
  }

private:
  void search(std::vector<std::vector<Point>> const &cand, std::vector<bool> &assigned, std::size_t depth)
  {
    auto const m = _g.size;
    if (depth == m) {
      if (_found.size() == _cap) {
        std::ostringstream msg;
        msg << "geometric automorphism listing exceeds the cap of " << _cap
            << " elements on " << m << " points; eigenvalue multiplicity is too large for explicit listing";
        throw CapExceeded(msg.str());
      }
      _found.emplace_back(_image);
      return;
    }
    std::size_t pick = m;
    for (std::size_t i = 0; i < m; ++i)
      if (!assigned[i] && (pick == m || cand[i].size() < cand[pick].size()))
        pick = i;
    if (cand[pick].empty())
      return;

    assigned[pick] = true;
    std::vector<std::vector<Point>> next(m);
    for (Point img : cand[pick]) {
      _image[pick] = img;
      bool dead = false;
      for (std::size_t j = 0; j < m && !dead; ++j) {
        if (assigned[j])
          continue;
        auto const want = _g.key(pick, j);
        next[j].clear();
        for (Point c : cand[j])
          if (c != img && _g.key(img, c) == want)
            next[j].push_back(c);
        dead = next[j].empty();
      }
      if (!dead)
        search(next, assigned, depth + 1);
    }
    assigned[pick] = false;
  }

  QuantizedGram const &_g;
  std::size_t _cap;
  std::vector<Point> _image;
  std::vector<Permutation> _found;
};

} // namespace

GeometricAutomorphismList list_geometric_automorphisms(QuantizedGram const &gram, std::size_t cap)
{
  if (gram.size == 0)
    throw std::invalid_argument("empty point set");
  GeometricAutomorphismList out;
  out.elements = Lister(gram, cap).run();
  out.group = ListedGroup(gram.size, out.elements);
  return out;
}

Eigen::MatrixXd orthogonal_extension(Eigen::MatrixXd const &points, Permutation const &pi, double tol)
{
  auto const d = points.rows();
  auto const m = points.cols();
  if (pi.degree() != static_cast<std::size_t>(m))
    throw std::invalid_argument("permutation degree differs from the number of points");
  Eigen::MatrixXd image(d, m);
  for (Eigen::Index i = 0; i < m; ++i)
    image.col(i) = points.col(static_cast<Eigen::Index>(pi(Point(i))));

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(points, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(1e-9);
  auto const rank = svd.rank();
  Eigen::MatrixXd const u_span = svd.matrixU().leftCols(rank);
  // image * pinv(points) on the span, identity on its complement.
  Eigen::MatrixXd a = image * svd.solve(Eigen::MatrixXd::Identity(d, d));
  a += Eigen::MatrixXd::Identity(d, d) - u_span * u_span.transpose();

  double const residual = (a * points - image).norm();
  double const defect = (a.transpose() * a - Eigen::MatrixXd::Identity(d, d)).norm();
  if (residual > tol || defect > tol) {
    std::ostringstream msg;
    msg << "permutation does not extend to an orthogonal map (residual " << residual
        << ", orthogonality defect " << defect << ")";
    throw ToleranceError(msg.str());
  }
  return a;
}

} // namespace evgi
