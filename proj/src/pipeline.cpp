#include "evgi/pipeline.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "evgi/error.hpp"

namespace evgi
{

namespace
{

double eig_tolerance(PipelineOptions const &opt, std::size_t n)
{
  return opt.eig_tol > 0 ? opt.eig_tol : default_eigen_tolerance(n);
}

std::vector<Point> hyperedge_of(std::vector<ProjectedPointSet> const &projections, std::size_t point)
{
  std::vector<Point> key;
  key.reserve(projections.size());
  for (auto const &pr : projections)
    key.push_back(Point(pr.fiber[point]));
  return key;
}

} // namespace

GeomAutInstance geom_aut_instance(Graph const &g, PipelineOptions const &opt)
{
  GeomAutInstance inst;
  inst.points = graph_point_set(g);
  inst.spectrum = decompose(adjacency_matrix(g), opt.sweep_tol, eig_tolerance(opt, g.vertex_count()));
  return inst;
}

ColoredMultiHypergraph reduce_to_hypaut(PointSet const &p, std::vector<ProjectedPointSet> const &projections,
                                        std::vector<GeometricAutomorphismList> const &auts)
{
  if (projections.size() != auts.size())
    throw std::invalid_argument("one automorphism list per eigenspace is required");
  ColoredMultiHypergraph x;
  for (std::size_t l = 0; l < projections.size(); ++l) {
    x.class_sizes.push_back(projections[l].distinct_count());
    x.groups.push_back(auts[l].group);
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    Hyperedge e;
    for (auto v : hyperedge_of(projections, i))
      e.traces.push_back({v});
    x.hyperedges.push_back(std::move(e));
  }
  x.canonicalize();
  x.validate();
  return x;
}

Permutation lift_to_vertex_permutation(PointSet const &p, std::vector<ProjectedPointSet> const &projections,
                                       ColoredMultiHypergraph const &x, std::vector<std::size_t> const &element)
{
  std::unordered_map<std::vector<Point>, std::size_t, PointVectorHash> point_of;
  for (std::size_t i = 0; i < p.size(); ++i)
    point_of.emplace(hyperedge_of(projections, i), i);

  std::vector<Point> images(p.vertex_point_count());
  for (std::size_t i = 0; i < p.vertex_point_count(); ++i) {
    auto key = hyperedge_of(projections, i);
    for (std::size_t l = 0; l < key.size(); ++l)
      key[l] = x.groups[l].element(element[l])(key[l]);
    auto it = point_of.find(key);
    if (it == point_of.end())
      throw InternalError("product element does not permute the hyperedges");
    if (!p.roles[it->second].is_vertex)
      throw InternalError("product element maps a vertex point to an edge point");
    images[i] = Point(it->second);
  }
  return Permutation(std::move(images));
}

bool verify_automorphism(Graph const &g, Permutation const &p)
{
  auto const n = g.vertex_count();
  if (p.degree() != n)
    return false;
  for (Point i = 0; i < n; ++i)
    for (Point j = 0; j < n; ++j)
      if (g.adjacent(p(i), p(j)) != g.adjacent(i, j))
        return false;
  return true;
}

AutResult automorphism_group(Graph const &g, PipelineOptions const &opt)
{
  AutResult res;
  auto const n = g.vertex_count();
  if (n == 0) {
    res.group = PermGroup::generate(0, {});
    return res;
  }
  auto inst = geom_aut_instance(g, opt);
  res.spectrum = inst.spectrum;
  res.diagnostics = inst.spectrum.warnings;

  res.projections = project_all(inst.points, inst.spectrum, opt.point_tol);
  std::vector<GeometricAutomorphismList> auts;
  for (auto const &pr : res.projections) {
    res.diagnostics.insert(res.diagnostics.end(), pr.warnings.begin(), pr.warnings.end());
    auto gram = quantized_gram(pr.coordinates, opt.gram_tol);
    for (auto const &w : gram.warnings)
      res.diagnostics.push_back("eigenspace " + std::to_string(pr.subspace) + ": " + w);
    try {
      auts.push_back(list_geometric_automorphisms(gram, opt.cap));
    } catch (CapExceeded const &e) {
      std::ostringstream msg;
      msg << e.what() << " (eigenvalue " << pr.eigenvalue << ", multiplicity " << pr.basis.cols()
          << "; raise --cap or expect this for highly symmetric graphs such as edgeless ones)";
      throw CapExceeded(msg.str());
    }
  }

  auto x = reduce_to_hypaut(inst.points, res.projections, auts);
  auto const hyp = hyp_aut(x);

  std::size_t rejected = 0;
  for (auto const &element : hyp.generators) {
    Permutation lifted;
    try {
      lifted = lift_to_vertex_permutation(inst.points, res.projections, x, element);
    } catch (InternalError const &e) {
      ++rejected;
      res.diagnostics.push_back(std::string("rejected generator: ") + e.what());
      continue;
    }
    if (!verify_automorphism(g, lifted)) {
      ++rejected;
      res.diagnostics.push_back("rejected generator " + lifted.to_cycle_string() +
                                ": fails the exact adjacency check");
      continue;
    }
    if (!lifted.is_identity())
      res.generators.push_back(std::move(lifted));
  }
  if (rejected) {
    res.verified = false;
    res.diagnostics.push_back(std::to_string(rejected) +
                              " generator(s) rejected; the group is rebuilt from the survivors and may be incomplete");
  }
  res.group = PermGroup::generate(n, res.generators);
  res.order = res.group.order();
  return res;
}

bool same_grouped_spectrum(SpectralDecomposition const &a, SpectralDecomposition const &b, double tol)
{
  if (a.groups.size() != b.groups.size())
    return false;
  for (std::size_t i = 0; i < a.groups.size(); ++i)
    if (a.groups[i].multiplicity != b.groups[i].multiplicity ||
        std::abs(a.groups[i].eigenvalue - b.groups[i].eigenvalue) > tol)
      return false;
  return true;
}

IsoResult isomorphic(Graph const &x1, Graph const &x2, PipelineOptions const &opt)
{
  IsoResult res;
  auto const n = x1.vertex_count();
  if (n != x2.vertex_count()) {
    res.reason = "vertex counts differ";
    return res;
  }
  if (x1.edge_count() != x2.edge_count()) {
    res.reason = "edge counts differ";
    return res;
  }
  if (n == 0) {
    res.isomorphic = true;
    res.witness = std::vector<Point>{};
    return res;
  }
  double const tol = eig_tolerance(opt, n);
  auto const s1 = decompose(adjacency_matrix(x1), opt.sweep_tol, tol);
  auto const s2 = decompose(adjacency_matrix(x2), opt.sweep_tol, tol);
  if (!same_grouped_spectrum(s1, s2, tol)) {
    res.reason = "spectra differ";
    return res;
  }

  auto const u = Graph::disjoint_union(x1, x2);
  PipelineOptions union_opt = opt;
  if (union_opt.eig_tol <= 0)
    union_opt.eig_tol = tol;
  auto const aut = automorphism_group(u, union_opt);
  res.diagnostics = aut.diagnostics;

  // Automorphisms permute components; X1 and X2 are isomorphic iff every
  // component orbit holds as many X1 components as X2 components.
  auto const components = u.connected_components();
  std::map<std::vector<Point>, bool> seen;
  std::vector<Point> witness(n, 0);
  for (auto const &comp : components) {
    if (seen.count(comp))
      continue;
    auto orbit = orbit_with_witness(aut.group, comp);
    std::vector<std::vector<Point> const *> left, right;
    for (auto const &member : orbit.elements) {
      seen[member] = true;
      (member.front() < n ? left : right).push_back(&member);
    }
    if (left.size() != right.size()) {
      res.reason = "no balanced component orbit matching";
      return res;
    }
    for (std::size_t i = 0; i < left.size(); ++i) {
      auto const map = compose(orbit.witness.at(*right[i]), orbit.witness.at(*left[i]).inverse());
      for (Point v : *left[i])
        witness[v] = map(v) - Point(n);
    }
  }

  Permutation w;
  try {
    w = Permutation(witness);
  } catch (std::invalid_argument const &) {
    throw InternalError("stitched isomorphism witness is not a bijection");
  }
  for (auto [a, b] : x1.edges())
    if (!x2.adjacent(w(a), w(b)))
      throw InternalError("stitched isomorphism witness does not preserve edges");
  res.isomorphic = true;
  res.witness = std::move(witness);
  res.reason = "isomorphic";
  return res;
}

} // namespace evgi
