#include <doctest.h>

#include <random>

#include "evgi/error.hpp"
#include "evgi/oracle.hpp"
#include "evgi/pipeline.hpp"
#include "support.hpp"

using namespace evgi;
using evgi::testing::random_graph;
using evgi::testing::random_permutation;

namespace
{

void check_sound(Graph const &g, AutResult const &r)
{
  for (auto const &gen : r.generators)
    CHECK(verify_automorphism(g, gen));
  for (auto const &gen : r.group.generators())
    CHECK(verify_automorphism(g, gen));
}

} // namespace

TEST_CASE("geometric instances")
{
  auto k2 = geom_aut_instance(named::complete(2));
  CHECK(k2.points.size() == 3);
  CHECK(k2.spectrum.groups.size() == 2);

  auto two = geom_aut_instance(Graph::disjoint_union(named::complete(2), named::complete(2)));
  CHECK(two.points.size() == 6);
  REQUIRE(two.spectrum.groups.size() == 2);
  CHECK(two.spectrum.groups[0].eigenvalue == doctest::Approx(1));
  CHECK(two.spectrum.groups[0].multiplicity == 2);
  CHECK(two.spectrum.groups[1].multiplicity == 2);

  auto empty = geom_aut_instance(named::empty(3));
  CHECK(empty.points.size() == 3);
  CHECK(empty.spectrum.groups.size() == 1);
  CHECK(empty.spectrum.groups[0].multiplicity == 3);
}

TEST_CASE("hypergraph reduction")
{
  auto build = [](Graph const &g) {
    auto inst = geom_aut_instance(g);
    auto proj = project_all(inst.points, inst.spectrum);
    std::vector<GeometricAutomorphismList> auts;
    for (auto const &pr : proj)
      auts.push_back(list_geometric_automorphisms(quantized_gram(pr.coordinates)));
    return std::make_tuple(inst, proj, reduce_to_hypaut(inst.points, proj, auts));
  };

  auto [i1, p1, x1] = build(named::empty(3));
  CHECK(x1.color_count() == 1);
  CHECK(x1.hyperedges.size() == 3);
  for (auto const &e : x1.hyperedges)
    CHECK(e.traces[0].size() == 1);

  auto [i3, p3, x3] = build(named::complete(3));
  CHECK(x3.color_count() == 2);
  CHECK(x3.hyperedges.size() == 6);
  for (auto const &e : x3.hyperedges)
    for (auto const &t : e.traces)
      CHECK(t.size() == 1);
  CHECK(hyp_aut(x3).order == 6);

  // K_2: vertex points share the lambda = 1 vertex and differ on lambda = -1.
  auto [i2, p2, x2] = build(named::complete(2));
  CHECK(p2[0].fiber[0] == p2[0].fiber[1]);
  CHECK(p2[1].fiber[0] != p2[1].fiber[1]);
  auto h = hyp_aut(x2);
  CHECK(h.order == 2);
  std::set<Permutation> lifted;
  for (auto const &gen : h.generators)
    lifted.insert(lift_to_vertex_permutation(i2.points, p2, x2, gen));
  CHECK(lifted.count(Permutation(std::vector<Point>{1, 0})) == 1);
  std::vector<std::size_t> identity;
  for (auto const &g : x2.groups)
    identity.push_back(g.identity_index());
  CHECK(lift_to_vertex_permutation(i2.points, p2, x2, identity).is_identity());
}

TEST_CASE("automorphism group orders")
{
  struct Case
  {
    Graph g;
    long long order;
  };
  std::vector<Case> cases{{named::path(4), 2},       {named::petersen(), 120}, {named::cycle(5), 10},
                          {named::complete(2), 2},   {named::complete(3), 6},  {named::star(4), 24},
                          {named::empty(6), 720},    {named::complete(6), 720}, {named::cycle(8), 16}};
  for (auto const &c : cases) {
    auto r = automorphism_group(c.g);
    CHECK(r.order == c.order);
    CHECK(r.verified);
    check_sound(c.g, r);
  }
  CHECK_THROWS_AS(automorphism_group(named::empty(12)), CapExceeded);
  CHECK(automorphism_group(Graph(0)).order == 1);
}

TEST_CASE("exact verification rejects non-automorphisms")
{
  auto p4 = named::path(4);
  CHECK(verify_automorphism(p4, Permutation(std::vector<Point>{3, 2, 1, 0})));
  CHECK_FALSE(verify_automorphism(p4, Permutation(std::vector<Point>{1, 0, 2, 3})));
  CHECK_FALSE(verify_automorphism(p4, Permutation(3)));
}

TEST_CASE("orders agree with brute force on all graphs up to 5 vertices")
{
  for (std::size_t n = 1; n <= 5; ++n) {
    unsigned long long const pairs = n * (n - 1) / 2;
    for (unsigned long long mask = 0; mask < (1ULL << pairs); ++mask) {
      auto g = evgi::testing::graph_from_mask(n, mask);
      auto r = automorphism_group(g);
      CHECK(r.order == oracle::brute_aut(g).size());
      CHECK(r.verified);
      check_sound(g, r);
    }
  }
}

TEST_CASE("isomorphism decisions")
{
  auto c4k1 = Graph::disjoint_union(named::cycle(4), named::empty(1));
  auto star = named::star(4);
  auto r = isomorphic(c4k1, star);
  CHECK_FALSE(r.isomorphic);
  CHECK(r.reason == "no balanced component orbit matching");
  CHECK_FALSE(isomorphic(star, c4k1).isomorphic);

  auto pre = isomorphic(named::path(3), named::complete(3));
  CHECK_FALSE(pre.isomorphic);
  CHECK(pre.reason == "edge counts differ");
  CHECK(isomorphic(named::path(3), named::path(4)).reason == "vertex counts differ");
  CHECK(isomorphic(named::path(4), named::star(3)).reason == "spectra differ");

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    auto g = random_graph(4 + trial % 9, 0.4, rng);
    auto p = random_permutation(g.vertex_count(), rng);
    auto h = g.relabeled(p);
    auto res = isomorphic(g, h);
    REQUIRE(res.isomorphic);
    REQUIRE(res.witness);
    auto w = Permutation(*res.witness);
    CHECK(g.relabeled(w) == h);
    CHECK(isomorphic(h, g).isomorphic);
  }
}

TEST_CASE("isomorphism agrees with brute force on small pairs")
{
  std::mt19937_64 rng(37);
  int iso = 0;
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t const n = 2 + trial % 6;
    auto a = random_graph(n, 0.5, rng);
    auto b = trial % 3 == 0 ? a.relabeled(random_permutation(n, rng)) : random_graph(n, 0.5, rng);
    auto want = oracle::brute_iso(a, b).has_value();
    auto got = isomorphic(a, b);
    CHECK(got.isomorphic == want);
    CHECK(isomorphic(b, a).isomorphic == want);
    iso += want;
    if (got.isomorphic) {
      REQUIRE(got.witness);
      CHECK(a.relabeled(Permutation(*got.witness)) == b);
    }
  }
  CHECK(iso >= 50);
}
