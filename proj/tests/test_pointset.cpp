#include <doctest.h>

#include <random>
#include <set>

#include "evgi/pointset.hpp"
#include "support.hpp"

using namespace evgi;

TEST_CASE("point set of a path")
{
  auto p = graph_point_set(named::path(3));
  REQUIRE(p.size() == 5);
  Eigen::MatrixXd want(3, 5);
  want << 1, 0, 0, 1, 0,
          0, 1, 0, 1, 1,
          0, 0, 1, 0, 1;
  CHECK(p.points == want);
  CHECK(p.roles[3].is_vertex == false);
  CHECK(p.roles[4].u == 1);
  CHECK(p.roles[4].v == 2);
  CHECK(graph_point_set(named::empty(4)).size() == 4);
}

TEST_CASE("incidence distances")
{
  Graph g(5, {{0, 1}, {1, 2}, {3, 4}});
  auto p = graph_point_set(g);
  auto dist = [&](Eigen::Index i, Eigen::Index j) { return (p.points.col(i) - p.points.col(j)).norm(); };
  CHECK(dist(0, 5) == doctest::Approx(1));             // e_0 and edge 01
  CHECK(dist(2, 5) == doctest::Approx(std::sqrt(3.0))); // e_2 and edge 01
  CHECK(dist(5, 6) == doctest::Approx(std::sqrt(2.0))); // 01 and 12
  CHECK(dist(5, 7) == doctest::Approx(2));              // 01 and 34
}

TEST_CASE("K_2 projections")
{
  auto g = named::complete(2);
  auto p = graph_point_set(g);
  auto dec = decompose(adjacency_matrix(g));
  auto proj = project_all(p, dec);
  REQUIRE(proj.size() == 2);
  // lambda = 1: e_0 and e_1 coincide
  CHECK(proj[0].distinct_count() == 2);
  CHECK(proj[0].fiber[0] == proj[0].fiber[1]);
  auto classes = ell_equivalence_classes(proj[0]);
  CHECK(std::find(classes.begin(), classes.end(), std::vector<std::size_t>{0, 1}) != classes.end());
  // lambda = -1: e_0 -> (1/2, -1/2)
  Eigen::Vector2d e0 = proj[1].distinct_points().col(static_cast<Eigen::Index>(proj[1].fiber[0]));
  CHECK(e0(0) == doctest::Approx(0.5));
  CHECK(e0(1) == doctest::Approx(-0.5));
  CHECK(proj[1].fiber[2] != proj[1].fiber[0]);
}

TEST_CASE("single full eigenspace keeps every point")
{
  auto g = named::empty(4);
  auto p = graph_point_set(g);
  auto proj = project_all(p, decompose(adjacency_matrix(g)));
  REQUIRE(proj.size() == 1);
  CHECK(proj[0].distinct_count() == 4);
  for (auto const &c : ell_equivalence_classes(proj[0]))
    CHECK(c.size() == 1);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK((proj[0].distinct_points().col(static_cast<Eigen::Index>(proj[0].fiber[i])) -
           p.points.col(static_cast<Eigen::Index>(i))).norm() < 1e-12);
}

TEST_CASE("reconstruction, Pythagoras and refinement")
{
  std::mt19937_64 rng(3);
  std::vector<Graph> graphs{named::petersen(), named::cycle(8), named::star(5), named::complete(6)};
  for (std::size_t n : {3u, 10u, 25u, 50u})
    graphs.push_back(evgi::testing::random_graph(n, 0.3, rng));
  for (auto const &g : graphs) {
    auto p = graph_point_set(g);
    CHECK(point_rank(p) == p.ambient_dimension);
    auto proj = project_all(p, decompose(adjacency_matrix(g)));
    auto const count = p.size();
    std::vector<Eigen::MatrixXd> images;
    for (auto const &pr : proj) {
      REQUIRE(pr.fiber.size() == count);
      CHECK(pr.distinct_count() <= count);
      Eigen::MatrixXd img(p.points.rows(), static_cast<Eigen::Index>(count));
      for (std::size_t i = 0; i < count; ++i)
        img.col(static_cast<Eigen::Index>(i)) = pr.distinct_points().col(static_cast<Eigen::Index>(pr.fiber[i]));
      images.push_back(std::move(img));
    }
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(p.points.rows(), p.points.cols());
    for (auto const &img : images)
      sum += img;
    CHECK((sum - p.points).norm() <= 1e-6);

    for (std::size_t i = 0; i < count; i += 3)
      for (std::size_t j = i + 1; j < count; j += 2) {
        double total = 0;
        for (auto const &img : images)
          total += (img.col(static_cast<Eigen::Index>(i)) - img.col(static_cast<Eigen::Index>(j))).squaredNorm();
        CHECK(total == doctest::Approx((p.points.col(static_cast<Eigen::Index>(i)) -
                                        p.points.col(static_cast<Eigen::Index>(j))).squaredNorm()).epsilon(1e-6));
      }

    std::set<std::vector<std::size_t>> signatures;
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<std::size_t> sig;
      for (auto const &pr : proj)
        sig.push_back(pr.fiber[i]);
      signatures.insert(sig);
    }
    CHECK(signatures.size() == count);
  }
}
