#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "evgi/oracle.hpp"
#include "evgi/spectral.hpp"
#include "support.hpp"

using namespace evgi;

namespace
{

std::vector<double> spectrum_with_multiplicity(SpectralDecomposition const &dec)
{
  std::vector<double> out;
  for (auto const &g : dec.groups)
    out.insert(out.end(), g.multiplicity, g.eigenvalue);
  return out;
}

void check_invariants(SymMatrix const &a, SpectralDecomposition const &dec)
{
  auto const n = static_cast<Eigen::Index>(a.dimension());
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd recon = Eigen::MatrixXd::Zero(n, n);
  std::size_t total = 0;
  std::vector<Eigen::MatrixXd> projectors;
  for (auto const &g : dec.groups) {
    auto p = g.projector();
    CHECK((p * p - p).norm() <= 1e-8);
    CHECK((p - p.transpose()).norm() <= 1e-8);
    CHECK(std::abs(p.trace() - static_cast<double>(g.multiplicity)) <= 1e-6);
    sum += p;
    recon += g.eigenvalue * p;
    total += g.multiplicity;
    projectors.push_back(std::move(p));
  }
  CHECK(total == a.dimension());
  CHECK((sum - Eigen::MatrixXd::Identity(n, n)).norm() <= 1e-8);
  CHECK((a.entries() - recon).norm() <= 1e-6);
  for (std::size_t i = 0; i < projectors.size(); ++i)
    for (std::size_t j = i + 1; j < projectors.size(); ++j)
      CHECK((projectors[i] * projectors[j]).norm() <= 1e-8);
  for (std::size_t i = 1; i < dec.groups.size(); ++i)
    CHECK(dec.groups[i - 1].eigenvalue > dec.groups[i].eigenvalue);
}

} // namespace

TEST_CASE("adjacency matrices")
{
  auto k2 = adjacency_matrix(named::complete(2));
  CHECK(k2.entries() == (Eigen::MatrixXd(2, 2) << 0, 1, 1, 0).finished());
  CHECK(adjacency_matrix(named::empty(3)).entries().isZero(0));
  auto tri = adjacency_matrix(named::complete(3));
  CHECK(tri.entries() == Eigen::MatrixXd::Ones(3, 3) - Eigen::MatrixXd::Identity(3, 3));

  Eigen::MatrixXd bad(2, 2);
  bad << 0, 1, 0.5, 0;
  CHECK_THROWS_AS(SymMatrix{bad}, std::invalid_argument);
}

TEST_CASE("K_2 eigenpairs")
{
  auto pairs = eigendecompose(adjacency_matrix(named::complete(2)), 1e-14);
  REQUIRE(pairs.size() == 2);
  std::sort(pairs.begin(), pairs.end(), [](auto &x, auto &y) { return x.value > y.value; });
  double const r = 1 / std::sqrt(2.0);
  CHECK(pairs[0].value == doctest::Approx(1));
  CHECK(pairs[1].value == doctest::Approx(-1));
  CHECK(pairs[0].vector(0) == doctest::Approx(r));
  CHECK(pairs[0].vector(1) == doctest::Approx(r));
  CHECK(pairs[1].vector(0) == doctest::Approx(r));
  CHECK(pairs[1].vector(1) == doctest::Approx(-r));
}

TEST_CASE("zero matrix has a single eigenspace")
{
  auto a = adjacency_matrix(named::empty(5));
  auto dec = decompose(a);
  REQUIRE(dec.groups.size() == 1);
  CHECK(dec.groups[0].eigenvalue == 0);
  CHECK(max_multiplicity(dec) == 5);
  check_invariants(a, dec);
}

TEST_CASE("cycles match the closed form")
{
  for (std::size_t n : {4u, 5u, 6u, 9u, 12u}) {
    auto a = adjacency_matrix(named::cycle(n));
    auto got = spectrum_with_multiplicity(decompose(a));
    std::vector<double> want;
    for (std::size_t j = 0; j < n; ++j)
      want.push_back(2 * std::cos(2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n)));
    std::sort(want.rbegin(), want.rend());
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < n; ++i)
      CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-9));
  }
  auto dec = decompose(adjacency_matrix(named::cycle(4)));
  REQUIRE(dec.groups.size() == 3);
  CHECK(dec.groups[1].multiplicity == 2);
}

TEST_CASE("grouping of nearly equal raw values")
{
  std::vector<EigenPair> raw;
  for (double v : {2.0, 1e-12, -1e-12, -2.0}) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(4);
    e(static_cast<Eigen::Index>(raw.size())) = 1;
    raw.push_back({v, e});
  }
  auto dec = group_eigenvalues(raw, 1e-8);
  REQUIRE(dec.groups.size() == 3);
  CHECK(dec.groups[0].multiplicity == 1);
  CHECK(dec.groups[1].multiplicity == 2);
  CHECK(dec.groups[2].multiplicity == 1);
  CHECK(dec.warnings.empty());

  raw[1].value = 5e-8;
  raw[2].value = 0;
  auto sensitive = group_eigenvalues(raw, 1e-8);
  CHECK(sensitive.groups.size() == 4);
  CHECK(sensitive.warnings.size() == 1);
}

TEST_CASE("Petersen spectrum agrees with the integer characteristic polynomial")
{
  auto g = named::petersen();
  for (long long x = -6; x <= 6; ++x) {
    BigInt want = BigInt(x - 3) * pow(BigInt(x - 1), 5) * pow(BigInt(x + 2), 4);
    CHECK(oracle::characteristic_polynomial_at(g, x) == want);
  }
  auto a = adjacency_matrix(g);
  auto dec = decompose(a);
  REQUIRE(dec.groups.size() == 3);
  CHECK(dec.groups[0].eigenvalue == doctest::Approx(3));
  CHECK(dec.groups[1].eigenvalue == doctest::Approx(1));
  CHECK(dec.groups[2].eigenvalue == doctest::Approx(-2));
  CHECK(dec.groups[0].multiplicity == 1);
  CHECK(dec.groups[1].multiplicity == 5);
  CHECK(dec.groups[2].multiplicity == 4);
  CHECK(max_multiplicity(dec) == 5);
  check_invariants(a, dec);
}

TEST_CASE("P_4 has simple spectrum")
{
  auto dec = decompose(adjacency_matrix(named::path(4)));
  REQUIRE(dec.groups.size() == 4);
  CHECK(max_multiplicity(dec) == 1);
  for (std::size_t j = 1; j <= 4; ++j)
    CHECK(dec.groups[j - 1].eigenvalue ==
          doctest::Approx(2 * std::cos(static_cast<double>(j) * std::numbers::pi / 5)));
}

TEST_CASE("projector invariants on random graphs")
{
  std::mt19937_64 rng(7);
  for (std::size_t n : {1u, 2u, 7u, 20u, 60u, 200u}) {
    auto a = adjacency_matrix(evgi::testing::random_graph(n, 0.3, rng));
    check_invariants(a, decompose(a));
  }
  for (auto const &g : {named::petersen(), named::star(6), named::complete(8), named::cycle(30)}) {
    auto a = adjacency_matrix(g);
    check_invariants(a, decompose(a));
  }
}

TEST_CASE("spectrum of a disjoint union is the multiset union")
{
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto g1 = evgi::testing::random_graph(3 + trial % 9, 0.4, rng);
    auto g2 = evgi::testing::random_graph(2 + trial % 7, 0.5, rng);
    auto s1 = spectrum_with_multiplicity(decompose(adjacency_matrix(g1)));
    auto s2 = spectrum_with_multiplicity(decompose(adjacency_matrix(g2)));
    auto u = adjacency_matrix(Graph::disjoint_union(g1, g2));
    auto dec = decompose(u);
    check_invariants(u, dec);
    auto su = spectrum_with_multiplicity(dec);
    std::vector<double> merged(s1);
    merged.insert(merged.end(), s2.begin(), s2.end());
    std::sort(merged.rbegin(), merged.rend());
    REQUIRE(su.size() == merged.size());
    for (std::size_t i = 0; i < su.size(); ++i)
      CHECK(su[i] == doctest::Approx(merged[i]).epsilon(1e-7));
    auto k1 = decompose(adjacency_matrix(g1)).max_multiplicity();
    auto k2 = decompose(adjacency_matrix(g2)).max_multiplicity();
    CHECK(dec.max_multiplicity() <= k1 + k2);
  }
}
