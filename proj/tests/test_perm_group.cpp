#include <doctest.h>

#include <random>

#include "evgi/oracle.hpp"
#include "evgi/perm_group.hpp"
#include "support.hpp"

using namespace evgi;
using evgi::testing::as_set;
using evgi::testing::random_permutation;

namespace
{

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> cycles)
{
  return Permutation::from_cycles(n, cycles);
}

PermGroup group_of(std::size_t n, std::vector<Permutation> gens)
{
  return PermGroup::generate(n, gens);
}

} // namespace

TEST_CASE("permutation algebra")
{
  auto t = cyc(3, {{0, 1}});
  CHECK(compose(t, t).is_identity());
  CHECK(cyc(3, {{0, 1, 2}}).inverse() == cyc(3, {{0, 2, 1}}));
  std::vector<Point> set{0, 2};
  CHECK(t.image_of_set(set) == std::vector<Point>{1, 2});
  CHECK(cyc(4, {{0, 1, 2}}).image_of_tuple(std::vector<Point>{2, 0}) == std::vector<Point>{0, 1});
  CHECK_THROWS_AS(compose(Permutation(3), Permutation(4)), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), std::invalid_argument);
}

TEST_CASE("cycle notation is 1-based and round-trips")
{
  auto p = cyc(5, {{0, 3}, {1, 2, 4}});
  CHECK(p.to_cycle_string() == "(1 4)(2 3 5)");
  CHECK(p.to_image_string() == "[4 3 5 1 2]");
  CHECK(Permutation::parse_cycles("(1 4)(2 3 5)", 5) == p);
  CHECK(Permutation(4).to_cycle_string() == "()");
  CHECK(Permutation::parse_cycles("()", 4).is_identity());
  CHECK_THROWS(Permutation::parse_cycles("(1 2", 4));
  CHECK_THROWS(Permutation::parse_cycles("(1 9)", 4));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto q = random_permutation(9, rng);
    CHECK(Permutation::parse_cycles(q.to_cycle_string(), 9) == q);
  }
}

TEST_CASE("build_group orders")
{
  auto s4 = group_of(4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})});
  auto closure = oracle::enumerate_closure(4, s4.generators());
  CHECK(closure.size() == 24);
  CHECK(s4.order() == 24);

  CHECK(PermGroup::generate(3, {}).order() == 1);
  CHECK(group_of(4, {cyc(4, {{0, 1}, {2, 3}})}).order() == 2);
  CHECK(group_of(3, {cyc(3, {{0, 1, 2}})}).order() == 3);

  auto s8 = group_of(8, {cyc(8, {{0, 1}}), cyc(8, {{0, 1, 2, 3, 4, 5, 6, 7}})});
  CHECK(s8.order() == 40320);

  BigInt factorial = 1;
  for (std::size_t n = 2; n <= 6; ++n) {
    factorial *= n;
    std::vector<Point> long_cycle(n);
    std::iota(long_cycle.begin(), long_cycle.end(), Point{0});
    std::vector<Permutation> gens{cyc(n, {{0, 1}}), cyc(n, {long_cycle})};
    auto sn = group_of(n, gens);
    CHECK(sn.order() == factorial);
    CHECK(BigInt(oracle::enumerate_closure(n, gens, 1000).size()) == factorial);
  }
}

TEST_CASE("order of a large symmetric group exceeds 64 bits")
{
  std::vector<Point> long_cycle(30);
  std::iota(long_cycle.begin(), long_cycle.end(), Point{0});
  auto s30 = group_of(30, {cyc(30, {{0, 1}}), cyc(30, {long_cycle})});
  CHECK(s30.order().str() == "265252859812191058636308480000000");
  CHECK(s30.generators().size() <= 30 * 5);
}

TEST_CASE("membership")
{
  auto c3 = group_of(3, {cyc(3, {{0, 1, 2}})});
  CHECK(c3.contains(cyc(3, {{0, 2, 1}})));
  CHECK_FALSE(c3.contains(cyc(3, {{0, 1}})));
  CHECK(c3.contains(Permutation(3)));
  CHECK(PermGroup(5).contains(Permutation(5)));
}

TEST_CASE("pointwise stabilizer")
{
  auto s4 = group_of(4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})});
  std::vector<Point> zero{0};
  CHECK(s4.pointwise_stabilizer(zero).order() == 6);
  CHECK(s4.pointwise_stabilizer(std::vector<Point>{}).order() == 24);
  CHECK(s4.pointwise_stabilizer(std::vector<Point>{0, 1, 2, 3}).order() == 1);
  auto stab = s4.pointwise_stabilizer(std::vector<Point>{2, 0});
  CHECK(stab.order() == 2);
  for (auto const &g : stab.generators()) {
    CHECK(g(0) == 0);
    CHECK(g(2) == 2);
  }
}

TEST_CASE("stabilizer_in_coset")
{
  auto s3 = group_of(3, {cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})});
  auto sub = stabilizer_in_coset(PermCoset(s3, Permutation(3)), 0, 0);
  REQUIRE_FALSE(sub.is_empty());
  CHECK(sub.size() == 2);
  for (auto const &x : sub.elements())
    CHECK(x(0) == 0);

  auto trivial = PermCoset(PermGroup(3), Permutation(3));
  CHECK(stabilizer_in_coset(trivial, 0, 1).is_empty());

  auto c2 = PermCoset(group_of(3, {cyc(3, {{0, 1}})}), Permutation(3));
  auto moved = stabilizer_in_coset(c2, 0, 1);
  REQUIRE_FALSE(moved.is_empty());
  CHECK(moved.group().is_trivial());
  CHECK(moved.representative() == cyc(3, {{0, 1}}));

  CHECK(stabilizer_in_coset(PermCoset::empty(3), 0, 0).is_empty());
}

TEST_CASE("stabilizer_in_coset agrees with enumeration")
{
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 3 + trial % 5;
    std::vector<Permutation> gens;
    for (int k = 0; k < 1 + trial % 3; ++k)
      gens.push_back(random_permutation(n, rng));
    PermCoset coset(group_of(n, gens), random_permutation(n, rng));
    Point alpha = static_cast<Point>(rng() % n);
    Point beta = static_cast<Point>(rng() % n);
    std::set<Permutation> expected;
    for (auto const &x : coset.elements())
      if (x(alpha) == beta)
        expected.insert(x);
    auto sub = stabilizer_in_coset(coset, alpha, beta);
    CHECK(as_set(sub.elements()) == expected);

    std::vector<Point> pts{alpha, beta};
    std::set<Permutation> fixed;
    for (auto const &x : coset.elements())
      if (x(alpha) == alpha && x(beta) == beta)
        fixed.insert(x);
    CHECK(as_set(stabilize_points_in_coset(coset, pts).elements()) == fixed);
  }
}

TEST_CASE("coset_union")
{
  PermGroup trivial(3);
  std::vector<PermCoset> two{PermCoset(trivial, Permutation(3)),
                             PermCoset(trivial, cyc(3, {{0, 1}}))};
  auto u = coset_union(two);
  CHECK(u.representative().is_identity());
  CHECK(u.size() == 2);
  CHECK(u.contains(cyc(3, {{0, 1}})));

  auto c3 = PermCoset(group_of(3, {cyc(3, {{0, 1, 2}})}), cyc(3, {{1, 2}}));
  std::vector<PermCoset> single{c3};
  auto same = coset_union(single);
  CHECK(as_set(same.elements()) == as_set(c3.elements()));

  auto h = group_of(3, {cyc(3, {{0, 1}})});
  std::vector<PermCoset> three{PermCoset(h, Permutation(3)), PermCoset(h, cyc(3, {{0, 2}})),
                               PermCoset(h, cyc(3, {{1, 2}}))};
  auto s3 = coset_union(three);
  CHECK(s3.size() == 6);
  CHECK(s3.representative().is_identity());
  BigInt total = 0;
  for (auto const &c : three) {
    total += c.size();
    for (auto const &x : c.elements())
      CHECK(s3.contains(x));
  }
  CHECK(total == s3.size());

  std::vector<PermCoset> empties{PermCoset::empty(3), PermCoset::empty(3)};
  CHECK(coset_union(empties).is_empty());
  std::vector<PermCoset> mixed{PermCoset::empty(3), c3};
  CHECK(coset_union(mixed).size() == 3);
}

TEST_CASE("orbits with witnesses")
{
  auto c3 = group_of(3, {cyc(3, {{0, 1, 2}})});
  auto orbit = orbit_with_witness(c3, 0);
  CHECK(std::set<Point>(orbit.elements.begin(), orbit.elements.end()) == std::set<Point>{0, 1, 2});
  for (auto const &[y, w] : orbit.witness)
    CHECK(w(0) == y);

  auto t = orbit_with_witness(PermGroup(4), 2);
  CHECK(t.elements == std::vector<Point>{2});

  auto s3 = group_of(3, {cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})});
  auto sets = orbit_with_witness(s3, std::vector<Point>{1, 0});
  std::set<std::vector<Point>> got(sets.elements.begin(), sets.elements.end());
  CHECK(got == std::set<std::vector<Point>>{{0, 1}, {0, 2}, {1, 2}});
  for (auto const &[s, w] : sets.witness)
    CHECK(w.image_of_set(std::vector<Point>{0, 1}) == s);
}

TEST_CASE("random groups agree with closure enumeration")
{
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + trial % 7;
    std::vector<Permutation> gens;
    for (int k = 0; k < 1 + static_cast<int>(rng() % 3); ++k) {
      // Mix small-support elements with random ones so proper subgroups appear.
      if (rng() % 2) {
        Point a = static_cast<Point>(rng() % n), b = static_cast<Point>(rng() % n);
        gens.push_back(a == b ? Permutation(n) : cyc(n, {{a, b}}));
      } else {
        gens.push_back(random_permutation(n, rng));
      }
    }
    auto g = group_of(n, gens);
    auto closure = oracle::enumerate_closure(n, gens, 50000);
    auto closure_set = as_set(closure);
    REQUIRE(g.order() == closure.size());

    for (auto const &s : g.generators())
      CHECK(closure_set.count(s));
    CHECK(g.generators().size() <= std::max<std::size_t>(1, n * 3));

    for (int w = 0; w < 5; ++w) {
      Permutation word(n);
      for (int len = 0; len < 6; ++len)
        word = word * gens[rng() % gens.size()];
      CHECK(g.contains(word));
      auto outsider = random_permutation(n, rng);
      CHECK(g.contains(outsider) == (closure_set.count(outsider) > 0));
    }

    Point alpha = static_cast<Point>(rng() % n);
    auto orbit = orbit_with_witness(g, alpha);
    std::vector<Point> fix{alpha};
    CHECK(BigInt(orbit.elements.size()) * g.pointwise_stabilizer(fix).order() == g.order());
  }
}
