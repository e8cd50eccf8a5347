#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "evgi/graph.hpp"
#include "evgi/hypaut.hpp"
#include "evgi/perm_group.hpp"
#include "evgi/permutation.hpp"

// Naive reference implementations used to cross-check the pipeline. They
// share nothing with the production paths beyond applying permutations.
namespace evgi::oracle
{

/// All vertex permutations preserving adjacency; n <= 10.
std::vector<Permutation> brute_aut(Graph const &g);

/// First edge-preserving bijection in lexicographic order; n <= 8.
std::optional<std::vector<Point>> brute_iso(Graph const &a, Graph const &b);

/// Permutations preserving all norms and pairwise distances within eps; m <= 8.
std::vector<Permutation> brute_geom_aut(std::vector<std::vector<double>> const &points,
                                        double eps = 1e-6);

/// Closure of a generating set by breadth-first multiplication.
std::vector<Permutation> enumerate_closure(std::size_t degree,
                                           std::span<Permutation const> generators,
                                           std::size_t limit = 10000);

/// Element-wise intersection of two cosets with at most 10^4 elements each.
std::vector<Permutation> brute_coset_meet(PermCoset const &a, PermCoset const &b);

/// Elements of G_1 x ... x G_colors (identity on later colours) mapping the
/// multiset of traces of `a` on those colours onto that of `b`; the product
/// of the listed groups is enumerated, at most 10^5 elements.
std::vector<Permutation> brute_hyp_iso(ColoredMultiHypergraph const &x, std::span<Hyperedge const> a,
                                       std::span<Hyperedge const> b, std::size_t colors);

/// brute_hyp_iso of the whole hyperedge multiset with itself.
std::vector<Permutation> brute_hyp_aut(ColoredMultiHypergraph const &x);

/// det(x*I - A) in exact integer arithmetic (fraction-free elimination).
BigInt characteristic_polynomial_at(Graph const &g, long long x);

} // namespace evgi::oracle
