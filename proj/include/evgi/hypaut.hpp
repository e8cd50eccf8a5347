#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "evgi/coset_intersection.hpp"
#include "evgi/perm_group.hpp"
#include "evgi/permutation.hpp"

namespace evgi
{

/// Vertices of colour c are local indices 0..class_sizes[c]-1; globally they
/// follow all vertices of smaller colours.
struct Hyperedge
{
  std::vector<std::vector<Point>> traces; // per colour, sorted local indices
  BigInt multiplicity = 1;
};

struct ColoredMultiHypergraph
{
  std::vector<std::size_t> class_sizes;
  std::vector<ListedGroup> groups; // on local indices
  std::vector<Hyperedge> hyperedges;

  std::size_t color_count() const { return class_sizes.size(); }
  std::size_t vertex_count() const;
  std::size_t offset(std::size_t color) const;

  /// Throws std::invalid_argument on inconsistent sizes or traces.
  void validate() const;

  /// Sorts traces and hyperedges and merges repeated hyperedges.
  void canonicalize();

  /// JSON with global vertex ids: colour classes as id lists, group
  /// elements in 1-based cycle notation, hyperedges with decimal
  /// multiplicities.
  std::string to_json() const;
  static ColoredMultiHypergraph from_json(std::string const &text);
};

/// The product of the chosen listed elements as a permutation of all vertices.
Permutation product_element(ColoredMultiHypergraph const &x, std::vector<std::size_t> const &indices);

/// Equivalence class of hyperedges agreeing on every colour >= level.
struct Block
{
  std::size_t level = 0;
  std::size_t begin = 0, end = 0;    // range of canonical hyperedge indices
  std::vector<std::size_t> children; // blocks of level-1
  std::uint64_t fingerprint = 0;
};

/// Blocks of one level, keyed by the traces on colours level..r-1 in
/// canonical order. Level r is the single block of all hyperedges; level 0
/// has one block per distinct hyperedge. Expects a canonical instance.
std::vector<Block> build_blocks(ColoredMultiHypergraph const &x, std::size_t level);

/// Elements of G_1 mapping trace a to trace b when the multiplicities
/// agree; a coset on the local indices of the colour.
PermCoset stage0(std::vector<Point> const &a, BigInt const &mult_a, std::vector<Point> const &b,
                 BigInt const &mult_b, ListedGroup const &g);

struct TauChoice
{
  std::size_t element = 0;            // index into the listed group
  std::vector<std::size_t> tau_hat;   // tau(a_i) == b_{tau_hat[i]}
};

/// Every listed tau whose set action sends {a_i} onto {b_i}.
std::vector<TauChoice> compute_S_ell(std::vector<std::vector<Point>> const &a,
                                     std::vector<std::vector<Point>> const &b, ListedGroup const &g);

struct HypAutResult
{
  /// Generators as one listed-group element index per colour.
  std::vector<std::vector<std::size_t>> generators;
  BigInt order = 1;
};

/**
 * Dynamic programme over blocks. Table entries are cosets in the product of
 * the listed groups, acting faithfully on a compact domain: each colour with
 * a non-trivial group contributes either the support of its group or, if
 * that is larger, a regular copy of the group.
 */
class HypAutSolver
{
public:
  explicit HypAutSolver(ColoredMultiHypergraph x);

  ColoredMultiHypergraph const &instance() const { return _x; }
  std::vector<Block> const &blocks(std::size_t level) const { return _blocks[level]; }

  /// ISO(A_[level], B_[level]) on the compact domain.
  PermCoset const &iso(std::size_t level, std::size_t a, std::size_t b);

  /// Converts a compact product element to one element index per colour.
  std::vector<std::size_t> element_indices(Permutation const &compact) const;

  /// The product element as a permutation of all vertices.
  Permutation to_vertex_permutation(Permutation const &compact) const;

  HypAutResult solve();

  std::size_t table_size() const { return _table.size(); }

private:
  struct Key
  {
    std::size_t level, a, b;
    bool operator==(Key const &) const = default;
  };
  struct KeyHash
  {
    std::size_t operator()(Key const &k) const;
  };

  PermCoset compute(std::size_t level, std::size_t a, std::size_t b);
  PermCoset single_edge(std::size_t level, std::size_t ea, std::size_t eb);
  PermCoset intersect_all(std::vector<PermCoset const *> cosets);
  Permutation embed(std::size_t color, std::size_t element) const;
  std::vector<Point> const &trace(std::size_t edge, std::size_t color) const
  {
    return _x.hyperedges[edge].traces[color];
  }

  ColoredMultiHypergraph _x;
  std::vector<std::vector<Block>> _blocks; // by level 0..r
  std::size_t _degree = 0;
  std::vector<std::size_t> _offset;                     // compact offset per colour
  std::vector<std::size_t> _size;                       // compact size per colour (0 if trivial)
  std::vector<std::vector<std::vector<Point>>> _local;  // compact action of each element
  std::vector<std::unordered_map<std::vector<Point>, std::size_t, PointVectorHash>> _lookup;
  std::vector<ColorGroup> _colors;
  std::map<std::tuple<std::size_t, std::vector<Point>>, std::vector<Permutation>> _stabilizers;
  std::unordered_map<Key, PermCoset, KeyHash> _table;
  PermCoset _empty;
};

/// Generating set of Aut(X) ∩ G_1 x ... x G_r.
HypAutResult hyp_aut(ColoredMultiHypergraph const &x);

/// The same group as permutations of all vertices.
PermGroup hyp_aut_group(ColoredMultiHypergraph const &x);

} // namespace evgi
