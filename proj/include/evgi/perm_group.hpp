#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "evgi/permutation.hpp"

namespace evgi
{

using BigInt = boost::multiprecision::cpp_int;

/**
 * A permutation group stored as a base and strong generating set.
 *
 * Construction runs a deterministic Schreier-Sims: base points are the
 * caller-supplied prefix followed by the first point moved by each residue
 * that sifts through the current chain. Transversals hold explicit coset
 * representatives together with their inverses.
 */
class PermGroup
{
public:
  struct Level
  {
    Point base_point = 0;
    std::vector<std::size_t> generators;  // indices into generators()
    std::vector<std::int32_t> orbit_slot; // point -> orbit index or -1
    std::vector<Point> orbit;
    std::vector<Permutation> transversal; // transversal[k](base_point) == orbit[k]
    std::vector<Permutation> transversal_inverse;
    std::size_t checked_orbit = 0;
    std::size_t checked_generators = 0;
  };

  PermGroup() = default;

  /// Trivial group of the given degree.
  explicit PermGroup(std::size_t degree) : _degree(degree) {}

  /// Group generated by `generators`, with base starting at `base_prefix`.
  static PermGroup generate(std::size_t degree,
                            std::span<Permutation const> generators,
                            std::span<Point const> base_prefix = {});

  /// This group enlarged by `extra` generators (non-members only).
  PermGroup extended(std::span<Permutation const> extra) const;

  /// The same group with a base that starts with `prefix`.
  PermGroup with_base_prefix(std::span<Point const> prefix) const;

  std::size_t degree() const { return _degree; }
  std::vector<Permutation> const &generators() const { return _strong; }
  std::vector<Level> const &levels() const { return _levels; }
  std::vector<Point> base() const;

  BigInt order() const;
  bool is_trivial() const { return _strong.empty(); }
  bool contains(Permutation const &p) const;

  /// Subgroup fixing every point of `points`.
  PermGroup pointwise_stabilizer(std::span<Point const> points) const;

  /// All elements; throws std::length_error when the order exceeds `limit`.
  std::vector<Permutation> elements(std::size_t limit = 1000000) const;

  /// Residue of sifting `g` from level `from`, and the level where it stopped.
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from = 0) const;

private:
  void append_base_point(Point b);
  void extend_orbit(Level &level);
  void add_residue(Permutation h, std::size_t depth);
  void add_generator(Permutation const &g);
  void schreier_sims(std::size_t start);
  void prune();

  std::size_t _degree = 0;
  std::vector<Permutation> _strong;
  std::vector<Level> _levels;
};

/**
 * A right coset G*sigma = { g∘sigma : g in G }, or the empty set.
 */
class PermCoset
{
public:
  PermCoset() = default;
  PermCoset(PermGroup group, Permutation representative);

  static PermCoset empty(std::size_t degree);

  bool is_empty() const { return _empty; }
  std::size_t degree() const { return _degree; }
  PermGroup const &group() const;
  Permutation const &representative() const;

  bool contains(Permutation const &p) const;
  BigInt size() const;
  std::vector<Permutation> elements(std::size_t limit = 1000000) const;

private:
  bool _empty = true;
  std::size_t _degree = 0;
  PermGroup _group;
  Permutation _rep;
};

/// Subcoset { x in coset : x(alpha) == beta }.
PermCoset stabilizer_in_coset(PermCoset const &coset, Point alpha, Point beta);

/// Subcoset of elements fixing every point of `points`.
PermCoset stabilize_points_in_coset(PermCoset const &coset, std::span<Point const> points);

/**
 * Union of cosets known to form a single coset. The representative of the
 * first non-empty input is kept; the group is generated by all input
 * generators plus sigma_i∘sigma_1^{-1}. Empty inputs are skipped.
 */
PermCoset coset_union(std::span<PermCoset const> cosets);

struct PointOrbit
{
  std::vector<Point> elements;
  std::map<Point, Permutation> witness;
};

struct SetOrbit
{
  std::vector<std::vector<Point>> elements;
  std::map<std::vector<Point>, Permutation> witness;
};

/// Orbit of a point; witness[y](x) == y.
PointOrbit orbit_with_witness(PermGroup const &group, Point x);

/// Orbit of a point set under the induced set action.
SetOrbit orbit_with_witness(PermGroup const &group, std::vector<Point> set);

/**
 * A permutation group given as an explicit list of its elements.
 */
class ListedGroup
{
public:
  ListedGroup() = default;

  /// Validates that the list contains the identity and is closed.
  ListedGroup(std::size_t degree, std::vector<Permutation> elements);

  /// Explicit listing of a group given by generators.
  static ListedGroup from_group(PermGroup const &group, std::size_t limit = 1000000);

  std::size_t degree() const { return _degree; }
  std::size_t size() const { return _elements.size(); }
  std::vector<Permutation> const &elements() const { return _elements; }
  Permutation const &element(std::size_t i) const { return _elements[i]; }
  std::optional<std::size_t> index_of(Permutation const &p) const;
  std::size_t identity_index() const { return _identity; }

  /// Strong generators of the listed group.
  std::vector<Permutation> const &generators() const { return _group.generators(); }
  PermGroup const &group() const { return _group; }

  /// Points moved by some element, ascending.
  std::vector<Point> const &support() const { return _support; }

private:
  std::size_t _degree = 0;
  std::vector<Permutation> _elements;
  std::unordered_map<Permutation, std::size_t, PermutationHash> _index;
  std::size_t _identity = 0;
  PermGroup _group;
  std::vector<Point> _support;
};

} // namespace evgi
