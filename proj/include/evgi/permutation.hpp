#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evgi
{

using Point = std::uint32_t;

/**
 * A permutation of {0, ..., degree-1} stored as its image array.
 *
 * Permutations act on the left: `p(x)` is the image of x, and
 * `compose(p, q)` is the map x -> p(q(x)).
 */
class Permutation
{
public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Builds a permutation from disjoint cycles given as 0-based points.
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const &cycles);

  /// Parses disjoint-cycle notation such as "(1 2 3)(4 5)" or "()".
  static Permutation parse_cycles(std::string_view text, std::size_t degree,
                                  bool one_based = true);

  std::size_t degree() const { return _images.size(); }
  Point operator()(Point x) const { return _images[x]; }
  Point operator[](std::size_t x) const { return _images[x]; }
  std::span<Point const> images() const { return _images; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Non-trivial cycles, each starting at its smallest point, sorted.
  std::vector<std::vector<Point>> cycles() const;

  /// Disjoint-cycle notation, "()" for the identity.
  std::string to_cycle_string(bool one_based = true) const;

  /// Image array rendered as "[a b c ...]".
  std::string to_image_string(bool one_based = true) const;

  /// Sorted image of a point set.
  std::vector<Point> image_of_set(std::span<Point const> set) const;

  /// Pointwise image of a tuple.
  std::vector<Point> image_of_tuple(std::span<Point const> tuple) const;

  /// First point moved, or degree() for the identity.
  Point first_moved_point() const;

  auto operator<=>(Permutation const &) const = default;
  bool operator==(Permutation const &) const = default;

private:
  friend Permutation compose(Permutation const &p, Permutation const &q);

  std::vector<Point> _images;
};

/// x -> p(q(x)); throws std::invalid_argument on degree mismatch.
Permutation compose(Permutation const &p, Permutation const &q);

inline Permutation operator*(Permutation const &p, Permutation const &q)
{
  return compose(p, q);
}

struct PermutationHash
{
  std::size_t operator()(Permutation const &p) const noexcept;
};

/// Hash for point tuples and sets.
struct PointVectorHash
{
  std::size_t operator()(std::vector<Point> const &v) const noexcept;
};

} // namespace evgi
