#include "evgi/coset_intersection.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace evgi
{

namespace
{

constexpr std::int64_t uncolored = -1;

struct ColorIndex
{
  std::vector<std::int64_t> color_of;
  std::vector<Point> local_of;
};

ColorIndex index_colors(std::size_t degree, std::span<ColorGroup const> colors)
{
  ColorIndex index{std::vector<std::int64_t>(degree, uncolored), std::vector<Point>(degree, 0)};
  for (std::size_t c = 0; c < colors.size(); ++c) {
    auto const &cg = colors[c];
    if (cg.group.degree() != cg.points.size())
      throw std::invalid_argument("listed group degree does not match colour class size");
    for (std::size_t k = 0; k < cg.points.size(); ++k) {
      Point p = cg.points[k];
      if (p >= degree || index.color_of[p] != uncolored)
        throw std::invalid_argument("colour classes must be disjoint and inside the domain");
      index.color_of[p] = static_cast<std::int64_t>(c);
      index.local_of[p] = static_cast<Point>(k);
    }
  }
  return index;
}

Permutation restrict_to(Permutation const &p, ColorGroup const &cg, ColorIndex const &index,
                        std::size_t color)
{
  std::vector<Point> local(cg.points.size());
  for (std::size_t k = 0; k < cg.points.size(); ++k) {
    Point image = p(cg.points[k]);
    if (index.color_of[image] != static_cast<std::int64_t>(color))
      throw std::invalid_argument("permutation does not preserve colour classes");
    local[k] = index.local_of[image];
  }
  return Permutation(std::move(local));
}

void validate(Permutation const &p, std::span<ColorGroup const> colors, ColorIndex const &index)
{
  for (std::size_t x = 0; x < p.degree(); ++x)
    if (index.color_of[x] == uncolored && p(static_cast<Point>(x)) != x)
      throw std::invalid_argument("permutation moves a point outside the colour classes");
  for (std::size_t c = 0; c < colors.size(); ++c)
    if (!colors[c].group.index_of(restrict_to(p, colors[c], index, c)))
      throw std::invalid_argument("restriction to a colour class is not in the listed group");
}

bool moves_color(Permutation const &p, ColorGroup const &cg)
{
  for (Point x : cg.points)
    if (p(x) != x)
      return true;
  return false;
}

/// Orbit of the diagonal of V_i x V_i under G_i x G_i. A set of pairs is
/// stored as sorted codes a*k + b over local indices.
struct DiagonalOrbit
{
  std::size_t color = 0;
  std::size_t offset = 0;
  std::vector<std::vector<Point>> sets;
  std::unordered_map<std::vector<Point>, std::size_t, PointVectorHash> index;
};

DiagonalOrbit diagonal_orbit(ColorGroup const &cg, std::size_t color)
{
  auto const k = static_cast<Point>(cg.points.size());
  DiagonalOrbit orbit;
  orbit.color = color;
  std::vector<Point> diagonal(k);
  for (Point a = 0; a < k; ++a)
    diagonal[a] = a * k + a;
  orbit.index.emplace(diagonal, 0);
  orbit.sets.push_back(std::move(diagonal));
  auto const &gens = cg.group.generators();
  for (std::size_t s = 0; s < orbit.sets.size(); ++s) {
    for (auto const &g : gens) {
      for (int side = 0; side < 2; ++side) {
        std::vector<Point> image;
        image.reserve(k);
        for (Point code : orbit.sets[s]) {
          Point a = code / k, b = code % k;
          if (side == 0)
            a = g(a);
          else
            b = g(b);
          image.push_back(a * k + b);
        }
        std::sort(image.begin(), image.end());
        if (orbit.index.emplace(image, orbit.sets.size()).second)
          orbit.sets.push_back(std::move(image));
      }
    }
  }
  return orbit;
}

} // namespace

PermCoset restricted_coset_intersection(PermGroup const &h, Permutation const &pi,
                                        PermGroup const &h2, Permutation const &pi2,
                                        std::span<ColorGroup const> colors)
{
  auto const n = h.degree();
  if (h2.degree() != n || pi.degree() != n || pi2.degree() != n)
    throw std::invalid_argument("degree mismatch in coset intersection");
  auto const index = index_colors(n, colors);
  for (auto const &g : h.generators())
    validate(g, colors, index);
  for (auto const &g : h2.generators())
    validate(g, colors, index);
  validate(pi, colors, index);
  validate(pi2, colors, index);

  PermCoset a(h, pi), b(h2, pi2);
  // Fast paths: a trivial side is a single element to test for membership.
  if (h.is_trivial())
    return b.contains(pi) ? PermCoset(PermGroup(n), pi) : PermCoset::empty(n);
  if (h2.is_trivial())
    return a.contains(pi2) ? PermCoset(PermGroup(n), pi2) : PermCoset::empty(n);

  if (h.order() == h2.order() &&
      std::all_of(h.generators().begin(), h.generators().end(),
                  [&](Permutation const &g) { return h2.contains(g); }))
    return a.contains(pi2) ? a : PermCoset::empty(n);

  std::vector<DiagonalOrbit> orbits;
  std::size_t degree = 2 * n;
  for (std::size_t c = 0; c < colors.size(); ++c) {
    bool active = moves_color(pi, colors[c]) || moves_color(pi2, colors[c]);
    for (auto const &g : h.generators())
      active = active || moves_color(g, colors[c]);
    for (auto const &g : h2.generators())
      active = active || moves_color(g, colors[c]);
    if (!active)
      continue;
    orbits.push_back(diagonal_orbit(colors[c], c));
    orbits.back().offset = degree;
    degree += orbits.back().sets.size();
  }

  // The pair (x, y) acting on 2n + |Omega| points.
  auto pair_action = [&](Permutation const &x, Permutation const &y) {
    std::vector<Point> images(degree);
    for (std::size_t p = 0; p < n; ++p) {
      images[p] = x(static_cast<Point>(p));
      images[n + p] = static_cast<Point>(n + y(static_cast<Point>(p)));
    }
    for (auto const &orbit : orbits) {
      auto const &cg = colors[orbit.color];
      auto xl = restrict_to(x, cg, index, orbit.color);
      auto yl = restrict_to(y, cg, index, orbit.color);
      auto const k = static_cast<Point>(cg.points.size());
      std::vector<Point> image(k);
      for (std::size_t s = 0; s < orbit.sets.size(); ++s) {
        std::size_t i = 0;
        for (Point code : orbit.sets[s])
          image[i++] = xl(code / k) * k + yl(code % k);
        std::sort(image.begin(), image.end());
        auto it = orbit.index.find(image);
        if (it == orbit.index.end())
          throw std::logic_error("diagonal orbit is not closed");
        images[orbit.offset + s] = static_cast<Point>(orbit.offset + it->second);
      }
    }
    return Permutation(std::move(images));
  };

  Permutation const id(n);
  std::vector<Permutation> gens;
  for (auto const &g : h.generators())
    gens.push_back(pair_action(g, id));
  for (auto const &g : h2.generators())
    gens.push_back(pair_action(id, g));
  std::vector<Point> diagonals;
  for (auto const &orbit : orbits)
    diagonals.push_back(static_cast<Point>(orbit.offset));

  PermCoset pairs(PermGroup::generate(degree, gens, diagonals), pair_action(pi, pi2));
  auto fixed = stabilize_points_in_coset(pairs, diagonals);
  if (fixed.is_empty())
    return PermCoset::empty(n);

  auto project = [&](Permutation const &pair) {
    std::vector<Point> first(n);
    for (std::size_t p = 0; p < n; ++p) {
      first[p] = pair(static_cast<Point>(p));
      if (pair(static_cast<Point>(n + p)) != n + first[p])
        throw std::logic_error("diagonal stabilizer element has unequal components");
    }
    return Permutation(std::move(first));
  };
  std::vector<Permutation> meet_gens;
  for (auto const &g : fixed.group().generators())
    meet_gens.push_back(project(g));
  return PermCoset(PermGroup::generate(n, meet_gens), project(fixed.representative()));
}

PermCoset restricted_coset_intersection(PermCoset const &a, PermCoset const &b,
                                        std::span<ColorGroup const> colors)
{
  if (a.is_empty() || b.is_empty())
    return PermCoset::empty(a.degree());
  return restricted_coset_intersection(a.group(), a.representative(), b.group(),
                                       b.representative(), colors);
}

} // namespace evgi
