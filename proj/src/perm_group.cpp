#include "evgi/perm_group.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <set>
#include <stdexcept>

namespace evgi
{

namespace
{

std::size_t generator_bound(std::size_t degree)
{
  if (degree < 2)
    return 1;
  return static_cast<std::size_t>(
    std::ceil(static_cast<double>(degree) * std::log2(static_cast<double>(degree))));
}

void check_degree(std::size_t expected, Permutation const &p)
{
  if (p.degree() != expected)
    throw std::invalid_argument("permutation degree does not match group degree");
}

} // namespace

PermGroup PermGroup::generate(std::size_t degree,
                              std::span<Permutation const> generators,
                              std::span<Point const> base_prefix)
{
  PermGroup g(degree);
  std::vector<bool> seen(degree, false);
  for (Point b : base_prefix) {
    if (b >= degree)
      throw std::invalid_argument("base point out of range");
    if (!seen[b]) {
      seen[b] = true;
      g.append_base_point(b);
    }
  }
  for (auto const &gen : generators) {
    check_degree(degree, gen);
    if (!gen.is_identity())
      g.add_generator(gen);
  }
  g.prune();
  return g;
}

PermGroup PermGroup::extended(std::span<Permutation const> extra) const
{
  PermGroup g = *this;
  for (auto const &gen : extra) {
    check_degree(_degree, gen);
    if (!gen.is_identity())
      g.add_generator(gen);
  }
  g.prune();
  return g;
}

PermGroup PermGroup::with_base_prefix(std::span<Point const> prefix) const
{
  bool matches = prefix.size() <= _levels.size();
  for (std::size_t i = 0; matches && i < prefix.size(); ++i)
    matches = _levels[i].base_point == prefix[i];
  if (matches)
    return *this;
  return generate(_degree, _strong, prefix);
}

std::vector<Point> PermGroup::base() const
{
  std::vector<Point> b;
  for (auto const &level : _levels)
    b.push_back(level.base_point);
  return b;
}

BigInt PermGroup::order() const
{
  BigInt result = 1;
  for (auto const &level : _levels)
    result *= level.orbit.size();
  return result;
}

bool PermGroup::contains(Permutation const &p) const
{
  check_degree(_degree, p);
  auto [residue, depth] = strip(p, 0);
  return depth == _levels.size() && residue.is_identity();
}

std::pair<Permutation, std::size_t> PermGroup::strip(Permutation g, std::size_t from) const
{
  for (std::size_t l = from; l < _levels.size(); ++l) {
    auto const &level = _levels[l];
    auto slot = level.orbit_slot[g(level.base_point)];
    if (slot < 0)
      return {std::move(g), l};
    g = compose(level.transversal_inverse[static_cast<std::size_t>(slot)], g);
  }
  return {std::move(g), _levels.size()};
}

PermGroup PermGroup::pointwise_stabilizer(std::span<Point const> points) const
{
  std::vector<Point> prefix;
  std::vector<bool> seen(_degree, false);
  for (Point p : points) {
    if (p >= _degree)
      throw std::invalid_argument("stabilized point out of range");
    if (!seen[p]) {
      seen[p] = true;
      prefix.push_back(p);
    }
  }
  PermGroup full = with_base_prefix(prefix);

  PermGroup sub(_degree);
  std::size_t const k = prefix.size();
  std::vector<std::int64_t> remap(full._strong.size(), -1);
  for (std::size_t l = k; l < full._levels.size(); ++l) {
    Level level = full._levels[l];
    std::vector<std::size_t> gens;
    for (std::size_t idx : level.generators) {
      if (remap[idx] < 0) {
        remap[idx] = static_cast<std::int64_t>(sub._strong.size());
        sub._strong.push_back(full._strong[idx]);
      }
      gens.push_back(static_cast<std::size_t>(remap[idx]));
    }
    level.generators = std::move(gens);
    level.checked_generators = level.generators.size();
    level.checked_orbit = level.orbit.size();
    sub._levels.push_back(std::move(level));
  }
  return sub;
}

std::vector<Permutation> PermGroup::elements(std::size_t limit) const
{
  if (order() > limit)
    throw std::length_error("group too large to enumerate");
  std::vector<Permutation> result;
  std::vector<std::size_t> digits(_levels.size(), 0);
  for (;;) {
    Permutation g(_degree);
    for (std::size_t l = 0; l < _levels.size(); ++l)
      g = compose(g, _levels[l].transversal[digits[l]]);
    result.push_back(std::move(g));
    std::size_t l = _levels.size();
    while (l > 0) {
      --l;
      if (++digits[l] < _levels[l].orbit.size())
        break;
      digits[l] = 0;
      if (l == 0)
        return result;
    }
    if (_levels.empty())
      return result;
  }
}

void PermGroup::append_base_point(Point b)
{
  Level level;
  level.base_point = b;
  level.orbit_slot.assign(_degree, -1);
  level.orbit_slot[b] = 0;
  level.orbit.push_back(b);
  level.transversal.emplace_back(_degree);
  level.transversal_inverse.emplace_back(_degree);
  _levels.push_back(std::move(level));
}

void PermGroup::extend_orbit(Level &level)
{
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    for (std::size_t gi : level.generators) {
      auto const &s = _strong[gi];
      Point y = s(level.orbit[k]);
      if (level.orbit_slot[y] >= 0)
        continue;
      level.orbit_slot[y] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(y);
      Permutation u = compose(s, level.transversal[k]);
      level.transversal_inverse.push_back(u.inverse());
      level.transversal.push_back(std::move(u));
    }
  }
}

void PermGroup::add_residue(Permutation h, std::size_t depth)
{
  if (depth == _levels.size())
    append_base_point(h.first_moved_point());
  std::size_t const idx = _strong.size();
  _strong.push_back(std::move(h));
  for (std::size_t l = 0; l <= depth; ++l) {
    _levels[l].generators.push_back(idx);
    extend_orbit(_levels[l]);
  }
}

void PermGroup::add_generator(Permutation const &g)
{
  auto [residue, depth] = strip(g, 0);
  if (depth == _levels.size() && residue.is_identity())
    return;
  add_residue(std::move(residue), depth);
  schreier_sims(depth);
}

void PermGroup::schreier_sims(std::size_t start)
{
  std::size_t i = start;
  for (;;) {
    bool restarted = false;
    Level &level = _levels[i];
    std::size_t const orbit_size = level.orbit.size();
    std::size_t const gen_count = level.generators.size();
    for (std::size_t k = 0; k < orbit_size && !restarted; ++k) {
      for (std::size_t s = 0; s < gen_count; ++s) {
        if (k < level.checked_orbit && s < level.checked_generators)
          continue;
        auto const &gen = _strong[level.generators[s]];
        Point image = gen(level.orbit[k]);
        auto slot = static_cast<std::size_t>(level.orbit_slot[image]);
        Permutation schreier =
          compose(level.transversal_inverse[slot], compose(gen, level.transversal[k]));
        auto [residue, depth] = strip(std::move(schreier), i + 1);
        if (depth < _levels.size() || !residue.is_identity()) {
          add_residue(std::move(residue), depth);
          i = depth;
          restarted = true;
          break;
        }
      }
    }
    if (restarted)
      continue;
    _levels[i].checked_orbit = orbit_size;
    _levels[i].checked_generators = gen_count;
    if (i == 0)
      return;
    --i;
  }
}

void PermGroup::prune()
{
  if (_strong.size() <= generator_bound(_degree))
    return;

  std::vector<bool> removed(_strong.size(), false);
  auto orbit_size = [&](Level const &level) {
    std::vector<bool> in(_degree, false);
    std::vector<Point> orbit{level.base_point};
    in[level.base_point] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (std::size_t gi : level.generators) {
        if (removed[gi])
          continue;
        Point y = _strong[gi](orbit[k]);
        if (!in[y]) {
          in[y] = true;
          orbit.push_back(y);
        }
      }
    return orbit.size();
  };

  for (std::size_t idx = _strong.size(); idx-- > 0;) {
    removed[idx] = true;
    bool redundant = true;
    for (auto const &level : _levels) {
      if (orbit_size(level) != level.orbit.size()) {
        redundant = false;
        break;
      }
    }
    if (!redundant)
      removed[idx] = false;
  }

  std::vector<std::size_t> remap(_strong.size());
  std::vector<Permutation> kept;
  for (std::size_t idx = 0; idx < _strong.size(); ++idx) {
    if (!removed[idx]) {
      remap[idx] = kept.size();
      kept.push_back(std::move(_strong[idx]));
    }
  }
  _strong = std::move(kept);
  for (auto &level : _levels) {
    std::vector<std::size_t> gens;
    for (std::size_t gi : level.generators)
      if (!removed[gi])
        gens.push_back(remap[gi]);
    level.generators = std::move(gens);
    level.checked_generators = level.generators.size();
    level.checked_orbit = level.orbit.size();
  }
}

PermCoset::PermCoset(PermGroup group, Permutation representative)
  : _empty(false), _degree(group.degree()), _group(std::move(group)),
    _rep(std::move(representative))
{
  check_degree(_degree, _rep);
}

PermCoset PermCoset::empty(std::size_t degree)
{
  PermCoset c;
  c._degree = degree;
  c._group = PermGroup(degree);
  return c;
}

PermGroup const &PermCoset::group() const
{
  if (_empty)
    throw std::logic_error("empty coset has no group");
  return _group;
}

Permutation const &PermCoset::representative() const
{
  if (_empty)
    throw std::logic_error("empty coset has no representative");
  return _rep;
}

bool PermCoset::contains(Permutation const &p) const
{
  if (_empty)
    return false;
  return _group.contains(compose(p, _rep.inverse()));
}

BigInt PermCoset::size() const
{
  return _empty ? BigInt(0) : _group.order();
}

std::vector<Permutation> PermCoset::elements(std::size_t limit) const
{
  if (_empty)
    return {};
  auto result = _group.elements(limit);
  for (auto &g : result)
    g = compose(g, _rep);
  return result;
}

PermCoset stabilizer_in_coset(PermCoset const &coset, Point alpha, Point beta)
{
  if (coset.is_empty())
    return coset;
  auto const n = coset.degree();
  if (alpha >= n || beta >= n)
    throw std::invalid_argument("point out of range");
  Point gamma = coset.representative()(alpha);
  std::array<Point, 1> prefix{beta};
  PermGroup g = coset.group().with_base_prefix(prefix);
  Permutation rep = coset.representative();
  if (!g.levels().empty()) {
    auto const &level = g.levels().front();
    auto slot = level.orbit_slot[gamma];
    if (slot < 0)
      return PermCoset::empty(n);
    // transversal[slot] maps beta to gamma; its inverse sends gamma to beta.
    rep = compose(level.transversal_inverse[static_cast<std::size_t>(slot)], rep);
  } else if (gamma != beta) {
    return PermCoset::empty(n);
  }
  return PermCoset(g.pointwise_stabilizer(prefix), std::move(rep));
}

PermCoset stabilize_points_in_coset(PermCoset const &coset, std::span<Point const> points)
{
  if (coset.is_empty())
    return coset;
  auto const n = coset.degree();
  std::vector<Point> prefix;
  std::vector<bool> seen(n, false);
  for (Point p : points) {
    if (p >= n)
      throw std::invalid_argument("point out of range");
    if (!seen[p]) {
      seen[p] = true;
      prefix.push_back(p);
    }
  }
  PermGroup g = coset.group().with_base_prefix(prefix);
  Permutation rep = coset.representative();
  auto const &levels = g.levels();
  // At stage i the current subcoset is G^(i)*rep with G^(i) fixing prefix[0..i).
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    Point gamma = rep(prefix[i]);
    if (i < levels.size()) {
      auto slot = levels[i].orbit_slot[gamma];
      if (slot < 0)
        return PermCoset::empty(n);
      rep = compose(levels[i].transversal_inverse[static_cast<std::size_t>(slot)], rep);
    } else if (gamma != prefix[i]) {
      return PermCoset::empty(n);
    }
  }
  return PermCoset(g.pointwise_stabilizer(prefix), std::move(rep));
}

PermCoset coset_union(std::span<PermCoset const> cosets)
{
  PermCoset const *first = nullptr;
  for (auto const &c : cosets)
    if (!c.is_empty()) {
      first = &c;
      break;
    }
  if (!first)
    return PermCoset::empty(cosets.empty() ? 0 : cosets.front().degree());

  Permutation const &sigma1 = first->representative();
  Permutation const sigma1_inv = sigma1.inverse();
  std::vector<Permutation> extra;
  for (auto const &c : cosets) {
    if (c.is_empty() || &c == first)
      continue;
    if (c.degree() != first->degree())
      throw std::invalid_argument("coset degree mismatch");
    for (auto const &gen : c.group().generators())
      extra.push_back(gen);
    extra.push_back(compose(c.representative(), sigma1_inv));
  }
  PermCoset result(first->group().extended(extra), sigma1);
#ifndef NDEBUG
  for (auto const &c : cosets)
    if (!c.is_empty() && !result.contains(c.representative()))
      throw std::logic_error("coset_union: inputs do not form a single coset");
#endif
  return result;
}

namespace
{

template <class T, class Act>
void orbit_search(PermGroup const &group, T start, Act act, std::vector<T> &elements,
                  std::map<T, Permutation> &witness)
{
  witness.emplace(start, Permutation(group.degree()));
  elements.push_back(start);
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (auto const &s : group.generators()) {
      T image = act(s, elements[k]);
      if (witness.count(image))
        continue;
      Permutation w = compose(s, witness.at(elements[k]));
      witness.emplace(image, std::move(w));
      elements.push_back(std::move(image));
    }
  }
}

} // namespace

PointOrbit orbit_with_witness(PermGroup const &group, Point x)
{
  if (x >= group.degree())
    throw std::invalid_argument("point out of range");
  PointOrbit orbit;
  orbit_search(
    group, x, [](Permutation const &s, Point p) { return s(p); }, orbit.elements,
    orbit.witness);
  return orbit;
}

SetOrbit orbit_with_witness(PermGroup const &group, std::vector<Point> set)
{
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  for (Point p : set)
    if (p >= group.degree())
      throw std::invalid_argument("point out of range");
  SetOrbit orbit;
  orbit_search(
    group, std::move(set),
    [](Permutation const &s, std::vector<Point> const &v) { return s.image_of_set(v); },
    orbit.elements, orbit.witness);
  return orbit;
}

ListedGroup::ListedGroup(std::size_t degree, std::vector<Permutation> elements)
  : _degree(degree), _elements(std::move(elements))
{
  bool has_identity = false;
  for (std::size_t i = 0; i < _elements.size(); ++i) {
    check_degree(degree, _elements[i]);
    if (!_index.emplace(_elements[i], i).second)
      throw std::invalid_argument("listed group has duplicate elements");
    if (_elements[i].is_identity()) {
      has_identity = true;
      _identity = i;
    }
  }
  if (!has_identity)
    throw std::invalid_argument("listed group lacks the identity");
  _group = PermGroup::generate(degree, _elements);
  if (_group.order() != _elements.size())
    throw std::invalid_argument("listed elements are not closed under composition");
  std::vector<bool> moved(degree, false);
  for (auto const &s : _group.generators())
    for (Point x = 0; x < degree; ++x)
      if (s(x) != x)
        moved[x] = true;
  for (Point x = 0; x < degree; ++x)
    if (moved[x])
      _support.push_back(x);
}

ListedGroup ListedGroup::from_group(PermGroup const &group, std::size_t limit)
{
  return ListedGroup(group.degree(), group.elements(limit));
}

std::optional<std::size_t> ListedGroup::index_of(Permutation const &p) const
{
  auto it = _index.find(p);
  if (it == _index.end())
    return std::nullopt;
  return it->second;
}

} // namespace evgi
