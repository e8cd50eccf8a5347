#include "evgi/hypaut.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "evgi/error.hpp"

namespace evgi
{

namespace
{

std::uint64_t mix(std::uint64_t h, std::uint64_t v)
{
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h *= 0xff51afd7ed558ccdULL;
  return h ^ (h >> 33);
}

std::uint64_t hash_points(std::vector<Point> const &pts)
{
  std::uint64_t h = 0x51ed27ULL + pts.size();
  for (Point p : pts)
    h = mix(h, p);
  return h;
}

bool edge_order(Hyperedge const &x, Hyperedge const &y)
{
  for (std::size_t c = x.traces.size(); c-- > 0;)
    if (x.traces[c] != y.traces[c])
      return x.traces[c] < y.traces[c];
  return false;
}

bool agree_from(Hyperedge const &x, Hyperedge const &y, std::size_t level)
{
  for (std::size_t c = level; c < x.traces.size(); ++c)
    if (x.traces[c] != y.traces[c])
      return false;
  return true;
}

/// Hash of the lexicographically least image of `trace` under the group.
class CanonicalTraces
{
public:
  explicit CanonicalTraces(ColoredMultiHypergraph const &x) : _x(x) {}

  std::uint64_t operator()(std::size_t color, std::vector<Point> const &trace)
  {
    auto key = std::make_pair(color, trace);
    auto it = _cache.find(key);
    if (it != _cache.end())
      return it->second;
    std::vector<Point> best = trace;
    for (auto const &g : _x.groups[color].elements()) {
      auto img = g.image_of_set(trace);
      if (img < best)
        best = std::move(img);
    }
    auto h = mix(hash_points(best), color);
    _cache.emplace(std::move(key), h);
    return h;
  }

private:
  ColoredMultiHypergraph const &_x;
  std::map<std::pair<std::size_t, std::vector<Point>>, std::uint64_t> _cache;
};

std::vector<std::vector<Block>> all_blocks(ColoredMultiHypergraph const &x)
{
  auto const r = x.color_count();
  auto const &edges = x.hyperedges;
  std::vector<std::vector<Block>> levels(r + 1);
  CanonicalTraces canon(x);

  for (std::size_t e = 0; e < edges.size(); ++e) {
    Block b;
    b.level = 0;
    b.begin = e;
    b.end = e + 1;
    auto const low = static_cast<std::uint64_t>(edges[e].multiplicity & BigInt(~0ULL));
    b.fingerprint = mix(0xb10cULL, low);
    levels[0].push_back(std::move(b));
  }
  for (std::size_t level = 1; level <= r; ++level) {
    auto const &below = levels[level - 1];
    std::size_t i = 0;
    while (i < below.size() || (level == r && levels[level].empty())) {
      Block b;
      b.level = level;
      b.begin = i < below.size() ? below[i].begin : 0;
      b.end = b.begin;
      std::vector<std::uint64_t> parts;
      while (i < below.size() &&
             (level == r || agree_from(edges[below[i].begin], edges[b.begin], level))) {
        b.children.push_back(i);
        b.end = below[i].end;
        parts.push_back(mix(below[i].fingerprint, canon(level - 1, edges[below[i].begin].traces[level - 1])));
        ++i;
      }
      std::sort(parts.begin(), parts.end());
      std::uint64_t h = mix(level, parts.size());
      for (auto p : parts)
        h = mix(h, p);
      b.fingerprint = h;
      levels[level].push_back(std::move(b));
    }
  }
  return levels;
}

} // namespace

Permutation product_element(ColoredMultiHypergraph const &x, std::vector<std::size_t> const &indices)
{
  if (indices.size() != x.color_count())
    throw std::invalid_argument("one element index per colour is required");
  std::vector<Point> images(x.vertex_count());
  std::size_t off = 0;
  for (std::size_t c = 0; c < indices.size(); ++c) {
    auto const &g = x.groups[c].element(indices[c]);
    for (Point v = 0; v < x.class_sizes[c]; ++v)
      images[off + v] = Point(off + g(v));
    off += x.class_sizes[c];
  }
  return Permutation(std::move(images));
}

std::size_t ColoredMultiHypergraph::vertex_count() const
{
  return std::accumulate(class_sizes.begin(), class_sizes.end(), std::size_t{0});
}

std::size_t ColoredMultiHypergraph::offset(std::size_t color) const
{
  return std::accumulate(class_sizes.begin(), class_sizes.begin() + static_cast<std::ptrdiff_t>(color),
                         std::size_t{0});
}

void ColoredMultiHypergraph::validate() const
{
  if (class_sizes.empty())
    throw std::invalid_argument("hypergraph needs at least one colour class");
  if (groups.size() != class_sizes.size())
    throw std::invalid_argument("one listed group per colour class is required");
  for (std::size_t c = 0; c < groups.size(); ++c)
    if (groups[c].degree() != class_sizes[c])
      throw std::invalid_argument("listed group degree differs from its colour class size");
  for (auto const &e : hyperedges) {
    if (e.traces.size() != class_sizes.size())
      throw std::invalid_argument("hyperedge needs one trace per colour class");
    if (e.multiplicity < 1)
      throw std::invalid_argument("hyperedge multiplicity must be positive");
    for (std::size_t c = 0; c < e.traces.size(); ++c) {
      auto const &t = e.traces[c];
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] >= class_sizes[c])
          throw std::invalid_argument("hyperedge vertex out of range");
        if (i > 0 && t[i - 1] >= t[i])
          throw std::invalid_argument("hyperedge trace is not a sorted set");
      }
    }
  }
}

void ColoredMultiHypergraph::canonicalize()
{
  for (auto &e : hyperedges)
    for (auto &t : e.traces) {
      std::sort(t.begin(), t.end());
      if (std::adjacent_find(t.begin(), t.end()) != t.end())
        throw std::invalid_argument("hyperedge repeats a vertex");
    }
  std::sort(hyperedges.begin(), hyperedges.end(), edge_order);
  std::vector<Hyperedge> merged;
  for (auto &e : hyperedges) {
    if (!merged.empty() && merged.back().traces == e.traces)
      merged.back().multiplicity += e.multiplicity;
    else
      merged.push_back(std::move(e));
  }
  hyperedges = std::move(merged);
}

std::string ColoredMultiHypergraph::to_json() const
{
  using nlohmann::json;
  auto const n = vertex_count();
  json j;
  j["color_classes"] = json::array();
  j["groups"] = json::array();
  for (std::size_t c = 0; c < color_count(); ++c) {
    auto const off = offset(c);
    std::vector<std::size_t> ids(class_sizes[c]);
    std::iota(ids.begin(), ids.end(), off);
    j["color_classes"].push_back(ids);
    json elems = json::array();
    for (auto const &g : groups[c].elements()) {
      std::vector<Point> images(n);
      std::iota(images.begin(), images.end(), Point{0});
      for (Point v = 0; v < class_sizes[c]; ++v)
        images[off + v] = Point(off + g(v));
      elems.push_back(Permutation(std::move(images)).to_cycle_string());
    }
    j["groups"].push_back(std::move(elems));
  }
  j["hyperedges"] = json::array();
  for (auto const &e : hyperedges) {
    std::vector<std::size_t> vs;
    for (std::size_t c = 0; c < e.traces.size(); ++c)
      for (Point v : e.traces[c])
        vs.push_back(offset(c) + v);
    j["hyperedges"].push_back({{"vertices", vs}, {"multiplicity", e.multiplicity.str()}});
  }
  return j.dump(2);
}

ColoredMultiHypergraph ColoredMultiHypergraph::from_json(std::string const &text)
{
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (json::exception const &e) {
    throw InputError(std::string("hypergraph JSON: ") + e.what());
  }
  try {
    ColoredMultiHypergraph x;
    std::vector<std::pair<std::size_t, Point>> where; // global id -> (colour, local)
    auto const classes = j.at("color_classes").get<std::vector<std::vector<std::size_t>>>();
    std::size_t n = 0;
    for (auto const &cls : classes)
      n += cls.size();
    where.assign(n, {SIZE_MAX, 0});
    for (std::size_t c = 0; c < classes.size(); ++c) {
      x.class_sizes.push_back(classes[c].size());
      for (std::size_t k = 0; k < classes[c].size(); ++k) {
        auto const v = classes[c][k];
        if (v >= n || where[v].first != SIZE_MAX)
          throw InputError("hypergraph JSON: colour classes must partition 0..n-1");
        where[v] = {c, Point(k)};
      }
    }
    auto const &groups = j.at("groups");
    if (groups.size() != classes.size())
      throw InputError("hypergraph JSON: one group per colour class is required");
    for (std::size_t c = 0; c < classes.size(); ++c) {
      std::vector<Permutation> elems;
      for (auto const &s : groups[c]) {
        auto g = Permutation::parse_cycles(s.get<std::string>(), n);
        std::vector<Point> local(classes[c].size());
        for (std::size_t k = 0; k < classes[c].size(); ++k) {
          auto [col, img] = where[g(Point(classes[c][k]))];
          if (col != c)
            throw InputError("hypergraph JSON: group element leaves its colour class");
          local[k] = img;
        }
        elems.emplace_back(std::move(local));
      }
      x.groups.emplace_back(classes[c].size(), std::move(elems));
    }
    for (auto const &e : j.at("hyperedges")) {
      Hyperedge h;
      h.traces.resize(classes.size());
      for (auto v : e.at("vertices").get<std::vector<std::size_t>>()) {
        if (v >= n)
          throw InputError("hypergraph JSON: hyperedge vertex out of range");
        h.traces[where[v].first].push_back(where[v].second);
      }
      if (e.contains("multiplicity"))
        h.multiplicity = BigInt(e.at("multiplicity").get<std::string>());
      x.hyperedges.push_back(std::move(h));
    }
    x.canonicalize();
    x.validate();
    return x;
  } catch (json::exception const &e) {
    throw InputError(std::string("hypergraph JSON: ") + e.what());
  } catch (std::invalid_argument const &e) {
    throw InputError(std::string("hypergraph JSON: ") + e.what());
  }
}

std::vector<Block> build_blocks(ColoredMultiHypergraph const &x, std::size_t level)
{
  if (level > x.color_count())
    throw std::invalid_argument("block level exceeds the number of colours");
  return all_blocks(x)[level];
}

PermCoset stage0(std::vector<Point> const &a, BigInt const &mult_a, std::vector<Point> const &b,
                 BigInt const &mult_b, ListedGroup const &g)
{
  auto const n = g.degree();
  if (mult_a != mult_b || a.size() != b.size())
    return PermCoset::empty(n);
  Permutation const *transporter = nullptr;
  std::vector<Permutation> stabilizer;
  for (auto const &e : g.elements()) {
    if (!transporter && e.image_of_set(a) == b)
      transporter = &e;
    if (e.image_of_set(b) == b)
      stabilizer.push_back(e);
  }
  if (!transporter)
    return PermCoset::empty(n);
  return PermCoset(PermGroup::generate(n, stabilizer), *transporter);
}

std::vector<TauChoice> compute_S_ell(std::vector<std::vector<Point>> const &a,
                                     std::vector<std::vector<Point>> const &b, ListedGroup const &g)
{
  std::vector<TauChoice> out;
  if (a.size() != b.size())
    return out;
  std::map<std::vector<Point>, std::size_t> index;
  for (std::size_t i = 0; i < b.size(); ++i)
    index.emplace(b[i], i);
  for (std::size_t k = 0; k < g.size(); ++k) {
    auto const &tau = g.element(k);
    TauChoice choice{k, {}};
    choice.tau_hat.reserve(a.size());
    bool ok = true;
    for (auto const &ai : a) {
      auto it = index.find(tau.image_of_set(ai));
      if (it == index.end()) {
        ok = false;
        break;
      }
      choice.tau_hat.push_back(it->second);
    }
    if (ok)
      out.push_back(std::move(choice));
  }
  return out;
}

std::size_t HypAutSolver::KeyHash::operator()(Key const &k) const
{
  return mix(mix(k.level, k.a), k.b);
}

HypAutSolver::HypAutSolver(ColoredMultiHypergraph x) : _x(std::move(x))
{
  _x.canonicalize();
  _x.validate();
  _blocks = all_blocks(_x);

  auto const r = _x.color_count();
  _offset.assign(r, 0);
  _size.assign(r, 0);
  _local.resize(r);
  _lookup.resize(r);
  for (std::size_t c = 0; c < r; ++c) {
    auto const &g = _x.groups[c];
    _offset[c] = _degree;
    if (g.size() == 1)
      continue;
    auto const &supp = g.support();
    auto &local = _local[c];
    local.reserve(g.size());
    if (supp.size() <= g.size()) {
      std::vector<Point> slot(g.degree(), 0);
      for (std::size_t k = 0; k < supp.size(); ++k)
        slot[supp[k]] = Point(k);
      for (auto const &e : g.elements()) {
        std::vector<Point> img(supp.size());
        for (std::size_t k = 0; k < supp.size(); ++k)
          img[k] = slot[e(supp[k])];
        local.push_back(std::move(img));
      }
    } else {
      for (auto const &e : g.elements()) {
        std::vector<Point> img(g.size());
        for (std::size_t k = 0; k < g.size(); ++k)
          img[k] = Point(*g.index_of(compose(e, g.element(k))));
        local.push_back(std::move(img));
      }
    }
    _size[c] = local.front().size();
    _degree += _size[c];
    std::vector<Permutation> perms;
    for (std::size_t k = 0; k < local.size(); ++k) {
      _lookup[c].emplace(local[k], k);
      perms.emplace_back(local[k]);
    }
    ColorGroup cg;
    cg.points.resize(_size[c]);
    std::iota(cg.points.begin(), cg.points.end(), Point(_offset[c]));
    cg.group = ListedGroup(_size[c], std::move(perms));
    _colors.push_back(std::move(cg));
  }
  _empty = PermCoset::empty(_degree);
}

Permutation HypAutSolver::embed(std::size_t color, std::size_t element) const
{
  std::vector<Point> images(_degree);
  std::iota(images.begin(), images.end(), Point{0});
  if (_size[color] == 0)
    return Permutation(std::move(images));
  auto const &local = _local[color][element];
  auto const off = static_cast<Point>(_offset[color]);
  for (std::size_t k = 0; k < local.size(); ++k)
    images[off + k] = off + local[k];
  return Permutation(std::move(images));
}

std::vector<std::size_t> HypAutSolver::element_indices(Permutation const &compact) const
{
  if (compact.degree() != _degree)
    throw std::invalid_argument("permutation is not on the compact domain");
  std::vector<std::size_t> out(_x.color_count());
  for (std::size_t c = 0; c < out.size(); ++c) {
    if (_size[c] == 0) {
      out[c] = _x.groups[c].identity_index();
      continue;
    }
    std::vector<Point> local(_size[c]);
    auto const off = static_cast<Point>(_offset[c]);
    for (std::size_t k = 0; k < local.size(); ++k) {
      auto const img = compact(Point(off + k));
      if (img < off || img >= off + _size[c])
        throw std::invalid_argument("permutation mixes colour classes");
      local[k] = img - off;
    }
    auto it = _lookup[c].find(local);
    if (it == _lookup[c].end())
      throw std::invalid_argument("permutation is not in the listed group of a colour");
    out[c] = it->second;
  }
  return out;
}

Permutation HypAutSolver::to_vertex_permutation(Permutation const &compact) const
{
  return product_element(_x, element_indices(compact));
}

PermCoset const &HypAutSolver::iso(std::size_t level, std::size_t a, std::size_t b)
{
  Key key{level, a, b};
  auto it = _table.find(key);
  if (it != _table.end())
    return it->second;
  auto value = compute(level, a, b);
  return _table.emplace(key, std::move(value)).first->second;
}

PermCoset HypAutSolver::single_edge(std::size_t level, std::size_t ea, std::size_t eb)
{
  auto const &x = _x.hyperedges[ea];
  auto const &y = _x.hyperedges[eb];
  if (x.multiplicity != y.multiplicity)
    return _empty;
  std::vector<Permutation> gens;
  std::vector<Point> rep(_degree);
  std::iota(rep.begin(), rep.end(), Point{0});
  for (std::size_t c = 0; c < level; ++c) {
    auto const &a = x.traces[c];
    auto const &b = y.traces[c];
    if (_size[c] == 0) {
      if (a != b)
        return _empty;
      continue;
    }
    auto const &g = _x.groups[c];
    std::size_t transporter = g.size();
    for (std::size_t k = 0; k < g.size() && transporter == g.size(); ++k)
      if (g.element(k).image_of_set(a) == b)
        transporter = k;
    if (transporter == g.size())
      return _empty;
    auto const off = _offset[c];
    auto const &local = _local[c][transporter];
    for (std::size_t k = 0; k < local.size(); ++k)
      rep[off + k] = Point(off + local[k]);

    auto key = std::make_tuple(c, b);
    auto it = _stabilizers.find(key);
    if (it == _stabilizers.end()) {
      std::vector<Permutation> members;
      for (std::size_t k = 0; k < g.size(); ++k)
        if (g.element(k).image_of_set(b) == b)
          members.emplace_back(_local[c][k]);
      auto sub = PermGroup::generate(_size[c], members);
      std::vector<Permutation> embedded;
      for (auto const &s : sub.generators()) {
        std::vector<Point> images(_degree);
        std::iota(images.begin(), images.end(), Point{0});
        for (std::size_t k = 0; k < _size[c]; ++k)
          images[off + k] = Point(off + s(Point(k)));
        embedded.emplace_back(std::move(images));
      }
      it = _stabilizers.emplace(std::move(key), std::move(embedded)).first;
    }
    gens.insert(gens.end(), it->second.begin(), it->second.end());
  }
  return PermCoset(PermGroup::generate(_degree, gens), Permutation(std::move(rep)));
}

PermCoset HypAutSolver::intersect_all(std::vector<PermCoset const *> cosets)
{
  std::sort(cosets.begin(), cosets.end());
  cosets.erase(std::unique(cosets.begin(), cosets.end()), cosets.end());
  for (auto const *c : cosets)
    if (c->is_empty())
      return _empty;
  std::stable_sort(cosets.begin(), cosets.end(), [](PermCoset const *x, PermCoset const *y) {
    return x->group().order() < y->group().order();
  });
  PermCoset acc = *cosets.front();
  for (std::size_t i = 1; i < cosets.size(); ++i) {
    auto const &other = *cosets[i];
    if (!other.contains(acc.representative())) {
      if (acc.group().is_trivial())
        return _empty;
    } else {
      bool const contained = std::all_of(acc.group().generators().begin(), acc.group().generators().end(),
                                         [&](Permutation const &g) { return other.group().contains(g); });
      if (contained)
        continue;
    }
    acc = restricted_coset_intersection(acc, other, _colors);
    if (acc.is_empty())
      return _empty;
  }
  return acc;
}

PermCoset HypAutSolver::compute(std::size_t level, std::size_t a, std::size_t b)
{
  auto const &A = _blocks[level][a];
  auto const &B = _blocks[level][b];
  if (A.fingerprint != B.fingerprint || A.children.size() != B.children.size())
    return _empty;
  if (level == 0) {
    if (_x.hyperedges[A.begin].multiplicity != _x.hyperedges[B.begin].multiplicity)
      return _empty;
    return PermCoset(PermGroup::generate(_degree, {}), Permutation(_degree));
  }
  if (A.end - A.begin == 1 && B.end - B.begin == 1)
    return single_edge(level, A.begin, B.begin);

  auto const c = level - 1;
  auto const &below = _blocks[level - 1];
  std::vector<std::vector<Point>> ta, tb;
  for (auto k : A.children)
    ta.push_back(trace(below[k].begin, c));
  for (auto k : B.children)
    tb.push_back(trace(below[k].begin, c));

  auto const choices = compute_S_ell(ta, tb, _x.groups[c]);

  std::vector<PermCoset> parts;
  for (auto const &ch : choices) {
    bool viable = true;
    for (std::size_t j = 0; j < A.children.size() && viable; ++j)
      viable = below[A.children[j]].fingerprint == below[B.children[ch.tau_hat[j]]].fingerprint;
    if (!viable)
      continue;
    std::vector<PermCoset const *> sub;
    for (std::size_t j = 0; j < A.children.size() && viable; ++j) {
      auto const &entry = iso(level - 1, A.children[j], B.children[ch.tau_hat[j]]);
      viable = !entry.is_empty();
      sub.push_back(&entry);
    }
    if (!viable)
      continue;
    auto meet = sub.empty() ? PermCoset(PermGroup::generate(_degree, {}), Permutation(_degree))
                            : intersect_all(std::move(sub));
    if (meet.is_empty())
      continue;
    if (_size[c] != 0)
      meet = PermCoset(meet.group(), compose(meet.representative(), embed(c, ch.element)));
    parts.push_back(std::move(meet));
  }
  if (parts.empty())
    return _empty;
  return coset_union(parts);
}

HypAutResult HypAutSolver::solve()
{
  HypAutResult out;
  auto const r = _x.color_count();
  if (_x.hyperedges.empty()) {
    std::vector<Permutation> gens;
    for (std::size_t c = 0; c < r; ++c)
      for (auto const &g : _x.groups[c].generators()) {
        auto k = *_x.groups[c].index_of(g);
        gens.push_back(embed(c, k));
      }
    auto whole = PermGroup::generate(_degree, gens);
    for (auto const &g : whole.generators())
      out.generators.push_back(element_indices(g));
    out.order = whole.order();
    return out;
  }
  auto const &top = iso(r, 0, 0);
  if (top.is_empty() || !top.contains(Permutation(_degree)))
    throw InternalError("hypergraph automorphism table lost the identity");
  for (auto const &g : top.group().generators())
    out.generators.push_back(element_indices(g));
  out.order = top.group().order();
  return out;
}

HypAutResult hyp_aut(ColoredMultiHypergraph const &x)
{
  return HypAutSolver(x).solve();
}

PermGroup hyp_aut_group(ColoredMultiHypergraph const &x)
{
  HypAutSolver solver(x);
  auto const result = solver.solve();
  auto const &inst = solver.instance();
  std::vector<Permutation> gens;
  for (auto const &idx : result.generators)
    gens.push_back(product_element(inst, idx));
  return PermGroup::generate(inst.vertex_count(), gens);
}

} // namespace evgi
