#include "evgi/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace evgi
{

Permutation::Permutation(std::size_t degree) : _images(degree)
{
  std::iota(_images.begin(), _images.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : _images(std::move(images))
{
  std::vector<bool> seen(_images.size(), false);
  for (Point x : _images) {
    if (x >= _images.size() || seen[x])
      throw std::invalid_argument("permutation image is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::vector<std::vector<Point>> const &cycles)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (auto const &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x >= degree)
        throw std::invalid_argument("cycle point out of range");
      if (used[x])
        throw std::invalid_argument("cycles are not disjoint");
      used[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t degree,
                                      bool one_based)
{
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("expected '(' in cycle notation");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (i >= text.size())
        throw std::invalid_argument("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("unexpected character in cycle notation");
      unsigned long long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        value = value * 10 + static_cast<unsigned>(text[i++] - '0');
      if (one_based) {
        if (value == 0)
          throw std::invalid_argument("point 0 in 1-based cycle notation");
        --value;
      }
      cycle.push_back(static_cast<Point>(value));
    }
    if (cycle.size() > 1)
      cycles.push_back(std::move(cycle));
    skip_space();
  }
  return from_cycles(degree, cycles);
}

bool Permutation::is_identity() const
{
  for (std::size_t x = 0; x < _images.size(); ++x)
    if (_images[x] != x)
      return false;
  return true;
}

Permutation Permutation::inverse() const
{
  std::vector<Point> inv(_images.size());
  for (std::size_t x = 0; x < _images.size(); ++x)
    inv[_images[x]] = static_cast<Point>(x);
  Permutation result;
  result._images = std::move(inv);
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const
{
  std::vector<std::vector<Point>> result;
  std::vector<bool> done(_images.size(), false);
  for (Point start = 0; start < _images.size(); ++start) {
    if (done[start] || _images[start] == start)
      continue;
    std::vector<Point> cycle;
    for (Point x = start; !done[x]; x = _images[x]) {
      done[x] = true;
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::to_cycle_string(bool one_based) const
{
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::ostringstream out;
  for (auto const &cycle : cs) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i)
      out << (i ? " " : "") << cycle[i] + (one_based ? 1 : 0);
    out << ')';
  }
  return out.str();
}

std::string Permutation::to_image_string(bool one_based) const
{
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < _images.size(); ++i)
    out << (i ? " " : "") << _images[i] + (one_based ? 1 : 0);
  out << ']';
  return out.str();
}

std::vector<Point> Permutation::image_of_set(std::span<Point const> set) const
{
  auto image = image_of_tuple(set);
  std::sort(image.begin(), image.end());
  return image;
}

std::vector<Point> Permutation::image_of_tuple(std::span<Point const> tuple) const
{
  std::vector<Point> image;
  image.reserve(tuple.size());
  for (Point x : tuple)
    image.push_back(_images.at(x));
  return image;
}

Point Permutation::first_moved_point() const
{
  for (std::size_t x = 0; x < _images.size(); ++x)
    if (_images[x] != x)
      return static_cast<Point>(x);
  return static_cast<Point>(_images.size());
}

Permutation compose(Permutation const &p, Permutation const &q)
{
  if (p.degree() != q.degree())
    throw std::invalid_argument("permutation degree mismatch");
  Permutation result;
  result._images.resize(q.degree());
  for (std::size_t x = 0; x < q.degree(); ++x)
    result._images[x] = p._images[q._images[x]];
  return result;
}

std::size_t PermutationHash::operator()(Permutation const &p) const noexcept
{
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Point x : p.images())
    h = (h ^ x) * 0x100000001b3ULL;
  return h;
}

std::size_t PointVectorHash::operator()(std::vector<Point> const &v) const noexcept
{
  std::size_t h = 0xcbf29ce484222325ULL ^ v.size();
  for (Point x : v)
    h = (h ^ x) * 0x100000001b3ULL;
  return h;
}

} // namespace evgi
