#pragma once

#include <span>
#include <vector>

#include "evgi/perm_group.hpp"

namespace evgi
{

/// A colour class V_i together with its explicitly listed group G_i.
/// `group` acts on local indices: local k stands for points[k].
struct ColorGroup
{
  std::vector<Point> points;
  ListedGroup group;
};

/**
 * Computes H*pi ∩ H2*pi2 inside the product of explicitly listed colour
 * groups.
 *
 * The pair group H x H2 acts component-wise on two copies of the domain
 * and on the orbit of each diagonal {(a, a) : a in V_i} under G_i x G_i.
 * The subcoset of (H x H2)(pi, pi2) that fixes every diagonal is found by
 * point-stabilising in that action; its elements are pairs (h, h) whose
 * common value is the intersection.
 *
 * Throws std::invalid_argument when a generator or representative moves a
 * point outside the colour classes or restricts to something not in the
 * listed G_i.
 */
PermCoset restricted_coset_intersection(PermGroup const &h, Permutation const &pi,
                                        PermGroup const &h2, Permutation const &pi2,
                                        std::span<ColorGroup const> colors);

/// Coset form of the above; empty inputs yield the empty coset.
PermCoset restricted_coset_intersection(PermCoset const &a, PermCoset const &b,
                                        std::span<ColorGroup const> colors);

} // namespace evgi
