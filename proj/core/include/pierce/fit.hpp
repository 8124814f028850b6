#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pierce/body.hpp"
#include "pierce/point.hpp"

namespace pierce {

// Center of a single translate of body containing all points, or nullopt.
// Exact per family: balls and ellipsoids reduce to a minimum enclosing ball,
// boxes to per-axis extents, polytopes to a low-dimension feasibility LP.
std::optional<Point> fits_in_translate(const ConvexBody& body, const std::vector<Point>& points);

// Centers of k translates jointly containing all points (exactly k entries,
// padded with repeats when fewer are needed), or nullopt. |points| = k+1 uses
// the pair rule: such a set fits iff some pair shares one translate. Larger
// inputs run an exhaustive partition search over a farthest-first point order,
// capped at exact_cap points and a fixed node budget (CapExceeded beyond).
std::optional<std::vector<Point>> fits_in_k_translates(const ConvexBody& body,
                                                       const std::vector<Point>& points, int k,
                                                       std::size_t exact_cap = 20);

}  // namespace pierce
