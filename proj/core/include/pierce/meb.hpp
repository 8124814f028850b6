#pragma once

#include <cstdint>
#include <vector>

#include "pierce/point.hpp"

namespace pierce {

struct MinBall {
  Point center;
  double radius = 0;
  // Input indices of the support points determining the ball (at most d + 1).
  std::vector<std::size_t> support;
};

// Exact minimum enclosing ball by Welzl's move-to-front algorithm. Works in
// any dimension; the support set has at most d + 1 points. Deterministic for
// a fixed seed. Throws std::invalid_argument on an empty or mixed-dimension
// input.
MinBall min_enclosing_ball(const std::vector<Point>& points, std::uint64_t seed = 0x3b);

}  // namespace pierce
