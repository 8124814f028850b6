#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace pierce {

// One inequality a . x <= b.
struct LinConstraint {
  std::vector<double> a;
  double b = 0;
};

// Maximizes objective . x subject to the constraints and the box |x_i| <= bound,
// using Seidel's randomized incremental method; meant for a handful of
// variables. Returns nullopt when infeasible. Deterministic for a fixed seed.
std::optional<std::vector<double>> seidel_maximize(const std::vector<double>& objective,
                                                   const std::vector<LinConstraint>& constraints,
                                                   double bound, std::uint64_t seed = 0);

}  // namespace pierce
