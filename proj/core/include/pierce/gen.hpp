#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "pierce/body.hpp"
#include "pierce/point.hpp"

namespace pierce {

struct TruthClusterable {
  std::vector<Point> centers;
};

struct TruthFar {
  double epsilon = 0;
  long long spike_count = 0;
};

struct TruthOutliers {
  std::vector<Point> centers;
  std::vector<long long> outlier_indices;  // ascending positions in points
};

using Truth = std::variant<TruthClusterable, TruthFar, TruthOutliers>;

// Point set plus the certificate its generator established by construction.
struct Instance {
  PointSet points;
  std::optional<Truth> truth;
};

// n points uniform over the union of k well-separated random translates of
// the body; always k-clusterable, centers recorded.
Instance gen_clusterable(const ConvexBody& body, int k, long long n, int d, std::uint64_t seed);

// k equal-size dense groups plus ceil(epsilon*n) isolated spike points, every
// pair of groups/spikes separated by more than twice the body diameter, so
// the distance from k-clusterability is exactly the spike count.
Instance gen_far(const ConvexBody& body, int k, long long n, int d, double epsilon,
                 std::uint64_t seed);

// k planted clusters plus floor(epsilon*n) outliers at distance >= spread
// from every cluster center; epsilon = 0 reproduces gen_clusterable exactly.
Instance gen_outliers(const ConvexBody& body, int k, long long n, int d, double epsilon,
                      double spread, std::uint64_t seed);

}  // namespace pierce
