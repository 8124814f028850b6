#pragma once

#include <vector>

#include "pierce/body.hpp"
#include "pierce/point.hpp"

namespace pierce {

struct CoverageResult {
  long long count = 0;
  Point center;
  bool exact = true;
  double grid_resolution = 0;  // 0 for exact paths
};

// Maximum number of points one translate can contain, with an achieving
// center. Exact paths: any body in d=1 (interval sweep), AxisBox in any d
// (canonical left-touching centers, axis by axis), Ball/Ellipsoid in d=2
// (candidate centers from points and circle-pair intersections); caps at
// n <= 200. Remaining families use a grid sweep at 1/50 of the inradius,
// flagged approximate, n <= 60.
CoverageResult max_coverage_1(const ConvexBody& body, const PointSet& points);

struct FarnessResult {
  long long removals = 0;
  std::vector<Point> best_centers;
  bool exact = true;
};

// Minimum number of deletions after which k translates cover the rest, with
// certificate centers. k=1 inherits max_coverage_1 caps; k >= 2 runs an
// exhaustive assign-or-drop search, n <= 24.
FarnessResult farness(const ConvexBody& body, const PointSet& points, int k);

// Whether k translates cover everything (n <= 24).
bool is_k_clusterable(const ConvexBody& body, const PointSet& points, int k);

// Boxes only: checks every h-subset for m-clusterability, h the finite
// piercing number of (d, m); equivalent to whole-set m-clusterability.
// Unbounded (d, m) pairs and n < h are rejected.
bool box_helly_check(const ConvexBody& body, const PointSet& points, int m);

struct SubsetWitnessCount {
  long long witnesses = 0;
  long long total = 0;
};

// Exhaustive count of distinct-index subsets of the given size that no single
// translate contains.
SubsetWitnessCount count_unfittable_subsets(const ConvexBody& body, const PointSet& points,
                                            int subset_size);

struct BallCover {
  double max_radius = 0;
  std::vector<Point> centers;
  std::vector<double> radii;
};

// Exact minimum of the largest radius over covers of all but at most `misses`
// points by k balls. d=2 only; k=1 (n <= 200) or k=2 (n <= 64). Searches the
// candidate radii from point pairs and triples with candidate centers from
// points and equal-radius circle intersections.
BallCover min_ball_cover_2d(const std::vector<Point>& points, int k, long long misses);

}  // namespace pierce
