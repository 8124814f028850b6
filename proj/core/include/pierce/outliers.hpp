#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "pierce/point.hpp"
#include "pierce/sampling.hpp"
#include "pierce/tester.hpp"

namespace pierce {

struct ClusterReport {
  std::vector<Point> centers;  // exactly k entries
  std::vector<double> radii;   // exactly k entries; every sampled point is in some ball
  long long sample_size = 0;
  double covered_fraction_estimate = 0;
  bool exact = true;                // sample cover came from an exact search
  bool custom_sample_size = false;  // m came from the caller-provided hook
};

// Caller hook for the sample size m (the conjecture-dependent form is never
// pinned down, so it stays injectable).
using SampleSizeFn = std::function<long long(double epsilon, int k, int d, double delta)>;

// ceil(((d+1)/epsilon^{d+1}) * ln(1/delta)).
long long outlier_sample_count_1(int d, double epsilon, double delta);
// Unconditional default for k clusters: ceil((k(d+1)/witness_density(k,t)) * ln(1/delta)).
long long outlier_sample_count_k(int k, int d, long long t, double delta);

// Draws m uniform points (sample_size hook, else the formula above) and
// reports their minimum enclosing ball. With probability >= 1-delta the ball
// misses at most epsilon*n points and its radius lies between the best radius
// ignoring epsilon*n outliers and the full-data optimum.
ClusterReport cluster_1_outliers(const SampleSource& src, const TesterParams& params,
                                 const SampleSizeFn& sample_size = {});

// k-ball analogue: draws m points (sample_size hook, else the unconditional
// default using t) and covers the sample with k balls minimizing the largest
// radius. Exact paths: distinct sample points <= exact_cap (branch and bound),
// or d=2 with k<=2 (candidate-center search); otherwise farthest-point
// seeding, flagged approximate.
ClusterReport cluster_k_outliers(const SampleSource& src, int k, const TesterParams& params,
                                 long long t, const SampleSizeFn& sample_size = {},
                                 std::size_t exact_cap = 16);

struct KCenterResult {
  std::vector<Point> centers;   // exactly k entries
  std::vector<double> radii;    // exactly k entries
  std::vector<int> assignment;  // group index per input point
};

// Globally minimal max-radius k-ball cover by branch and bound over
// assignments of the distinct points (cap applies to the distinct count);
// among optima returns the lexicographically smallest canonical assignment.
KCenterResult k_center_exact(const std::vector<Point>& points, int k,
                             std::size_t exact_cap = 16);

// Farthest-point seeding, nearest-center assignment, per-group enclosing
// balls, then one reassignment sweep.
KCenterResult k_center_gonzalez(const std::vector<Point>& points, int k);

}  // namespace pierce
