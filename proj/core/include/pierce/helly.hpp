#pragma once

#include <cstdint>

namespace pierce {

// Danzer piercing Helly number: finite exactly for m = 1, d = 1, m = 2, and
// (d, m) = (2, 3).
struct PiercingNumber {
  bool finite = false;
  long long value = 0;  // meaningful only when finite
};

// Iteration budget for one tester run.
struct TesterBudget {
  long long iterations = 0;
  int subset_size = 0;
  double witness_density = 0;
};

// 1 - (1-alpha)^{1/(d+1)}: fraction of sets pierced by one point when an
// alpha-fraction of (d+1)-subfamilies intersect.
double fractional_helly_beta(int d, double alpha);

// epsilon^{d+1}: lower bound on the fraction of (d+1)-subsets with no common
// translate when the set is epsilon-far from 1-clusterability.
double farness_subset_fraction(int d, double epsilon);

// ceil((1/epsilon^{d+1}) * ln(1/delta)), at least 1.
long long sample_count_1(int d, double epsilon, double delta);

// 1 - 1/(2(t+1)(k+1)): the k-tester guarantee applies only above this.
double epsilon_threshold(int k, long long t);

// c = (1/(2(t+1)(k+1)))^{k+1}: density of (k+1)-point witnesses.
double witness_density(int k, long long t);

// ceil((1/c) * ln(1/delta)), at least 1; overflow guarded.
long long sample_count_k(int k, long long t, double delta);

// Exact case table: h(d,1)=2; h(1,m)=m+1; h(d,2)=3d odd d, 3d-1 even d;
// h(2,3)=16; unbounded otherwise.
PiercingNumber piercing_helly_number(int d, int m);

TesterBudget budget_1(int d, double epsilon, double delta);
TesterBudget budget_k(int k, long long t, double delta);

// Ceiling with a 1e-9 guard against float noise at integer boundaries,
// clamped to >= 1; throws std::overflow_error past the long long range.
long long guarded_count(double x);

}  // namespace pierce
