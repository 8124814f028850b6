#pragma once

#include <cstdint>
#include <vector>

#include "pierce/body.hpp"
#include "pierce/sampling.hpp"

namespace pierce {

struct TesterParams {
  double epsilon = 0.1;
  double delta = 1.0 / 3;
  std::uint64_t seed = 0;
};

struct Verdict {
  bool accept = true;
  std::vector<Point> witness;       // nonempty exactly on reject; re-verifiable
  long long iterations_used = 0;
  bool guarantee_void = false;      // k-tester ran below its proven threshold
};

// One-sided 1-cluster tester: draws budget_1(d, eps, delta).iterations subsets
// of d+1 uniform indices (with replacement) and rejects on the first subset no
// translate of body contains. Clusterable inputs are always accepted; eps-far
// inputs are rejected with probability >= 1 - delta.
Verdict test_1_cluster(const SampleSource& src, const ConvexBody& body,
                       const TesterParams& params);

// One-sided k-cluster tester: draws budget_k(k, t, delta).iterations subsets
// of k+1 points, checked by the pair rule. The soundness guarantee applies
// only for eps > epsilon_threshold(k, t); below that the run proceeds but the
// verdict carries guarantee_void. t comes from the caller (e.g. covering_t).
Verdict test_k_cluster(const SampleSource& src, const ConvexBody& body, int k,
                       const TesterParams& params, long long t);

}  // namespace pierce
