#include "pierce/tester.hpp"

#include <stdexcept>

#include "pierce/fit.hpp"
#include "pierce/helly.hpp"
#include "pierce/rng.hpp"

namespace pierce {
namespace {

void validate(const SampleSource& src, const ConvexBody& body, const TesterParams& params,
              std::size_t min_size) {
  if (src.size() < min_size)
    throw std::invalid_argument("sample source smaller than one subset");
  if (src.dim() != body.dim())
    throw std::invalid_argument("sample source and body dimension mismatch");
  if (!(params.epsilon > 0) || !(params.epsilon <= 1))
    throw std::invalid_argument("epsilon must be in (0,1]");
  if (!(params.delta > 0) || !(params.delta < 1))
    throw std::invalid_argument("delta must be in (0,1)");
}

Verdict run_loop(const SampleSource& src, const TesterParams& params, long long iterations,
                 int subset_size, auto&& subset_fits) {
  Rng rng(params.seed);
  const std::size_t n = src.size();
  std::vector<Point> subset(subset_size);
  Verdict v;
  for (long long it = 0; it < iterations; ++it) {
    for (int j = 0; j < subset_size; ++j) subset[j] = src.get(rng.index(n));
    ++v.iterations_used;
    if (!subset_fits(subset)) {
      v.accept = false;
      v.witness = subset;
      return v;
    }
  }
  return v;
}

}  // namespace

Verdict test_1_cluster(const SampleSource& src, const ConvexBody& body,
                       const TesterParams& params) {
  const int d = body.dim();
  validate(src, body, params, static_cast<std::size_t>(d) + 1);
  TesterBudget budget = budget_1(d, params.epsilon, params.delta);
  return run_loop(src, params, budget.iterations, budget.subset_size,
                  [&](const std::vector<Point>& s) { return fits_in_translate(body, s).has_value(); });
}

Verdict test_k_cluster(const SampleSource& src, const ConvexBody& body, int k,
                       const TesterParams& params, long long t) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  validate(src, body, params, static_cast<std::size_t>(k) + 1);
  TesterBudget budget = budget_k(k, t, params.delta);
  Verdict v = run_loop(src, params, budget.iterations, budget.subset_size,
                       [&](const std::vector<Point>& s) {
                         return fits_in_k_translates(body, s, k).has_value();
                       });
  v.guarantee_void = params.epsilon <= epsilon_threshold(k, t);
  return v;
}

}  // namespace pierce
