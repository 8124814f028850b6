#include "pierce/outliers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

#include "pierce/common.hpp"
#include "pierce/helly.hpp"
#include "pierce/meb.hpp"
#include "pierce/oracle.hpp"
#include "pierce/rng.hpp"

namespace pierce {

namespace {

void check_params(const TesterParams& params) {
  if (!(params.epsilon > 0 && params.epsilon <= 1))
    throw std::invalid_argument("epsilon must be in (0, 1]");
  if (!(params.delta > 0 && params.delta < 1))
    throw std::invalid_argument("delta must be in (0, 1)");
}

std::vector<Point> draw_sample(const SampleSource& src, long long m, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) pts.push_back(src.get(rng.index(src.size())));
  return pts;
}

// Distinct points in first-occurrence order plus an original->distinct map.
std::pair<std::vector<Point>, std::vector<std::size_t>> dedupe(const std::vector<Point>& pts) {
  std::map<std::vector<double>, std::size_t> seen;
  std::vector<Point> distinct;
  std::vector<std::size_t> rep(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto [it, fresh] = seen.try_emplace(pts[i].coords, distinct.size());
    if (fresh) distinct.push_back(pts[i]);
    rep[i] = it->second;
  }
  return {std::move(distinct), std::move(rep)};
}

// Fraction of the input inside some reported ball: a full scan when the input
// is small, otherwise a fixed-size uniform resample on a derived stream.
double covered_fraction(const SampleSource& src, const std::vector<Point>& centers,
                        const std::vector<double>& radii, std::uint64_t seed) {
  const std::size_t n = src.size();
  auto covered = [&](const Point& p) {
    for (std::size_t g = 0; g < centers.size(); ++g)
      if (dist(p, centers[g]) <= radii[g] + kGeomTol) return true;
    return false;
  };
  long long hit = 0;
  if (n <= 2048) {
    for (std::size_t i = 0; i < n; ++i) hit += covered(src.get(i)) ? 1 : 0;
    return static_cast<double>(hit) / static_cast<double>(n);
  }
  Rng rng(derive_seed(seed, 1));
  const long long draws = 2048;
  for (long long i = 0; i < draws; ++i) hit += covered(src.get(rng.index(n))) ? 1 : 0;
  return static_cast<double>(hit) / static_cast<double>(draws);
}

// Depth-first search over canonical assignments of the distinct points:
// a point may open group g only when groups 0..g-1 are already non-empty, so
// assignment vectors are visited in lexicographic order and the first strict
// improvement is the lexicographically smallest optimum.
struct AssignSearch {
  const std::vector<Point>& pts;
  int k;
  double best;
  std::vector<int> cur, best_assign;
  std::vector<std::vector<Point>> groups;
  std::vector<double> radius;
  long long nodes = 0;

  AssignSearch(const std::vector<Point>& p, int kk, double upper)
      : pts(p), k(kk), best(upper), cur(p.size(), -1), groups(kk), radius(kk, 0.0) {}

  void run(std::size_t i, int opened, double cmax) {
    if (++nodes > 5'000'000) throw CapExceeded("k_center_exact node budget exceeded");
    if (cmax >= best - 1e-12) return;
    if (i == pts.size()) {
      best = cmax;
      best_assign = cur;
      return;
    }
    const int lim = std::min(opened + 1, k);
    for (int g = 0; g < lim; ++g) {
      groups[g].push_back(pts[i]);
      const double old = radius[g];
      const double r = groups[g].size() == 1 ? 0.0 : min_enclosing_ball(groups[g]).radius;
      radius[g] = r;
      cur[i] = g;
      run(i + 1, std::max(opened, g + 1), std::max(cmax, r));
      radius[g] = old;
      groups[g].pop_back();
    }
    cur[i] = -1;
  }
};

}  // namespace

long long outlier_sample_count_1(int d, double epsilon, double delta) {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  if (!(epsilon > 0 && epsilon <= 1)) throw std::invalid_argument("epsilon must be in (0, 1]");
  if (!(delta > 0 && delta < 1)) throw std::invalid_argument("delta must be in (0, 1)");
  return guarded_count((d + 1) / std::pow(epsilon, d + 1) * std::log(1.0 / delta));
}

long long outlier_sample_count_k(int k, int d, long long t, double delta) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  if (!(delta > 0 && delta < 1)) throw std::invalid_argument("delta must be in (0, 1)");
  return guarded_count(static_cast<double>(k) * (d + 1) / witness_density(k, t) *
                       std::log(1.0 / delta));
}

ClusterReport cluster_1_outliers(const SampleSource& src, const TesterParams& params,
                                 const SampleSizeFn& sample_size) {
  check_params(params);
  if (src.size() == 0) throw std::invalid_argument("empty sample source");
  ClusterReport report;
  report.custom_sample_size = static_cast<bool>(sample_size);
  const long long m = report.custom_sample_size
                          ? sample_size(params.epsilon, 1, src.dim(), params.delta)
                          : outlier_sample_count_1(src.dim(), params.epsilon, params.delta);
  if (m < 1) throw std::invalid_argument("sample size below 1");
  const std::vector<Point> sample = draw_sample(src, m, params.seed);
  const MinBall ball = min_enclosing_ball(sample);

  report.centers = {ball.center};
  report.radii = {ball.radius};
  report.sample_size = m;
  report.exact = true;
  report.covered_fraction_estimate =
      covered_fraction(src, report.centers, report.radii, params.seed);
  return report;
}

ClusterReport cluster_k_outliers(const SampleSource& src, int k, const TesterParams& params,
                                 long long t, const SampleSizeFn& sample_size,
                                 std::size_t exact_cap) {
  check_params(params);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (src.size() == 0) throw std::invalid_argument("empty sample source");
  const int d = src.dim();

  ClusterReport report;
  report.custom_sample_size = static_cast<bool>(sample_size);
  const long long m = report.custom_sample_size
                          ? sample_size(params.epsilon, k, d, params.delta)
                          : outlier_sample_count_k(k, d, t, params.delta);
  if (m < k) throw std::invalid_argument("sample size below k");
  const std::vector<Point> sample = draw_sample(src, m, params.seed);
  auto [distinct, rep] = dedupe(sample);
  (void)rep;

  if (distinct.size() <= exact_cap) {
    KCenterResult res = k_center_exact(distinct, k, exact_cap);
    report.centers = std::move(res.centers);
    report.radii = std::move(res.radii);
    report.exact = true;
  } else if (d == 2 && k <= 2 && distinct.size() <= 64) {
    BallCover cover = min_ball_cover_2d(distinct, k, 0);
    report.centers = std::move(cover.centers);
    report.radii = std::move(cover.radii);
    report.exact = true;
  } else {
    KCenterResult res = k_center_gonzalez(distinct, k);
    report.centers = std::move(res.centers);
    report.radii = std::move(res.radii);
    report.exact = false;
  }
  report.sample_size = m;
  report.covered_fraction_estimate =
      covered_fraction(src, report.centers, report.radii, params.seed);
  return report;
}

KCenterResult k_center_exact(const std::vector<Point>& points, int k, std::size_t exact_cap) {
  if (points.empty()) throw std::invalid_argument("k_center_exact needs points");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const int d = points.front().dim();
  for (const auto& p : points) require_dim(p, d);
  auto [distinct, rep] = dedupe(points);
  const std::size_t dn = distinct.size();

  KCenterResult out;
  if (dn <= static_cast<std::size_t>(k)) {
    out.centers = distinct;
    out.radii.assign(dn, 0.0);
    while (out.centers.size() < static_cast<std::size_t>(k)) {
      out.centers.push_back(distinct.front());
      out.radii.push_back(0.0);
    }
    out.assignment.resize(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
      out.assignment[i] = static_cast<int>(rep[i]);
    return out;
  }
  if (dn > exact_cap) throw CapExceeded("k_center_exact distinct-point cap exceeded");

  const KCenterResult greedy = k_center_gonzalez(distinct, k);
  const double upper = *std::max_element(greedy.radii.begin(), greedy.radii.end()) + 1e-9;
  AssignSearch search(distinct, k, upper);
  search.run(0, 0, 0.0);
  if (search.best_assign.empty()) throw std::logic_error("assignment search found no cover");

  std::vector<std::vector<Point>> groups(k);
  for (std::size_t i = 0; i < dn; ++i)
    groups[static_cast<std::size_t>(search.best_assign[i])].push_back(distinct[i]);
  for (int g = 0; g < k; ++g) {
    if (groups[g].empty()) {
      out.centers.push_back(distinct.front());
      out.radii.push_back(0.0);
      continue;
    }
    const MinBall mb = min_enclosing_ball(groups[g]);
    out.centers.push_back(mb.center);
    out.radii.push_back(mb.radius);
  }
  out.assignment.resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    out.assignment[i] = search.best_assign[rep[i]];
  return out;
}

KCenterResult k_center_gonzalez(const std::vector<Point>& points, int k) {
  if (points.empty()) throw std::invalid_argument("k_center_gonzalez needs points");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const int d = points.front().dim();
  for (const auto& p : points) require_dim(p, d);
  const std::size_t n = points.size();
  const std::size_t seeds_wanted = std::min<std::size_t>(static_cast<std::size_t>(k), n);

  std::vector<std::size_t> seeds{0};
  std::vector<double> mind(n);
  for (std::size_t i = 0; i < n; ++i) mind[i] = dist2(points[i], points[0]);
  while (seeds.size() < seeds_wanted) {
    std::size_t far = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (mind[i] > mind[far]) far = i;
    seeds.push_back(far);
    for (std::size_t i = 0; i < n; ++i)
      mind[i] = std::min(mind[i], dist2(points[i], points[far]));
  }

  std::vector<Point> centers;
  centers.reserve(seeds.size());
  for (std::size_t s : seeds) centers.push_back(points[s]);
  std::vector<double> radii(centers.size(), 0.0);

  auto assign_nearest = [&]() {
    std::vector<int> a(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      double bd = dist2(points[i], centers[0]);
      for (std::size_t g = 1; g < centers.size(); ++g) {
        const double dd = dist2(points[i], centers[g]);
        if (dd < bd) {
          bd = dd;
          a[i] = static_cast<int>(g);
        }
      }
    }
    return a;
  };
  auto rebuild = [&](const std::vector<int>& a) {
    for (std::size_t g = 0; g < centers.size(); ++g) {
      std::vector<Point> grp;
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] == static_cast<int>(g)) grp.push_back(points[i]);
      if (grp.empty()) {
        radii[g] = 0.0;
        continue;
      }
      const MinBall mb = min_enclosing_ball(grp);
      centers[g] = mb.center;
      radii[g] = mb.radius;
    }
  };

  std::vector<int> a = assign_nearest();
  rebuild(a);
  a = assign_nearest();
  rebuild(a);

  while (centers.size() < static_cast<std::size_t>(k)) {
    centers.push_back(centers.front());
    radii.push_back(0.0);
  }
  KCenterResult out;
  out.centers = std::move(centers);
  out.radii = std::move(radii);
  out.assignment = std::move(a);
  return out;
}

}  // namespace pierce
