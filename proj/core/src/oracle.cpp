#include "pierce/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "pierce/common.hpp"
#include "pierce/fit.hpp"
#include "pierce/helly.hpp"
#include "pierce/meb.hpp"

namespace pierce {
namespace {

void validate_input(const ConvexBody& body, const PointSet& points) {
  points.validate();
  if (points.size() == 0) throw std::invalid_argument("oracle needs at least one point");
  if (points.dim != body.dim()) throw std::invalid_argument("body and points dimension mismatch");
}

// Visits all size-r index combinations of {0..n-1}; fn returning false stops.
template <class Fn>
void for_each_combination(std::size_t n, int r, Fn&& fn) {
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (static_cast<std::size_t>(r) > n) return;
  while (true) {
    if (!fn(idx)) return;
    int pos = r - 1;
    while (pos >= 0 && idx[pos] == n - r + pos) --pos;
    if (pos < 0) return;
    ++idx[pos];
    for (int c = pos + 1; c < r; ++c) idx[c] = idx[c - 1] + 1;
  }
}

double binomial_work(std::size_t n, int r) {
  double c = 1;
  for (int i = 0; i < r; ++i) c *= static_cast<double>(n - i) / (i + 1);
  return c;
}

// d=1: max points in a window of width 2w (plus tolerance), sliding sweep.
CoverageResult interval_sweep(const std::vector<Point>& pts, double w) {
  std::vector<double> xs(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) xs[i] = pts[i][0];
  std::sort(xs.begin(), xs.end());
  const double span = 2 * w + 2 * kGeomTol;
  std::size_t best = 0, lo = 0;
  double best_center = xs[0];
  for (std::size_t hi = 0; hi < xs.size(); ++hi) {
    while (xs[hi] - xs[lo] > span) ++lo;
    if (hi - lo + 1 > best) {
      best = hi - lo + 1;
      best_center = xs[lo] + w + kGeomTol;
    }
  }
  return {static_cast<long long>(best), Point{best_center}, true, 0};
}

// AxisBox: axis-by-axis enumeration of canonical left-touching centers
// c_j = x_j + w_j + tol; prunes when the live subset can't beat the best.
struct BoxSweep {
  const std::vector<double>& w;
  long long budget = 200'000'000;
  long long best = 0;
  Point best_center;
  Point cur;

  explicit BoxSweep(const std::vector<double>& hw) : w(hw), best_center(static_cast<int>(hw.size())), cur(static_cast<int>(hw.size())) {}

  void sweep(std::vector<const Point*>& active, int axis) {
    const int d = static_cast<int>(w.size());
    if (static_cast<long long>(active.size()) <= best) return;
    if (axis == d) {
      best = static_cast<long long>(active.size());
      best_center = cur;
      return;
    }
    budget -= static_cast<long long>(active.size());
    if (budget < 0) throw CapExceeded("box coverage sweep over work budget");
    std::sort(active.begin(), active.end(),
              [axis](const Point* a, const Point* b) { return (*a)[axis] < (*b)[axis]; });
    const double span = 2 * w[axis] + 2 * kGeomTol;
    std::vector<const Point*> next;
    for (std::size_t s = 0; s < active.size(); ++s) {
      if (s > 0 && (*active[s])[axis] == (*active[s - 1])[axis]) continue;
      next.clear();
      for (std::size_t i = s; i < active.size() && (*active[i])[axis] - (*active[s])[axis] <= span; ++i)
        next.push_back(active[i]);
      cur[axis] = (*active[s])[axis] + w[axis] + kGeomTol;
      sweep(next, axis + 1);
    }
  }
};

std::vector<Point> disk_candidates(const std::vector<Point>& pts, double r) {
  std::vector<Point> cand = pts;
  // Half the membership tolerance: the two points defining each candidate
  // then sit strictly inside the full-tolerance counting circle.
  const double reff = r + kGeomTol / 2;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      double dd = dist(pts[i], pts[j]);
      if (dd > 2 * reff || dd < 1e-12) continue;
      double h = std::sqrt(std::max(0.0, reff * reff - dd * dd / 4));
      double mx = (pts[i][0] + pts[j][0]) / 2, my = (pts[i][1] + pts[j][1]) / 2;
      double ux = (pts[j][0] - pts[i][0]) / dd, uy = (pts[j][1] - pts[i][1]) / dd;
      cand.push_back(Point{mx - uy * h, my + ux * h});
      cand.push_back(Point{mx + uy * h, my - ux * h});
    }
  return cand;
}

CoverageResult disk_coverage(const std::vector<Point>& pts, double r) {
  CoverageResult res;
  res.center = pts[0];
  for (const auto& c : disk_candidates(pts, r)) {
    long long cnt = 0;
    for (const auto& p : pts)
      if (dist(p, c) <= r + kGeomTol) ++cnt;
    if (cnt > res.count) {
      res.count = cnt;
      res.center = c;
    }
  }
  return res;
}

CoverageResult grid_coverage(const ConvexBody& body, const PointSet& points) {
  const int d = points.dim;
  const double res = body.inradius() / 50;
  std::vector<double> lo(d, std::numeric_limits<double>::infinity());
  std::vector<double> hi(d, -std::numeric_limits<double>::infinity());
  for (const auto& p : points.points)
    for (int c = 0; c < d; ++c) {
      lo[c] = std::min(lo[c], p[c] - body.bounding_halfwidths()[c]);
      hi[c] = std::max(hi[c], p[c] + body.bounding_halfwidths()[c]);
    }
  std::vector<long long> cells(d);
  double total = 1;
  for (int c = 0; c < d; ++c) {
    cells[c] = static_cast<long long>(std::floor((hi[c] - lo[c]) / res)) + 1;
    total *= static_cast<double>(cells[c]);
  }
  if (total * static_cast<double>(points.size()) > 2e8)
    throw CapExceeded("grid coverage sweep over work budget");

  CoverageResult out;
  out.exact = false;
  out.grid_resolution = res;
  out.center = points[0];
  std::vector<long long> idx(d, 0);
  Point c(d);
  while (true) {
    for (int a = 0; a < d; ++a) c[a] = lo[a] + res * (static_cast<double>(idx[a]) + 0.5);
    long long cnt = 0;
    for (const auto& p : points.points)
      if (body.contains(c, p)) ++cnt;
    if (cnt > out.count) {
      out.count = cnt;
      out.center = c;
    }
    int a = 0;
    while (a < d && ++idx[a] == cells[a]) idx[a++] = 0;
    if (a == d) break;
  }
  return out;
}

std::vector<std::size_t> farthest_first(const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<double> d2min(n, std::numeric_limits<double>::infinity());
  std::vector<bool> used(n, false);
  std::size_t cur = 0;
  for (std::size_t step = 0; step < n; ++step) {
    order.push_back(cur);
    used[cur] = true;
    std::size_t far = n;
    double best = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      d2min[i] = std::min(d2min[i], dist2(pts[i], pts[cur]));
      if (d2min[i] > best) {
        best = d2min[i];
        far = i;
      }
    }
    if (far == n) break;
    cur = far;
  }
  return order;
}

// Assign-or-drop search maximizing points covered by k translates.
struct DropSearch {
  const ConvexBody& body;
  const std::vector<Point>& pts;
  std::vector<std::size_t> order;
  int k;
  long long budget = 20'000'000;
  long long best_cov = -1;
  std::vector<std::vector<Point>> best_groups;
  std::vector<std::vector<Point>> groups;

  void dfs(std::size_t i, long long covered) {
    if (--budget < 0) throw CapExceeded("farness search over node budget");
    if (covered + static_cast<long long>(order.size() - i) <= best_cov) return;
    if (i == order.size()) {
      best_cov = covered;
      best_groups = groups;
      return;
    }
    const Point& p = pts[order[i]];
    // Index loop: recursion below grows groups and may reallocate it.
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      groups[gi].push_back(p);
      if (fits_in_translate(body, groups[gi])) dfs(i + 1, covered + 1);
      groups[gi].pop_back();
    }
    if (static_cast<int>(groups.size()) < k) {
      groups.push_back({p});
      dfs(i + 1, covered + 1);
      groups.pop_back();
    }
    dfs(i + 1, covered);
  }
};

}  // namespace

CoverageResult max_coverage_1(const ConvexBody& body, const PointSet& points) {
  validate_input(body, points);
  const int d = points.dim;
  const std::size_t n = points.size();
  if (d == 1) {
    if (n > 200) throw CapExceeded("max_coverage_1 capped at 200 points");
    return interval_sweep(points.points, body.bounding_halfwidths()[0]);
  }
  if (body.kind() == BodyKind::kBox) {
    if (n > 200) throw CapExceeded("max_coverage_1 capped at 200 points");
    BoxSweep sweep(body.as_box().half_widths);
    std::vector<const Point*> active;
    active.reserve(n);
    for (const auto& p : points.points) active.push_back(&p);
    sweep.sweep(active, 0);
    return {sweep.best, sweep.best_center, true, 0};
  }
  if (d == 2 && (body.kind() == BodyKind::kBall || body.kind() == BodyKind::kEllipsoid)) {
    if (n > 200) throw CapExceeded("max_coverage_1 capped at 200 points");
    if (body.kind() == BodyKind::kBall) return disk_coverage(points.points, body.as_ball().radius);
    std::vector<Point> mapped;
    mapped.reserve(n);
    for (const auto& p : points.points) mapped.push_back(body.to_ball_frame(p));
    CoverageResult res = disk_coverage(mapped, 1.0);
    res.center = body.from_ball_frame(res.center);
    return res;
  }
  if (n > 60) throw CapExceeded("grid max_coverage_1 capped at 60 points");
  return grid_coverage(body, points);
}

FarnessResult farness(const ConvexBody& body, const PointSet& points, int k) {
  validate_input(body, points);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const std::size_t n = points.size();
  if (k == 1) {
    CoverageResult mc = max_coverage_1(body, points);
    return {static_cast<long long>(n) - mc.count, {mc.center}, mc.exact};
  }
  if (n > 24) throw CapExceeded("farness with k >= 2 capped at 24 points");
  DropSearch search{body, points.points, farthest_first(points.points), k, 20'000'000, -1, {}, {}};
  search.dfs(0, 0);
  FarnessResult out;
  out.removals = static_cast<long long>(n) - search.best_cov;
  for (const auto& g : search.best_groups) out.best_centers.push_back(*fits_in_translate(body, g));
  return out;
}

bool is_k_clusterable(const ConvexBody& body, const PointSet& points, int k) {
  validate_input(body, points);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (points.size() > 24) throw CapExceeded("is_k_clusterable capped at 24 points");
  if (points.dim == 2 && k <= 2 && body.kind() == BodyKind::kBall)
    return min_ball_cover_2d(points.points, k, 0).max_radius <= body.as_ball().radius + kGeomTol;
  if (points.dim == 2 && k <= 2 && body.kind() == BodyKind::kEllipsoid) {
    std::vector<Point> mapped;
    mapped.reserve(points.size());
    for (const auto& p : points.points) mapped.push_back(body.to_ball_frame(p));
    return min_ball_cover_2d(mapped, k, 0).max_radius <= 1 + kGeomTol;
  }
  return fits_in_k_translates(body, points.points, k, 24).has_value();
}

bool box_helly_check(const ConvexBody& body, const PointSet& points, int m) {
  validate_input(body, points);
  if (body.kind() != BodyKind::kBox)
    throw std::invalid_argument("box_helly_check needs an AxisBox body");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  PiercingNumber pn = piercing_helly_number(points.dim, m);
  if (!pn.finite)
    throw std::invalid_argument("piercing number unbounded for this (d, m)");
  const int h = static_cast<int>(pn.value);
  if (points.size() < static_cast<std::size_t>(h))
    throw std::invalid_argument("need at least h points");
  if (binomial_work(points.size(), h) > 2e6)
    throw CapExceeded("box_helly_check subset enumeration too large");
  bool all_ok = true;
  std::vector<Point> subset(h);
  for_each_combination(points.size(), h, [&](const std::vector<std::size_t>& idx) {
    for (int c = 0; c < h; ++c) subset[c] = points.points[idx[c]];
    if (!fits_in_k_translates(body, subset, m, static_cast<std::size_t>(h))) {
      all_ok = false;
      return false;
    }
    return true;
  });
  return all_ok;
}

SubsetWitnessCount count_unfittable_subsets(const ConvexBody& body, const PointSet& points,
                                            int subset_size) {
  validate_input(body, points);
  if (subset_size < 1) throw std::invalid_argument("subset size must be >= 1");
  if (points.size() < static_cast<std::size_t>(subset_size))
    throw std::invalid_argument("fewer points than the subset size");
  if (binomial_work(points.size(), subset_size) > 5e6)
    throw CapExceeded("subset enumeration too large");
  SubsetWitnessCount out;
  std::vector<Point> subset(subset_size);
  for_each_combination(points.size(), subset_size, [&](const std::vector<std::size_t>& idx) {
    for (int c = 0; c < subset_size; ++c) subset[c] = points.points[idx[c]];
    ++out.total;
    if (!fits_in_translate(body, subset)) ++out.witnesses;
    return true;
  });
  return out;
}

namespace {

// A ball determined by 1..3 of the input points (its potential support set):
// every subset's minimum enclosing ball appears among these.
struct CandidateBall {
  Point center;
  double radius = 0;
  std::vector<std::uint64_t> covered;
};

std::vector<CandidateBall> candidate_balls(const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  const std::size_t words = (n + 63) / 64;
  std::vector<CandidateBall> balls;
  auto add = [&](Point c, double r) {
    CandidateBall b{std::move(c), r, std::vector<std::uint64_t>(words, 0)};
    for (std::size_t i = 0; i < n; ++i)
      if (dist(pts[i], b.center) <= r + kGeomTol) b.covered[i / 64] |= 1ull << (i % 64);
    balls.push_back(std::move(b));
  };
  for (std::size_t i = 0; i < n; ++i) add(pts[i], 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Point mid{(pts[i][0] + pts[j][0]) / 2, (pts[i][1] + pts[j][1]) / 2};
      add(std::move(mid), dist(pts[i], pts[j]) / 2);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l) {
        // Circumcenter via perpendicular bisectors; collinear triples are
        // already handled by their pair balls.
        double ax = pts[j][0] - pts[i][0], ay = pts[j][1] - pts[i][1];
        double bx = pts[l][0] - pts[i][0], by = pts[l][1] - pts[i][1];
        double det = 2 * (ax * by - ay * bx);
        if (std::fabs(det) < 1e-12) continue;
        double a2 = ax * ax + ay * ay, b2 = bx * bx + by * by;
        double cx = (by * a2 - ay * b2) / det, cy = (ax * b2 - bx * a2) / det;
        add(Point{pts[i][0] + cx, pts[i][1] + cy}, std::sqrt(cx * cx + cy * cy));
      }
  std::stable_sort(balls.begin(), balls.end(),
                   [](const CandidateBall& a, const CandidateBall& b) { return a.radius < b.radius; });
  return balls;
}

long long union_count(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  long long total = 0;
  for (std::size_t w = 0; w < a.size(); ++w) total += std::popcount(a[w] | b[w]);
  return total;
}

}  // namespace

BallCover min_ball_cover_2d(const std::vector<Point>& points, int k, long long misses) {
  if (points.empty()) throw std::invalid_argument("min_ball_cover_2d needs points");
  for (const auto& p : points) require_dim(p, 2);
  if (k != 1 && k != 2) throw std::invalid_argument("min_ball_cover_2d supports k in {1,2}");
  if (misses < 0) throw std::invalid_argument("misses must be >= 0");
  const std::size_t n = points.size();
  if ((k == 1 && n > 200) || (k == 2 && n > 64))
    throw CapExceeded("min_ball_cover_2d size cap exceeded");

  BallCover out;
  const long long need = static_cast<long long>(n) - misses;
  if (need <= 0) {
    out.centers.assign(k, points[0]);
    out.radii.assign(k, 0.0);
    return out;
  }

  // Scan candidate balls by increasing radius; the first prefix containing a
  // feasible cover pins the optimal max radius to that prefix's last entry.
  std::vector<CandidateBall> balls = candidate_balls(points);
  long long budget = 2'000'000'000 / static_cast<long long>((n + 63) / 64);
  std::vector<std::size_t> chosen;
  for (std::size_t hi = 0; hi < balls.size() && chosen.empty(); ++hi) {
    if (k == 1) {
      if (union_count(balls[hi].covered, balls[hi].covered) >= need) chosen = {hi};
      continue;
    }
    for (std::size_t lo = 0; lo <= hi; ++lo) {
      if (--budget < 0) throw CapExceeded("min_ball_cover_2d over work budget");
      if (union_count(balls[lo].covered, balls[hi].covered) >= need) {
        chosen = {lo, hi};
        break;
      }
    }
  }
  if (chosen.empty()) throw std::logic_error("cover search must terminate");

  // Assign each point to the first chosen ball covering it, then tighten
  // with per-group minimum enclosing balls.
  std::vector<std::vector<Point>> groups(chosen.size());
  for (const auto& p : points)
    for (std::size_t g = 0; g < chosen.size(); ++g)
      if (dist(p, balls[chosen[g]].center) <= balls[chosen[g]].radius + kGeomTol) {
        groups[g].push_back(p);
        break;
      }
  out.max_radius = 0;
  for (std::size_t g = 0; g < chosen.size(); ++g) {
    if (groups[g].empty()) {
      out.centers.push_back(balls[chosen[g]].center);
      out.radii.push_back(0);
      continue;
    }
    MinBall mb = min_enclosing_ball(groups[g]);
    out.centers.push_back(mb.center);
    out.radii.push_back(mb.radius);
    out.max_radius = std::max(out.max_radius, mb.radius);
  }
  while (static_cast<int>(out.centers.size()) < k) {
    out.centers.push_back(out.centers.front());
    out.radii.push_back(0);
  }
  return out;
}

}  // namespace pierce
