#include "pierce/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pierce/common.hpp"
#include "pierce/linprog.hpp"
#include "pierce/meb.hpp"

namespace pierce {
namespace {

void validate_points(const ConvexBody& body, const std::vector<Point>& points) {
  if (points.empty()) throw std::invalid_argument("fit needs at least one point");
  for (const auto& p : points) require_dim(p, body.dim());
}

std::optional<Point> fit_polytope(const ConvexBody& body, const std::vector<Point>& points) {
  const int d = body.dim();
  const auto& facets = body.as_polytope().facets;
  double bound = 1;
  for (const auto& p : points)
    for (int c = 0; c < d; ++c) bound = std::max(bound, std::fabs(p[c]));
  bound += body.circumscribing_cube_side() + 1;

  // Variables (c, s): maximize the uniform slack s subject to
  // a_j . (p_i - c) <= b_j - s for every point i and facet j.
  std::vector<double> objective(d + 1, 0.0);
  objective[d] = 1;
  std::vector<LinConstraint> rows;
  rows.reserve(points.size() * facets.size());
  for (const auto& p : points)
    for (const auto& fc : facets) {
      LinConstraint row;
      row.a.resize(d + 1);
      for (int c = 0; c < d; ++c) row.a[c] = -fc.normal[c];
      row.a[d] = 1;
      row.b = fc.offset - dot(fc.normal, p);
      rows.push_back(std::move(row));
    }
  auto sol = seidel_maximize(objective, rows, bound);
  if (!sol || (*sol)[d] < -kGeomTol) return std::nullopt;
  Point center(d);
  for (int c = 0; c < d; ++c) center[c] = (*sol)[c];
  return center;
}

}  // namespace

std::optional<Point> fits_in_translate(const ConvexBody& body, const std::vector<Point>& points) {
  validate_points(body, points);
  const int d = body.dim();
  switch (body.kind()) {
    case BodyKind::kBall: {
      MinBall mb = min_enclosing_ball(points);
      if (mb.radius <= body.as_ball().radius + kGeomTol) return mb.center;
      return std::nullopt;
    }
    case BodyKind::kBox: {
      const auto& w = body.as_box().half_widths;
      Point center(d);
      for (int c = 0; c < d; ++c) {
        double lo = points[0][c], hi = points[0][c];
        for (const auto& p : points) {
          lo = std::min(lo, p[c]);
          hi = std::max(hi, p[c]);
        }
        if ((hi - lo) / 2 > w[c] + kGeomTol) return std::nullopt;
        center[c] = (lo + hi) / 2;
      }
      return center;
    }
    case BodyKind::kEllipsoid: {
      std::vector<Point> mapped;
      mapped.reserve(points.size());
      for (const auto& p : points) mapped.push_back(body.to_ball_frame(p));
      MinBall mb = min_enclosing_ball(mapped);
      if (mb.radius <= 1 + kGeomTol) return body.from_ball_frame(mb.center);
      return std::nullopt;
    }
    case BodyKind::kPolytope:
      return fit_polytope(body, points);
  }
  return std::nullopt;
}

namespace {

std::vector<std::size_t> farthest_first_order(const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<double> d2(n, std::numeric_limits<double>::infinity());
  std::vector<bool> used(n, false);
  std::size_t cur = 0;
  for (std::size_t step = 0; step < n; ++step) {
    order.push_back(cur);
    used[cur] = true;
    std::size_t far = n;
    double best = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      d2[i] = std::min(d2[i], dist2(pts[i], pts[cur]));
      if (d2[i] > best) {
        best = d2[i];
        far = i;
      }
    }
    if (far == n) break;
    cur = far;
  }
  return order;
}

struct PartitionSearch {
  const ConvexBody& body;
  const std::vector<Point>& pts;
  std::vector<std::size_t> order;
  int k;
  long long budget = 5'000'000;
  std::vector<std::vector<Point>> groups;

  bool dfs(std::size_t i) {
    if (i == order.size()) return true;
    const Point& p = pts[order[i]];
    int used = static_cast<int>(groups.size());
    for (int g = 0; g < used; ++g) {
      groups[g].push_back(p);
      if (--budget < 0) throw CapExceeded("fits_in_k_translates search budget exceeded");
      if (fits_in_translate(body, groups[g]) && dfs(i + 1)) return true;
      groups[g].pop_back();
    }
    if (used < k) {
      groups.push_back({p});
      if (dfs(i + 1)) return true;
      groups.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Point>> fits_in_k_translates(const ConvexBody& body,
                                                       const std::vector<Point>& points, int k,
                                                       std::size_t exact_cap) {
  validate_points(body, points);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const std::size_t n = points.size();

  auto pad = [&](std::vector<Point> centers) {
    while (static_cast<int>(centers.size()) < k) centers.push_back(centers.front());
    return centers;
  };

  if (n <= static_cast<std::size_t>(k)) {
    std::vector<Point> centers(points.begin(), points.end());
    return pad(std::move(centers));
  }
  if (auto c = fits_in_translate(body, points)) return pad({*c});
  if (k == 1) return std::nullopt;

  if (n == static_cast<std::size_t>(k) + 1) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (auto c = fits_in_translate(body, {points[i], points[j]})) {
          std::vector<Point> centers{*c};
          for (std::size_t l = 0; l < n; ++l)
            if (l != i && l != j) centers.push_back(points[l]);
          return centers;
        }
    return std::nullopt;
  }

  if (n > exact_cap)
    throw CapExceeded("fits_in_k_translates exact search capped at " +
                      std::to_string(exact_cap) + " points");
  PartitionSearch search{body, points, farthest_first_order(points), k, 5'000'000, {}};
  if (!search.dfs(0)) return std::nullopt;
  std::vector<Point> centers;
  centers.reserve(search.groups.size());
  for (const auto& g : search.groups) centers.push_back(*fits_in_translate(body, g));
  return pad(std::move(centers));
}

}  // namespace pierce
