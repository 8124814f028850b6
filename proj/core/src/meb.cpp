#include "pierce/meb.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pierce/rng.hpp"

namespace pierce {
namespace {

struct Circumball {
  Point center;
  double r2 = -1;  // negative: ball of no points, contains nothing
  std::vector<std::size_t> bnd;
};

class Welzl {
 public:
  Welzl(const std::vector<Point>& pts, int d, std::uint64_t seed) : pts_(pts), d_(d) {
    order_.resize(pts.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    Rng rng(seed);
    rng.shuffle(order_);
  }

  Circumball run() {
    std::vector<std::size_t> bnd;
    return mtf(order_.size(), bnd);
  }

 private:
  static bool inside(const Circumball& b, const Point& p) {
    if (b.r2 < 0) return false;
    return dist2(p, b.center) <= b.r2 * (1 + 1e-10) + 1e-20;
  }

  // Ball through all boundary points: center = p0 + sum mu_j v_j with
  // v_j = p_j - p0 and Gram system (v_i . v_j) mu = |v_i|^2 / 2.
  Circumball circumball(const std::vector<std::size_t>& bnd) const {
    const int m = static_cast<int>(bnd.size());
    if (m == 0) return {Point(d_), -1, {}};
    const Point& p0 = pts_[bnd[0]];
    if (m == 1) return {p0, 0, bnd};
    const int k = m - 1;
    std::vector<Point> v;
    v.reserve(k);
    for (int j = 1; j < m; ++j) v.push_back(pts_[bnd[j]] - p0);
    std::vector<double> g(static_cast<std::size_t>(k) * k), rhs(k), mu(k, 0.0);
    double scale = 0;
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        g[i * k + j] = dot(v[i], v[j]);
        scale = std::max(scale, std::fabs(g[i * k + j]));
      }
      rhs[i] = norm2(v[i]) / 2;
    }
    double pivot_tol = 1e-13 * std::max(scale, 1e-300);
    std::vector<int> cols(k);
    std::iota(cols.begin(), cols.end(), 0);
    for (int step = 0; step < k; ++step) {
      int piv = step;
      for (int r = step + 1; r < k; ++r)
        if (std::fabs(g[r * k + step]) > std::fabs(g[piv * k + step])) piv = r;
      if (std::fabs(g[piv * k + step]) < pivot_tol) {
        for (int r = 0; r < k; ++r) g[r * k + step] = 0;
        g[step * k + step] = 1;
        rhs[step] = 0;
        continue;
      }
      if (piv != step) {
        for (int c = 0; c < k; ++c) std::swap(g[step * k + c], g[piv * k + c]);
        std::swap(rhs[step], rhs[piv]);
      }
      for (int r = step + 1; r < k; ++r) {
        double f = g[r * k + step] / g[step * k + step];
        for (int c = step; c < k; ++c) g[r * k + c] -= f * g[step * k + c];
        rhs[r] -= f * rhs[step];
      }
    }
    for (int r = k - 1; r >= 0; --r) {
      double s = rhs[r];
      for (int c = r + 1; c < k; ++c) s -= g[r * k + c] * mu[c];
      mu[r] = s / g[r * k + r];
    }
    Point center = p0;
    for (int j = 0; j < k; ++j) center = center + mu[j] * v[j];
    double r2 = 0;
    for (std::size_t idx : bnd) r2 = std::max(r2, dist2(center, pts_[idx]));
    return {std::move(center), r2, bnd};
  }

  Circumball mtf(std::size_t n, std::vector<std::size_t>& bnd) {
    Circumball b = circumball(bnd);
    if (static_cast<int>(bnd.size()) == d_ + 1) return b;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t idx = order_[i];
      if (!inside(b, pts_[idx])) {
        bnd.push_back(idx);
        b = mtf(i, bnd);
        bnd.pop_back();
        std::rotate(order_.begin(), order_.begin() + i, order_.begin() + i + 1);
      }
    }
    return b;
  }

  const std::vector<Point>& pts_;
  int d_;
  std::vector<std::size_t> order_;
};

}  // namespace

MinBall min_enclosing_ball(const std::vector<Point>& points, std::uint64_t seed) {
  if (points.empty()) throw std::invalid_argument("min_enclosing_ball needs at least one point");
  const int d = points[0].dim();
  for (const auto& p : points) {
    require_dim(p, d);
    if (!all_finite(p)) throw std::invalid_argument("point has non-finite coordinate");
  }
  Welzl w(points, d, seed);
  Circumball b = w.run();
  MinBall out;
  out.center = std::move(b.center);
  out.radius = b.r2 > 0 ? std::sqrt(b.r2) : 0;
  out.support = std::move(b.bnd);
  std::sort(out.support.begin(), out.support.end());
  return out;
}

}  // namespace pierce
