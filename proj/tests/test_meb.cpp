#include <doctest.h>

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pierce/meb.hpp"
#include "pierce/rng.hpp"

using namespace pierce;

namespace {

std::optional<MinBall> circum3(const Point& a, const Point& b, const Point& c) {
  const double m00 = 2 * (b[0] - a[0]), m01 = 2 * (b[1] - a[1]);
  const double m10 = 2 * (c[0] - a[0]), m11 = 2 * (c[1] - a[1]);
  const double r0 = norm2(b) - norm2(a), r1 = norm2(c) - norm2(a);
  const double det = m00 * m11 - m01 * m10;
  if (std::fabs(det) < 1e-12) return std::nullopt;
  MinBall mb;
  mb.center = Point{(r0 * m11 - r1 * m01) / det, (m00 * r1 - m10 * r0) / det};
  mb.radius = dist(mb.center, a);
  return mb;
}

// Exhaustive planar optimum: the minimum ball is the circumball of at most
// three of the points.
double brute_meb_radius_2d(const std::vector<Point>& pts) {
  if (pts.size() == 1) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  auto covers_all = [&](const Point& ctr, double r) {
    for (const auto& p : pts)
      if (dist(ctr, p) > r + 1e-9) return false;
    return true;
  };
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Point mid = 0.5 * (pts[i] + pts[j]);
      const double r = 0.5 * dist(pts[i], pts[j]);
      if (r < best && covers_all(mid, r)) best = r;
      for (std::size_t l = j + 1; l < pts.size(); ++l) {
        const auto cb = circum3(pts[i], pts[j], pts[l]);
        if (cb && cb->radius < best && covers_all(cb->center, cb->radius))
          best = cb->radius;
      }
    }
  return best;
}

}  // namespace

TEST_CASE("minimum ball of tiny sets") {
  const MinBall one = min_enclosing_ball({Point{2.0, -1.0}});
  CHECK(one.radius == 0.0);
  CHECK(one.center == Point{2.0, -1.0});

  const MinBall two = min_enclosing_ball({Point{0, 0}, Point{2, 0}});
  CHECK(two.radius == doctest::Approx(1.0));
  CHECK(two.center[0] == doctest::Approx(1.0));
  CHECK(two.center[1] == doctest::Approx(0.0));

  const double s = std::sqrt(3.0);
  const MinBall tri =
      min_enclosing_ball({Point{0, 0}, Point{s, 0}, Point{s / 2, 1.5}});
  CHECK(tri.radius == doctest::Approx(1.0));
  CHECK(tri.center[0] == doctest::Approx(s / 2));
  CHECK(tri.center[1] == doctest::Approx(0.5));
  CHECK(tri.support.size() == 3);
}

TEST_CASE("obtuse triangle is determined by its longest side") {
  const MinBall mb =
      min_enclosing_ball({Point{0, 0}, Point{4, 0}, Point{1, 0.5}});
  CHECK(mb.radius == doctest::Approx(2.0));
  CHECK(mb.center[0] == doctest::Approx(2.0));
  CHECK(mb.center[1] == doctest::Approx(0.0));
  CHECK(mb.support.size() == 2);
}

TEST_CASE("matches brute force on small planar sets") {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng.index(12));
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i)
      pts.push_back(Point{rng.real(-1, 1), rng.real(-1, 1)});
    const MinBall mb = min_enclosing_ball(pts);
    CHECK(mb.radius ==
          doctest::Approx(brute_meb_radius_2d(pts)).epsilon(1e-7));
    for (const auto& p : pts) CHECK(dist(mb.center, p) <= mb.radius + 1e-9);
  }
}

TEST_CASE("support points certify the ball") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + static_cast<int>(rng.index(3));
    const int n = 2 + static_cast<int>(rng.index(14));
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
      Point p(d);
      for (int c = 0; c < d; ++c) p[c] = rng.real(-2, 2);
      pts.push_back(p);
    }
    const MinBall mb = min_enclosing_ball(pts);
    for (const auto& p : pts) CHECK(dist(mb.center, p) <= mb.radius + 1e-9);
    CHECK(!mb.support.empty());
    CHECK(mb.support.size() <= static_cast<std::size_t>(d + 1));
    std::vector<Point> sup;
    for (const auto idx : mb.support) {
      CHECK(dist(mb.center, pts[idx]) ==
            doctest::Approx(mb.radius).epsilon(1e-9));
      sup.push_back(pts[idx]);
    }
    const MinBall again = min_enclosing_ball(sup);
    CHECK(again.radius == doctest::Approx(mb.radius).epsilon(1e-9));
    CHECK(dist(again.center, mb.center) < 1e-7 * (1 + mb.radius));
  }
}

TEST_CASE("radius is monotone under taking subsets") {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng.index(10));
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i)
      pts.push_back(Point{rng.real(-1, 1), rng.real(-1, 1)});
    const double full = min_enclosing_ball(pts).radius;
    std::vector<Point> sub = pts;
    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(rng.index(sub.size())));
    CHECK(min_enclosing_ball(sub).radius <= full + 1e-9);
  }
}

TEST_CASE("deterministic for a fixed seed and stable across seeds") {
  Rng rng(23);
  std::vector<Point> pts;
  for (int i = 0; i < 40; ++i)
    pts.push_back(Point{rng.real(0, 5), rng.real(0, 5)});
  const MinBall a = min_enclosing_ball(pts);
  const MinBall b = min_enclosing_ball(pts);
  CHECK(a.radius == b.radius);
  CHECK(a.center == b.center);
  CHECK(a.support == b.support);
  const MinBall c = min_enclosing_ball(pts, 999);
  CHECK(c.radius == doctest::Approx(a.radius).epsilon(1e-9));
  CHECK(dist(c.center, a.center) < 1e-7);
}

TEST_CASE("handles duplicates and collinear input") {
  const MinBall dup = min_enclosing_ball({Point{1, 1}, Point{1, 1}, Point{1, 1}});
  CHECK(dup.radius == doctest::Approx(0.0));
  const MinBall col =
      min_enclosing_ball({Point{0, 0}, Point{1, 0}, Point{2, 0}, Point{3, 0}});
  CHECK(col.radius == doctest::Approx(1.5));
  CHECK(col.center[0] == doctest::Approx(1.5));
}

TEST_CASE("rejects empty and mixed-dimension input") {
  CHECK_THROWS_AS(min_enclosing_ball(std::vector<Point>{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(min_enclosing_ball({Point{0, 0}, Point{0, 0, 0}}),
                  std::invalid_argument);
}
