#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "pierce/common.hpp"
#include "pierce/meb.hpp"
#include "pierce/oracle.hpp"
#include "pierce/outliers.hpp"
#include "pierce/rng.hpp"
#include "pierce/sampling.hpp"

using namespace pierce;

namespace {

TesterParams params_with(double epsilon, double delta, std::uint64_t seed) {
  TesterParams p;
  p.epsilon = epsilon;
  p.delta = delta;
  p.seed = seed;
  return p;
}

PointSet core_plus_outliers(int n_core, int n_out, double out_dist,
                            std::uint64_t seed) {
  Rng rng(seed);
  PointSet ps;
  ps.dim = 2;
  for (int i = 0; i < n_core; ++i) {
    while (true) {
      const Point p{rng.real(-1, 1), rng.real(-1, 1)};
      if (norm(p) <= 1) {
        ps.points.push_back(p);
        break;
      }
    }
  }
  for (int i = 0; i < n_out; ++i) {
    const double ang = rng.real(0, 6.283185307179586);
    ps.points.push_back(
        Point{out_dist * std::cos(ang), out_dist * std::sin(ang)});
  }
  return ps;
}

// Exhaustive optimum for the max-radius k-cover, over all assignments.
double brute_k_cover_radius(const std::vector<Point>& pts, int k) {
  const std::size_t n = pts.size();
  std::vector<int> assign(n, 0);
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    double worst = 0;
    for (int g = 0; g < k && worst < best; ++g) {
      std::vector<Point> part;
      for (std::size_t i = 0; i < n; ++i)
        if (assign[i] == g) part.push_back(pts[i]);
      if (!part.empty())
        worst = std::max(worst, min_enclosing_ball(part).radius);
    }
    best = std::min(best, worst);
    std::size_t pos = 0;
    while (pos < n && assign[pos] == k - 1) assign[pos++] = 0;
    if (pos == n) return best;
    ++assign[pos];
  }
}

}  // namespace

TEST_CASE("outlier sample sizes match the published formulas") {
  CHECK(outlier_sample_count_1(2, 0.5, std::exp(-1.0)) == 24);
  CHECK(outlier_sample_count_1(1, 1.0, std::exp(-2.0)) == 4);
  CHECK(outlier_sample_count_k(1, 1, 2, std::exp(-1.0)) == 288);
  const long long expect =
      static_cast<long long>(std::ceil(2.0L * 3 * 157464 * std::log(3.0L)));
  CHECK(outlier_sample_count_k(2, 2, 8, 1.0 / 3) == expect);
  CHECK_THROWS_AS(outlier_sample_count_1(0, 0.5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(outlier_sample_count_1(2, 0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(outlier_sample_count_k(0, 2, 8, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(outlier_sample_count_k(1, 2, 0, 0.5), std::invalid_argument);
}

TEST_CASE("identical points collapse to a zero-radius report") {
  PointSet ps;
  ps.dim = 2;
  for (int i = 0; i < 50; ++i) ps.points.push_back(Point{3.0, -2.0});
  const VectorSource src(ps);
  const ClusterReport rep = cluster_1_outliers(src, params_with(0.5, 0.5, 1));
  REQUIRE(rep.centers.size() == 1);
  CHECK(rep.centers[0] == Point{3.0, -2.0});
  CHECK(rep.radii[0] == 0.0);
  CHECK(rep.sample_size == outlier_sample_count_1(2, 0.5, 0.5));
  CHECK(rep.covered_fraction_estimate == doctest::Approx(1.0));
  CHECK(rep.exact);
}

TEST_CASE("single-ball sandwich against the exact oracle") {
  const PointSet data = core_plus_outliers(180, 20, 100.0, 900);
  const VectorSource src(data);
  const double r_min = min_enclosing_ball(data.points).radius;
  const double r_outlier = min_ball_cover_2d(data.points, 1, 40).max_radius;
  CHECK(r_outlier <= 1.0 + 1e-9);
  CHECK(r_min >= 49.0);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const ClusterReport rep =
        cluster_1_outliers(src, params_with(0.2, 0.1, seed));
    CHECK(rep.radii[0] <= r_min + 1e-9);
    CHECK(rep.radii[0] >= r_outlier - 1e-9);
  }
}

TEST_CASE("two-ball sandwich against the exact oracle") {
  Rng rng(901);
  PointSet data;
  data.dim = 2;
  for (int i = 0; i < 18; ++i) {
    while (true) {
      const Point p{rng.real(-1, 1), rng.real(-1, 1)};
      if (norm(p) <= 1) {
        data.points.push_back(i % 2 ? p + Point{50, 0} : p);
        break;
      }
    }
  }
  for (int i = 0; i < 4; ++i)
    data.points.push_back(Point{25.0, 200.0 + 10.0 * i});
  const VectorSource src(data);
  const BallCover full = min_ball_cover_2d(data.points, 2, 0);
  const BallCover trimmed = min_ball_cover_2d(data.points, 2, 4);
  const double r_min = full.max_radius;
  const double r_outlier = trimmed.max_radius;
  CHECK(r_outlier <= r_min + 1e-9);
  const SampleSizeFn m_fn = [](double, int, int, double) -> long long {
    return 120;
  };
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const ClusterReport rep =
        cluster_k_outliers(src, 2, params_with(0.2, 0.1, seed), 8, m_fn, 16);
    CHECK(rep.custom_sample_size);
    CHECK(rep.sample_size == 120);
    const double worst = *std::max_element(rep.radii.begin(), rep.radii.end());
    if (worst <= r_min + 1e-9 && worst >= r_outlier - 1e-9) ++ok;
  }
  // Holds per run with probability >= 1 - delta; allow binomial noise.
  CHECK(ok >= 80);
}

TEST_CASE("coverage estimate meets the epsilon target in most trials") {
  const PointSet data = core_plus_outliers(190, 10, 80.0, 902);
  const VectorSource src(data);
  int hits = 0;
  const int trials = 60;
  for (int trial = 0; trial < trials; ++trial) {
    const ClusterReport rep =
        cluster_1_outliers(src, params_with(0.2, 0.1, 7000 + trial));
    CHECK(rep.covered_fraction_estimate >= 0.0);
    CHECK(rep.covered_fraction_estimate <= 1.0);
    if (rep.covered_fraction_estimate >= 1 - 0.2) ++hits;
  }
  CHECK(hits >= static_cast<int>(trials * 0.8));
}

TEST_CASE("k matching the distinct point count gives zero radii") {
  PointSet ps;
  ps.dim = 2;
  for (int i = 0; i < 60; ++i)
    ps.points.push_back(Point{static_cast<double>(i % 3), 0.0});
  const VectorSource src(ps);
  const SampleSizeFn m_fn = [](double, int, int, double) -> long long {
    return 200;
  };
  const ClusterReport rep =
      cluster_k_outliers(src, 3, params_with(0.3, 0.3, 5), 8, m_fn, 16);
  REQUIRE(rep.radii.size() == 3);
  for (double r : rep.radii) CHECK(r == 0.0);
  CHECK(rep.exact);
}

TEST_CASE("square corners split into adjacent pairs") {
  PointSet ps;
  ps.dim = 2;
  ps.points = {Point{0, 0}, Point{1, 0}, Point{0, 1}, Point{1, 1}};
  const VectorSource src(ps);
  const SampleSizeFn m_fn = [](double, int, int, double) -> long long {
    return 400;
  };
  const ClusterReport rep =
      cluster_k_outliers(src, 2, params_with(0.3, 0.3, 6), 8, m_fn, 16);
  const double worst = *std::max_element(rep.radii.begin(), rep.radii.end());
  CHECK(worst == doctest::Approx(0.5));
  CHECK(rep.exact);
}

TEST_CASE("sample size below k is rejected") {
  PointSet ps;
  ps.dim = 2;
  ps.points = {Point{0, 0}, Point{5, 0}, Point{0, 5}};
  const VectorSource src(ps);
  const SampleSizeFn m_fn = [](double, int, int, double) -> long long {
    return 1;
  };
  CHECK_THROWS_AS(
      cluster_k_outliers(src, 2, params_with(0.3, 0.3, 7), 8, m_fn, 16),
      std::invalid_argument);
}

TEST_CASE("exact k centers on a collinear quartet") {
  const std::vector<Point> pts = {Point{0.0}, Point{1.0}, Point{9.0},
                                  Point{10.0}};
  const KCenterResult res = k_center_exact(pts, 2);
  REQUIRE(res.centers.size() == 2);
  CHECK(res.radii[0] == doctest::Approx(0.5));
  CHECK(res.radii[1] == doctest::Approx(0.5));
  CHECK(res.centers[0][0] == doctest::Approx(0.5));
  CHECK(res.centers[1][0] == doctest::Approx(9.5));
  CHECK(res.assignment == std::vector<int>{0, 0, 1, 1});
}

TEST_CASE("exact k centers with k = 1 reduces to the enclosing ball") {
  Rng rng(41);
  std::vector<Point> pts;
  for (int i = 0; i < 14; ++i)
    pts.push_back(Point{rng.real(-3, 3), rng.real(-3, 3)});
  const KCenterResult res = k_center_exact(pts, 1);
  const MinBall mb = min_enclosing_ball(pts);
  CHECK(res.radii[0] == doctest::Approx(mb.radius).epsilon(1e-9));
  CHECK(dist(res.centers[0], mb.center) < 1e-7);
}

TEST_CASE("exact k centers match exhaustive partition enumeration") {
  Rng rng(43);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Point> pts;
    for (int i = 0; i < 9; ++i)
      pts.push_back(Point{rng.real(-2, 2), rng.real(-2, 2)});
    const KCenterResult res = k_center_exact(pts, 3);
    const double brute = brute_k_cover_radius(pts, 3);
    const double worst = *std::max_element(res.radii.begin(), res.radii.end());
    CHECK(worst == doctest::Approx(brute).epsilon(1e-9));
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const int g = res.assignment[i];
      CHECK(dist(res.centers[g], pts[i]) <= res.radii[g] + 1e-9);
    }
  }
}

TEST_CASE("exact k centers dedupe repeated points against the cap") {
  std::vector<Point> pts;
  for (int i = 0; i < 50; ++i)
    pts.push_back(Point{static_cast<double>(i % 4), 0.0});
  const KCenterResult res = k_center_exact(pts, 2, 16);
  const double worst = *std::max_element(res.radii.begin(), res.radii.end());
  CHECK(worst == doctest::Approx(0.5));
  CHECK(res.assignment.size() == pts.size());

  Rng rng(47);
  std::vector<Point> many;
  for (int i = 0; i < 20; ++i)
    many.push_back(Point{rng.real(0, 1), rng.real(0, 1)});
  CHECK_THROWS_AS(k_center_exact(many, 2, 16), CapExceeded);
}

TEST_CASE("farthest-point seeding is feasible and near-optimal") {
  Rng rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Point> pts;
    const int n = 12;
    for (int i = 0; i < n; ++i)
      pts.push_back(Point{rng.real(-2, 2), rng.real(-2, 2)});
    const KCenterResult fast = k_center_gonzalez(pts, 3);
    const KCenterResult best = k_center_exact(pts, 3);
    const double fworst =
        *std::max_element(fast.radii.begin(), fast.radii.end());
    const double bworst =
        *std::max_element(best.radii.begin(), best.radii.end());
    CHECK(fworst >= bworst - 1e-9);
    CHECK(fworst <= 2 * bworst + 1e-9);
    for (int i = 0; i < n; ++i) {
      const int g = fast.assignment[i];
      CHECK(dist(fast.centers[g], pts[i]) <= fast.radii[g] + 1e-9);
    }
  }
}

TEST_CASE("default sample size path reports the published m") {
  const PointSet data = core_plus_outliers(30, 0, 0.0, 903);
  const VectorSource src(data);
  const ClusterReport rep =
      cluster_k_outliers(src, 2, params_with(0.5, 0.9, 8), 8);
  CHECK_FALSE(rep.custom_sample_size);
  CHECK(rep.sample_size == outlier_sample_count_k(2, 2, 8, 0.9));
  CHECK(rep.centers.size() == 2);
}
