#include "pierce/gen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "pierce/common.hpp"
#include "pierce/helly.hpp"
#include "pierce/rng.hpp"

namespace pierce {

namespace {

// Integer lattice sites ordered by L-infinity shell, lexicographic within a
// shell: the origin first, then the surface of the radius-1 cube, and so on.
std::vector<Point> lattice_sites(long long count, int d) {
  std::vector<Point> sites;
  for (long long shell = 0; static_cast<long long>(sites.size()) < count; ++shell) {
    std::vector<long long> v(d, -shell);
    while (true) {
      long long linf = 0;
      for (long long c : v) linf = std::max(linf, std::llabs(c));
      if (linf == shell) {
        Point p(d);
        for (int j = 0; j < d; ++j) p[j] = static_cast<double>(v[j]);
        sites.push_back(std::move(p));
        if (static_cast<long long>(sites.size()) == count) return sites;
      }
      int j = d - 1;
      while (j >= 0 && v[j] == shell) v[j--] = -shell;
      if (j < 0) break;
      ++v[j];
    }
  }
  return sites;
}

// Uniform draw from the origin-centered body: rejection from its bounding box.
Point sample_in_body(const ConvexBody& body, Rng& rng) {
  const int d = body.dim();
  const std::vector<double>& bhw = body.bounding_halfwidths();
  const Point origin(d);
  Point q(d);
  for (int tries = 0; tries < 10'000'000; ++tries) {
    for (int j = 0; j < d; ++j) q[j] = rng.real(-bhw[j], bhw[j]);
    if (body.contains(origin, q)) return q;
  }
  throw std::runtime_error("rejection sampling failed to hit the body");
}

// Draws one jittered site position per lattice site. Pitch 5*diam with
// per-axis jitter up to diam/4 keeps any two cross-site points more than
// 2*diam apart: site centers differ by >= 4.5*diam in some axis, and each
// point strays at most diam/2 from its center.
std::vector<Point> jittered_sites(const ConvexBody& body, long long count, Rng& rng) {
  const int d = body.dim();
  const double pitch = 5.0 * body.diameter();
  const double jitter = body.diameter() / 4;
  std::vector<Point> sites = lattice_sites(count, d);
  std::vector<Point> pos;
  pos.reserve(sites.size());
  for (const auto& s : sites) {
    Point c(d);
    for (int j = 0; j < d; ++j) c[j] = s[j] * pitch;
    for (int j = 0; j < d; ++j) c[j] += rng.real(-jitter, jitter);
    pos.push_back(std::move(c));
  }
  return pos;
}

struct Planted {
  std::vector<Point> pts;
  std::vector<Point> centers;
  std::vector<long long> outlier_indices;
};

// Shared layout for the clusterable and outlier generators: k cluster sites,
// per-point uniform site choice, outliers on a second lattice shifted along
// the first axis far enough that every outlier is >= spread from every
// cluster center. With n_out = 0 the draw sequence is untouched, which makes
// the zero-outlier case reproduce gen_clusterable bit for bit.
Planted plant(const ConvexBody& body, int k, long long n_cluster, long long n_out,
              double spread, std::uint64_t seed) {
  const int d = body.dim();
  const double pitch = 5.0 * body.diameter();
  Rng rng(seed);

  Planted out;
  out.centers = jittered_sites(body, k, rng);

  std::vector<Point> outlier_pos;
  if (n_out > 0) {
    std::vector<Point> osites = lattice_sites(n_out, d);
    double reach = 0;
    for (const auto& c : out.centers)
      for (double x : c.coords) reach = std::max(reach, std::fabs(x));
    for (const auto& s : osites)
      for (double x : s.coords) reach = std::max(reach, std::fabs(x) * pitch);
    const double offset = 2 * reach + spread + pitch;
    outlier_pos.reserve(osites.size());
    for (const auto& s : osites) {
      Point p(d);
      for (int j = 0; j < d; ++j) p[j] = s[j] * pitch;
      p[0] += offset;
      outlier_pos.push_back(std::move(p));
    }
  }

  std::vector<Point> raw;
  raw.reserve(static_cast<std::size_t>(n_cluster + n_out));
  for (long long i = 0; i < n_cluster; ++i) {
    const std::size_t g = rng.index(static_cast<std::size_t>(k));
    raw.push_back(out.centers[g] + sample_in_body(body, rng));
  }
  for (auto& p : outlier_pos) raw.push_back(std::move(p));

  std::vector<std::size_t> perm(raw.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  rng.shuffle(perm);
  out.pts.resize(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    out.pts[i] = std::move(raw[perm[i]]);
    if (perm[i] >= static_cast<std::size_t>(n_cluster))
      out.outlier_indices.push_back(static_cast<long long>(i));
  }
  return out;
}

void check_common(const ConvexBody& body, int k, long long n, int d) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (d != body.dim())
    throw std::invalid_argument("dimension " + std::to_string(d) +
                                " does not match body dimension " + std::to_string(body.dim()));
}

}  // namespace

Instance gen_clusterable(const ConvexBody& body, int k, long long n, int d, std::uint64_t seed) {
  check_common(body, k, n, d);
  Planted planted = plant(body, k, n, 0, 0.0, seed);
  Instance inst;
  inst.points.dim = d;
  inst.points.points = std::move(planted.pts);
  inst.truth = TruthClusterable{std::move(planted.centers)};
  return inst;
}

Instance gen_far(const ConvexBody& body, int k, long long n, int d, double epsilon,
                 std::uint64_t seed) {
  check_common(body, k, n, d);
  if (!(epsilon > 0 && epsilon < 1)) throw std::invalid_argument("epsilon must be in (0, 1)");
  if (epsilon * static_cast<double>(n) + 1e-9 < static_cast<double>(k) + 1)
    throw std::invalid_argument("epsilon*n must be at least k+1");
  const long long spikes = guarded_count(epsilon * static_cast<double>(n));
  if (n - spikes < k)
    throw std::invalid_argument("not enough points for k non-empty groups");

  Rng rng(seed);
  const std::vector<Point> pos = jittered_sites(body, k + spikes, rng);

  const long long dense = n - spikes;
  const long long base = dense / k;
  const long long rem = dense % k;
  std::vector<Point> raw;
  raw.reserve(static_cast<std::size_t>(n));
  for (long long g = 0; g < k; ++g) {
    const long long size = base + (g < rem ? 1 : 0);
    for (long long i = 0; i < size; ++i)
      raw.push_back(pos[static_cast<std::size_t>(g)] + sample_in_body(body, rng));
  }
  for (long long s = 0; s < spikes; ++s) raw.push_back(pos[static_cast<std::size_t>(k + s)]);

  std::vector<std::size_t> perm(raw.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  rng.shuffle(perm);

  Instance inst;
  inst.points.dim = d;
  inst.points.points.resize(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) inst.points.points[i] = std::move(raw[perm[i]]);
  inst.truth = TruthFar{epsilon, spikes};
  return inst;
}

Instance gen_outliers(const ConvexBody& body, int k, long long n, int d, double epsilon,
                      double spread, std::uint64_t seed) {
  check_common(body, k, n, d);
  if (!(epsilon >= 0 && epsilon < 1)) throw std::invalid_argument("epsilon must be in [0, 1)");
  if (!(spread > 2 * body.diameter()))
    throw std::invalid_argument("spread must exceed twice the body diameter");
  const long long n_out =
      static_cast<long long>(std::floor(epsilon * static_cast<double>(n) + 1e-9));
  Planted planted = plant(body, k, n - n_out, n_out, spread, seed);
  Instance inst;
  inst.points.dim = d;
  inst.points.points = std::move(planted.pts);
  inst.truth = TruthOutliers{std::move(planted.centers), std::move(planted.outlier_indices)};
  return inst;
}

}  // namespace pierce
