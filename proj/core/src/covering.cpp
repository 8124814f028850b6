#include "pierce/covering.hpp"

#include <cmath>
#include <stdexcept>

#include "pierce/common.hpp"

namespace pierce {

namespace {

// Ellipsoids are measured after the square-root-of-Q change of frame, where
// they become unit balls; the returned centers are mapped back. Other bodies
// use their native axis frame.
bool use_ball_frame(const ConvexBody& body) { return body.kind() == BodyKind::kEllipsoid; }

double frame_cube_out(const ConvexBody& body) {
  return use_ball_frame(body) ? 2.0 : body.circumscribing_cube_side();
}

double frame_cube_in(const ConvexBody& body) {
  return use_ball_frame(body) ? 2.0 / std::sqrt(static_cast<double>(body.dim()))
                              : body.inscribed_cube_side();
}

}  // namespace

CoveringEstimate covering_t(const ConvexBody& body, double slack) {
  if (!(slack > 0) || !(slack < 1)) throw std::invalid_argument("slack must be in (0,1)");
  double ratio = (2 + slack) * frame_cube_out(body) / frame_cube_in(body);
  int kappa = static_cast<int>(std::ceil(ratio - 1e-9));
  if (kappa < 2) kappa = 2;
  // An odd cell count keeps the grid's middle cell centered on the body, so
  // dropping at least that one cell from the kappa^d grid is always valid.
  if (kappa % 2 == 0) ++kappa;
  long long t = 1;
  for (int i = 0; i < body.dim(); ++i) {
    if (t > 9'000'000'000'000'000ll / kappa) throw std::overflow_error("covering_t overflow");
    t *= kappa;
  }
  return {kappa, t - 1, slack};
}

std::vector<Point> annulus_cover_centers(const ConvexBody& body, const CoveringEstimate& est) {
  const int d = body.dim();
  const int kappa = est.kappa;
  if (kappa < 2) throw std::invalid_argument("estimate has kappa < 2");
  if (std::pow(static_cast<double>(kappa), d) > 2e6)
    throw CapExceeded("annulus cover enumeration too large");
  const bool frame = use_ball_frame(body);
  const double side = (2 + est.slack) * frame_cube_out(body);
  const double h = side / kappa;
  const Point origin(d);
  auto inside_body = [&](const Point& q) {
    if (frame) return norm(q) <= 1 + kGeomTol;
    return body.contains(origin, q);
  };
  std::vector<Point> centers;
  std::vector<int> idx(d, 0);
  while (true) {
    Point c(d);
    for (int a = 0; a < d; ++a) c[a] = -side / 2 + h * (idx[a] + 0.5);
    bool cell_inside = true;
    for (long corner = 0; corner < (1l << d) && cell_inside; ++corner) {
      Point q = c;
      for (int a = 0; a < d; ++a) q[a] += ((corner >> a) & 1 ? h : -h) / 2;
      cell_inside = inside_body(q);
    }
    if (!cell_inside) centers.push_back(frame ? body.from_ball_frame(c) : std::move(c));
    int a = 0;
    while (a < d && ++idx[a] == kappa) idx[a++] = 0;
    if (a == d) break;
  }
  return centers;
}

}  // namespace pierce
