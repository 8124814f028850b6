#pragma once

#include <vector>

#include "pierce/body.hpp"

namespace pierce {

// Annulus covering number: t = kappa^d - 1 translates of the body suffice to
// cover (2+slack)*body minus the body's interior, where kappa is the ratio of
// the circumscribing cube of the scaled body to the body's inscribed cube,
// rounded up (and up to odd, so the grid's middle cell sits inside the body).
// Cubes are axis-aligned in the body's native frame; ellipsoids are measured
// in the frame where they are unit balls.
struct CoveringEstimate {
  int kappa = 0;
  long long t = 0;
  double slack = 0;
};

CoveringEstimate covering_t(const ConvexBody& body, double slack);

// Explicit certificate for the estimate: centers of the grid cells of the
// circumscribing cube of (2+slack)*body, minus cells contained in the body.
// Every point of the annulus lies in some returned center's translate (each
// kept cell has side at most the inscribed cube's). At most t centers.
std::vector<Point> annulus_cover_centers(const ConvexBody& body, const CoveringEstimate& est);

}  // namespace pierce
