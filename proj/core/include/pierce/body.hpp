#pragma once

#include <variant>
#include <vector>

#include "pierce/common.hpp"
#include "pierce/point.hpp"

namespace pierce {

struct Ball {
  double radius = 1.0;
};

struct AxisBox {
  std::vector<double> half_widths;
};

// {x : x^T Q x <= 1} for SPD Q, stored row-major.
struct Ellipsoid {
  std::vector<std::vector<double>> shape;
};

// Halfspace {x : normal . x <= offset}; stored unit-normalized.
struct Facet {
  Point normal;
  double offset = 1.0;
};

// Facet list must be closed under negation, so the body is origin-symmetric.
struct SymPolytope {
  std::vector<Facet> facets;
};

enum class BodyKind { kBall, kBox, kEllipsoid, kPolytope };

// Origin-symmetric convex body with nonempty interior. Placed copies are
// translates body + center; no rotation or scaling at placement time.
//
// Membership is closed-set with absolute tolerance kGeomTol: balls compare
// center distance against radius + tol, boxes compare per axis, polytopes
// compare signed distance to each facet plane, and ellipsoids compare the
// norm of the point mapped by Q^{1/2} against 1 + tol.
class ConvexBody {
 public:
  static ConvexBody ball(int dim, double radius);
  static ConvexBody box(std::vector<double> half_widths);
  static ConvexBody ellipsoid(std::vector<std::vector<double>> shape);
  static ConvexBody polytope(int dim, std::vector<Facet> facets);

  int dim() const { return dim_; }
  BodyKind kind() const { return static_cast<BodyKind>(shape_.index()); }
  const Ball& as_ball() const { return std::get<Ball>(shape_); }
  const AxisBox& as_box() const { return std::get<AxisBox>(shape_); }
  const Ellipsoid& as_ellipsoid() const { return std::get<Ellipsoid>(shape_); }
  const SymPolytope& as_polytope() const { return std::get<SymPolytope>(shape_); }

  // Membership of p in the translate centered at center.
  bool contains(const Point& center, const Point& p) const {
    return contains_tol(center, p, kGeomTol);
  }
  bool contains_tol(const Point& center, const Point& p, double tol) const;

  double diameter() const { return diameter_; }
  double circumradius() const { return diameter_ / 2; }
  double inradius() const { return inradius_; }

  // Axis-aligned half-extents of the origin-centered body.
  const std::vector<double>& bounding_halfwidths() const { return bhw_; }
  // Side of the smallest enclosing axis-aligned cube.
  double circumscribing_cube_side() const { return cube_out_; }
  // Side of the largest inscribed axis-aligned cube.
  double inscribed_cube_side() const { return cube_in_; }

  // Frame map sending the body to a unit ball for ball-reducible kinds
  // (identity for boxes and polytopes): balls scale by 1/radius, ellipsoids
  // apply Q^{1/2}. from_ball_frame is the inverse.
  Point to_ball_frame(const Point& p) const;
  Point from_ball_frame(const Point& p) const;

  // Polytope vertex list (empty for other kinds).
  const std::vector<Point>& vertices() const { return vertices_; }

 private:
  ConvexBody() = default;
  void finalize();

  int dim_ = 0;
  std::variant<Ball, AxisBox, Ellipsoid, SymPolytope> shape_;
  std::vector<double> bhw_;
  double diameter_ = 0;
  double inradius_ = 0;
  double cube_out_ = 0;
  double cube_in_ = 0;
  std::vector<double> sqrtq_, inv_sqrtq_;  // row-major d x d, ellipsoid only
  std::vector<Point> vertices_;            // polytope only
};

}  // namespace pierce
