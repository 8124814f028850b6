#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pierce {

// Point in R^d; the dimension is the coordinate count.
struct Point {
  std::vector<double> coords;

  Point() = default;
  explicit Point(std::vector<double> c) : coords(std::move(c)) {}
  Point(std::initializer_list<double> c) : coords(c) {}
  explicit Point(int d) : coords(static_cast<std::size_t>(d), 0.0) {}

  int dim() const { return static_cast<int>(coords.size()); }
  double& operator[](std::size_t i) { return coords[i]; }
  double operator[](std::size_t i) const { return coords[i]; }

  bool operator==(const Point&) const = default;
};

inline Point operator+(const Point& a, const Point& b) {
  Point r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

inline Point operator-(const Point& a, const Point& b) {
  Point r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

inline Point operator*(double s, const Point& a) {
  Point r = a;
  for (double& c : r.coords) c *= s;
  return r;
}

inline double dot(const Point& a, const Point& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) s += a.coords[i] * b.coords[i];
  return s;
}

inline double norm2(const Point& a) { return dot(a, a); }
inline double norm(const Point& a) { return std::sqrt(norm2(a)); }

inline double dist2(const Point& a, const Point& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    double d = a.coords[i] - b.coords[i];
    s += d * d;
  }
  return s;
}

inline double dist(const Point& a, const Point& b) { return std::sqrt(dist2(a, b)); }

inline bool all_finite(const Point& a) {
  for (double c : a.coords)
    if (!std::isfinite(c)) return false;
  return true;
}

inline void require_dim(const Point& p, int d, const char* what = "point") {
  if (p.dim() != d)
    throw std::invalid_argument(std::string(what) + " has dimension " +
                                std::to_string(p.dim()) + ", expected " + std::to_string(d));
}

// Finite point list with a fixed common dimension.
struct PointSet {
  int dim = 0;
  std::vector<Point> points;

  PointSet() = default;
  PointSet(int d, std::vector<Point> pts) : dim(d), points(std::move(pts)) {}

  std::size_t size() const { return points.size(); }
  const Point& operator[](std::size_t i) const { return points[i]; }
  Point& operator[](std::size_t i) { return points[i]; }

  void validate() const {
    if (dim < 1) throw std::invalid_argument("point set dimension must be >= 1");
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (points[i].dim() != dim)
        throw std::invalid_argument("point " + std::to_string(i) + " has dimension " +
                                    std::to_string(points[i].dim()) + ", expected " +
                                    std::to_string(dim));
      if (!all_finite(points[i]))
        throw std::invalid_argument("point " + std::to_string(i) + " has non-finite coordinate");
    }
  }
};

}  // namespace pierce
