#include "pierce/body.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pierce {
namespace {

// Gaussian elimination with partial pivoting; false when a pivot falls below tol.
bool solve_linear(std::vector<double> a, std::vector<double> rhs, int d,
                  std::vector<double>& out, double pivot_tol) {
  for (int col = 0; col < d; ++col) {
    int piv = col;
    for (int r = col + 1; r < d; ++r)
      if (std::fabs(a[r * d + col]) > std::fabs(a[piv * d + col])) piv = r;
    if (std::fabs(a[piv * d + col]) < pivot_tol) return false;
    if (piv != col) {
      for (int c = 0; c < d; ++c) std::swap(a[col * d + c], a[piv * d + c]);
      std::swap(rhs[col], rhs[piv]);
    }
    for (int r = col + 1; r < d; ++r) {
      double f = a[r * d + col] / a[col * d + col];
      for (int c = col; c < d; ++c) a[r * d + c] -= f * a[col * d + c];
      rhs[r] -= f * rhs[col];
    }
  }
  out.assign(d, 0.0);
  for (int r = d - 1; r >= 0; --r) {
    double s = rhs[r];
    for (int c = r + 1; c < d; ++c) s -= a[r * d + c] * out[c];
    out[r] = s / a[r * d + r];
  }
  return true;
}

int matrix_rank(std::vector<double> a, int rows, int cols, double tol) {
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = rank;
    for (int r = rank + 1; r < rows; ++r)
      if (std::fabs(a[r * cols + col]) > std::fabs(a[piv * cols + col])) piv = r;
    if (std::fabs(a[piv * cols + col]) < tol) continue;
    for (int c = 0; c < cols; ++c) std::swap(a[rank * cols + c], a[piv * cols + c]);
    for (int r = rank + 1; r < rows; ++r) {
      double f = a[r * cols + col] / a[rank * cols + col];
      for (int c = col; c < cols; ++c) a[r * cols + c] -= f * a[rank * cols + c];
    }
    ++rank;
  }
  return rank;
}

Point matvec(const std::vector<double>& m, const Point& p, int d) {
  Point r(d);
  for (int i = 0; i < d; ++i) {
    double s = 0;
    for (int j = 0; j < d; ++j) s += m[i * d + j] * p[j];
    r[i] = s;
  }
  return r;
}

}  // namespace

ConvexBody ConvexBody::ball(int dim, double radius) {
  ConvexBody b;
  b.dim_ = dim;
  b.shape_ = Ball{radius};
  b.finalize();
  return b;
}

ConvexBody ConvexBody::box(std::vector<double> half_widths) {
  ConvexBody b;
  b.dim_ = static_cast<int>(half_widths.size());
  b.shape_ = AxisBox{std::move(half_widths)};
  b.finalize();
  return b;
}

ConvexBody ConvexBody::ellipsoid(std::vector<std::vector<double>> shape) {
  ConvexBody b;
  b.dim_ = static_cast<int>(shape.size());
  b.shape_ = Ellipsoid{std::move(shape)};
  b.finalize();
  return b;
}

ConvexBody ConvexBody::polytope(int dim, std::vector<Facet> facets) {
  ConvexBody b;
  b.dim_ = dim;
  b.shape_ = SymPolytope{std::move(facets)};
  b.finalize();
  return b;
}

void ConvexBody::finalize() {
  if (dim_ < 1) throw std::invalid_argument("body dimension must be >= 1");
  switch (kind()) {
    case BodyKind::kBall: {
      double r = as_ball().radius;
      if (!std::isfinite(r) || r <= 0)
        throw std::invalid_argument("ball radius must be positive and finite");
      bhw_.assign(dim_, r);
      diameter_ = 2 * r;
      inradius_ = r;
      cube_out_ = 2 * r;
      cube_in_ = 2 * r / std::sqrt(static_cast<double>(dim_));
      break;
    }
    case BodyKind::kBox: {
      const auto& w = as_box().half_widths;
      if (w.empty()) throw std::invalid_argument("box needs at least one half width");
      double s2 = 0;
      for (double wi : w) {
        if (!std::isfinite(wi) || wi <= 0)
          throw std::invalid_argument("box half widths must be positive and finite");
        s2 += wi * wi;
      }
      bhw_ = w;
      diameter_ = 2 * std::sqrt(s2);
      inradius_ = *std::min_element(w.begin(), w.end());
      cube_in_ = 2 * inradius_;
      cube_out_ = 2 * *std::max_element(w.begin(), w.end());
      break;
    }
    case BodyKind::kEllipsoid: {
      const auto& q = as_ellipsoid().shape;
      const int d = dim_;
      Eigen::MatrixXd m(d, d);
      for (int i = 0; i < d; ++i) {
        if (static_cast<int>(q[i].size()) != d)
          throw std::invalid_argument("ellipsoid shape matrix must be square");
        for (int j = 0; j < d; ++j) {
          if (!std::isfinite(q[i][j]))
            throw std::invalid_argument("ellipsoid shape matrix has non-finite entry");
          m(i, j) = q[i][j];
        }
      }
      double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
      if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale)
        throw std::invalid_argument("ellipsoid shape matrix must be symmetric");
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
      Eigen::VectorXd lam = es.eigenvalues();
      double lmin = lam(0), lmax = lam(d - 1);
      if (lmin <= 1e-12 * std::max(1.0, lmax))
        throw std::invalid_argument("ellipsoid shape matrix must be positive definite");
      const Eigen::MatrixXd& v = es.eigenvectors();
      Eigen::MatrixXd sq = v * lam.cwiseSqrt().asDiagonal() * v.transpose();
      Eigen::MatrixXd isq = v * lam.cwiseSqrt().cwiseInverse().asDiagonal() * v.transpose();
      sqrtq_.resize(d * d);
      inv_sqrtq_.resize(d * d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          sqrtq_[i * d + j] = sq(i, j);
          inv_sqrtq_[i * d + j] = isq(i, j);
        }
      bhw_.resize(d);
      for (int j = 0; j < d; ++j) {
        double s = 0;
        for (int k = 0; k < d; ++k) s += v(j, k) * v(j, k) / lam(k);
        bhw_[j] = std::sqrt(s);
      }
      diameter_ = 2 / std::sqrt(lmin);
      inradius_ = 1 / std::sqrt(lmax);
      if (d <= 20) {
        // Largest axis-aligned cube [-c, c]^d: worst corner direction maximizes
        // s^T Q s over sign vectors s, and (cs)^T Q (cs) <= 1 bounds c.
        double worst = 0;
        Eigen::VectorXd s(d);
        for (long mask = 0; mask < (1l << (d - 1)); ++mask) {
          s(0) = 1;
          for (int j = 1; j < d; ++j) s(j) = (mask >> (j - 1)) & 1 ? 1.0 : -1.0;
          worst = std::max(worst, s.dot(m * s));
        }
        cube_in_ = 2 / std::sqrt(worst);
      } else {
        cube_in_ = 2 * inradius_ / std::sqrt(static_cast<double>(d));
      }
      cube_out_ = 2 * *std::max_element(bhw_.begin(), bhw_.end());
      break;
    }
    case BodyKind::kPolytope: {
      auto& poly = std::get<SymPolytope>(shape_);
      const int d = dim_;
      const int f = static_cast<int>(poly.facets.size());
      if (f == 0) throw std::invalid_argument("polytope needs at least one facet");
      for (auto& fc : poly.facets) {
        require_dim(fc.normal, d, "facet normal");
        if (!all_finite(fc.normal) || !std::isfinite(fc.offset))
          throw std::invalid_argument("facet has non-finite entry");
        double n = norm(fc.normal);
        if (n < 1e-12) throw std::invalid_argument("facet normal must be nonzero");
        fc.normal = (1 / n) * fc.normal;
        fc.offset /= n;
        if (fc.offset <= 0)
          throw std::invalid_argument("facet offset must be positive (origin interior)");
      }
      for (int i = 0; i < f; ++i) {
        bool paired = false;
        for (int j = 0; j < f && !paired; ++j) {
          double mx = 0;
          for (int c = 0; c < d; ++c)
            mx = std::max(mx, std::fabs(poly.facets[i].normal[c] + poly.facets[j].normal[c]));
          paired = mx <= 1e-9 && std::fabs(poly.facets[i].offset - poly.facets[j].offset) <= 1e-9;
        }
        if (!paired)
          throw std::invalid_argument("polytope facet list must be closed under negation");
      }
      std::vector<double> normals(static_cast<std::size_t>(f) * d);
      for (int i = 0; i < f; ++i)
        for (int c = 0; c < d; ++c) normals[i * d + c] = poly.facets[i].normal[c];
      if (matrix_rank(normals, f, d, 1e-9) < d)
        throw std::invalid_argument("polytope is unbounded (facet normals do not span)");

      double combos = 1;
      for (int i = 0; i < d; ++i) combos *= static_cast<double>(f - i) / (i + 1);
      if (combos > 2e6) throw CapExceeded("polytope vertex enumeration over work cap");
      std::vector<int> idx(d);
      for (int i = 0; i < d; ++i) idx[i] = i;
      std::vector<double> a(static_cast<std::size_t>(d) * d), rhs(d), x;
      while (true) {
        for (int r = 0; r < d; ++r) {
          for (int c = 0; c < d; ++c) a[r * d + c] = poly.facets[idx[r]].normal[c];
          rhs[r] = poly.facets[idx[r]].offset;
        }
        if (solve_linear(a, rhs, d, x, 1e-9)) {
          Point v(x);
          bool inside = true;
          for (const auto& fc : poly.facets)
            if (dot(fc.normal, v) > fc.offset + 1e-7) {
              inside = false;
              break;
            }
          if (inside && all_finite(v)) {
            bool dup = false;
            for (const auto& u : vertices_) {
              double mx = 0;
              for (int c = 0; c < d; ++c) mx = std::max(mx, std::fabs(u[c] - v[c]));
              if (mx <= 1e-7) {
                dup = true;
                break;
              }
            }
            if (!dup) vertices_.push_back(std::move(v));
          }
        }
        int pos = d - 1;
        while (pos >= 0 && idx[pos] == f - d + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int c = pos + 1; c < d; ++c) idx[c] = idx[c - 1] + 1;
      }
      if (vertices_.empty())
        throw std::invalid_argument("polytope has no vertices (degenerate facet set)");

      bhw_.assign(d, 0.0);
      double rmax = 0;
      for (const auto& v : vertices_) {
        rmax = std::max(rmax, norm(v));
        for (int c = 0; c < d; ++c) bhw_[c] = std::max(bhw_[c], std::fabs(v[c]));
      }
      diameter_ = 2 * rmax;
      inradius_ = poly.facets[0].offset;
      double cin = std::numeric_limits<double>::infinity();
      for (const auto& fc : poly.facets) {
        double l1 = 0;
        for (int c = 0; c < d; ++c) l1 += std::fabs(fc.normal[c]);
        inradius_ = std::min(inradius_, fc.offset);
        cin = std::min(cin, fc.offset / l1);
      }
      cube_in_ = 2 * cin;
      cube_out_ = 2 * *std::max_element(bhw_.begin(), bhw_.end());
      break;
    }
  }
}

bool ConvexBody::contains_tol(const Point& center, const Point& p, double tol) const {
  require_dim(center, dim_, "center");
  require_dim(p, dim_, "point");
  switch (kind()) {
    case BodyKind::kBall:
      return dist(p, center) <= as_ball().radius + tol;
    case BodyKind::kBox: {
      const auto& w = as_box().half_widths;
      for (int c = 0; c < dim_; ++c)
        if (std::fabs(p[c] - center[c]) > w[c] + tol) return false;
      return true;
    }
    case BodyKind::kEllipsoid:
      return norm(matvec(sqrtq_, p - center, dim_)) <= 1 + tol;
    case BodyKind::kPolytope: {
      Point delta = p - center;
      for (const auto& fc : as_polytope().facets)
        if (dot(fc.normal, delta) > fc.offset + tol) return false;
      return true;
    }
  }
  return false;
}

Point ConvexBody::to_ball_frame(const Point& p) const {
  switch (kind()) {
    case BodyKind::kBall:
      return (1 / as_ball().radius) * p;
    case BodyKind::kEllipsoid:
      return matvec(sqrtq_, p, dim_);
    default:
      return p;
  }
}

Point ConvexBody::from_ball_frame(const Point& p) const {
  switch (kind()) {
    case BodyKind::kBall:
      return as_ball().radius * p;
    case BodyKind::kEllipsoid:
      return matvec(inv_sqrtq_, p, dim_);
    default:
      return p;
  }
}

}  // namespace pierce
