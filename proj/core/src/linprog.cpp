#include "pierce/linprog.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pierce/rng.hpp"

namespace pierce {
namespace {

double row_tol(double b) { return 1e-10 * (1 + std::fabs(b)); }

// Recursive Seidel step. Constraint order is pre-shuffled by the caller at
// each level; each violated constraint projects the problem onto its
// hyperplane, eliminating the variable with the largest coefficient.
std::optional<std::vector<double>> solve(const std::vector<double>& c,
                                         const std::vector<LinConstraint>& cons, double bound,
                                         Rng& rng) {
  const int d = static_cast<int>(c.size());
  if (d == 1) {
    double lo = -bound, hi = bound;
    for (const auto& row : cons) {
      double a = row.a[0];
      if (a > 1e-12)
        hi = std::min(hi, row.b / a);
      else if (a < -1e-12)
        lo = std::max(lo, row.b / a);
      else if (row.b < -row_tol(row.b))
        return std::nullopt;
    }
    if (lo > hi + 1e-9 * (1 + std::fabs(lo))) return std::nullopt;
    double x = c[0] > 0 ? hi : (c[0] < 0 ? lo : std::clamp(0.0, lo, hi));
    return std::vector<double>{x};
  }

  std::vector<int> order(cons.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  rng.shuffle(order);

  std::vector<double> x(d);
  for (int i = 0; i < d; ++i) x[i] = c[i] > 0 ? bound : (c[i] < 0 ? -bound : 0.0);

  std::vector<const LinConstraint*> processed;
  processed.reserve(cons.size());
  for (int oi : order) {
    const LinConstraint& row = cons[static_cast<std::size_t>(oi)];
    double lhs = 0;
    for (int k = 0; k < d; ++k) lhs += row.a[k] * x[k];
    if (lhs <= row.b + row_tol(row.b)) {
      processed.push_back(&row);
      continue;
    }

    int j = 0;
    for (int k = 1; k < d; ++k)
      if (std::fabs(row.a[k]) > std::fabs(row.a[j])) j = k;
    double aj = row.a[j];
    if (std::fabs(aj) < 1e-12) {
      if (row.b < -row_tol(row.b)) return std::nullopt;
      processed.push_back(&row);
      continue;
    }

    // Substitute x_j = (b - sum_{k != j} a_k x_k) / a_j into the objective,
    // the constraints seen so far, and the box rows for x_j.
    auto reduce_row = [&](const std::vector<double>& p, double pj, double q) {
      LinConstraint out;
      out.a.reserve(d - 1);
      for (int k = 0; k < d; ++k)
        if (k != j) out.a.push_back(p.empty() ? -pj * row.a[k] / aj : p[k] - pj * row.a[k] / aj);
      out.b = q - pj * row.b / aj;
      return out;
    };
    std::vector<double> rc;
    rc.reserve(d - 1);
    for (int k = 0; k < d; ++k)
      if (k != j) rc.push_back(c[k] - c[j] * row.a[k] / aj);
    std::vector<LinConstraint> reduced;
    reduced.reserve(processed.size() + 2);
    for (const LinConstraint* p : processed) reduced.push_back(reduce_row(p->a, p->a[j], p->b));
    reduced.push_back(reduce_row({}, 1.0, bound));    // x_j <= bound
    reduced.push_back(reduce_row({}, -1.0, bound));   // -x_j <= bound
    auto sub = solve(rc, reduced, bound, rng);
    if (!sub) return std::nullopt;

    double acc = row.b;
    int r = 0;
    for (int k = 0; k < d; ++k)
      if (k != j) {
        x[k] = (*sub)[r++];
        acc -= row.a[k] * x[k];
      }
    x[j] = acc / aj;
    processed.push_back(&row);
  }
  return x;
}

}  // namespace

std::optional<std::vector<double>> seidel_maximize(const std::vector<double>& objective,
                                                   const std::vector<LinConstraint>& constraints,
                                                   double bound, std::uint64_t seed) {
  if (objective.empty()) throw std::invalid_argument("objective must have at least one variable");
  if (!(bound > 0)) throw std::invalid_argument("variable bound must be positive");
  for (const auto& row : constraints)
    if (row.a.size() != objective.size())
      throw std::invalid_argument("constraint arity does not match objective");
  Rng rng(derive_seed(seed, 0x5e1de1));
  return solve(objective, constraints, bound, rng);
}

}  // namespace pierce
