#include "pierce/helly.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pierce {
namespace {

void check_d(int d) {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
}

void check_unit(double x, const char* name) {
  if (!(x > 0) || !(x <= 1)) throw std::invalid_argument(std::string(name) + " must be in (0,1]");
}

void check_kt(int k, long long t) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (t < 1) throw std::invalid_argument("t must be >= 1");
}

}  // namespace

long long guarded_count(double x) {
  if (!(x < 4.6e18)) throw std::overflow_error("iteration count overflows");
  double c = std::ceil(x - 1e-9);
  return c < 1 ? 1 : static_cast<long long>(c);
}

double fractional_helly_beta(int d, double alpha) {
  check_d(d);
  check_unit(alpha, "alpha");
  return 1 - std::pow(1 - alpha, 1.0 / (d + 1));
}

double farness_subset_fraction(int d, double epsilon) {
  check_d(d);
  check_unit(epsilon, "epsilon");
  return std::pow(epsilon, d + 1);
}

long long sample_count_1(int d, double epsilon, double delta) {
  check_d(d);
  check_unit(epsilon, "epsilon");
  if (!(delta > 0) || !(delta < 1)) throw std::invalid_argument("delta must be in (0,1)");
  return guarded_count(std::log(1 / delta) / std::pow(epsilon, d + 1));
}

double epsilon_threshold(int k, long long t) {
  check_kt(k, t);
  return 1 - 1.0 / (2.0 * (t + 1) * (k + 1));
}

double witness_density(int k, long long t) {
  check_kt(k, t);
  return std::pow(1 / (2.0 * (t + 1) * (k + 1)), k + 1);
}

long long sample_count_k(int k, long long t, double delta) {
  check_kt(k, t);
  if (!(delta > 0) || !(delta < 1)) throw std::invalid_argument("delta must be in (0,1)");
  return guarded_count(std::log(1 / delta) / witness_density(k, t));
}

PiercingNumber piercing_helly_number(int d, int m) {
  check_d(d);
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (m == 1) return {true, 2};
  if (d == 1) return {true, m + 1};
  if (m == 2) return {true, d % 2 == 1 ? 3ll * d : 3ll * d - 1};
  if (d == 2 && m == 3) return {true, 16};
  return {false, 0};
}

TesterBudget budget_1(int d, double epsilon, double delta) {
  return {sample_count_1(d, epsilon, delta), d + 1, farness_subset_fraction(d, epsilon)};
}

TesterBudget budget_k(int k, long long t, double delta) {
  return {sample_count_k(k, t, delta), k + 1, witness_density(k, t)};
}

}  // namespace pierce
