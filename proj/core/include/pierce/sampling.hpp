#pragma once

#include <atomic>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include "pierce/point.hpp"

namespace pierce {

// Random-access view of the input point set: the black-box model all testers
// and samplers read through. get must be deterministic per index and safe to
// call concurrently.
class SampleSource {
 public:
  virtual ~SampleSource() = default;
  virtual std::size_t size() const = 0;
  virtual int dim() const = 0;
  virtual Point get(std::size_t i) const = 0;
};

class VectorSource final : public SampleSource {
 public:
  explicit VectorSource(PointSet data) : data_(std::move(data)) { data_.validate(); }

  std::size_t size() const override { return data_.size(); }
  int dim() const override { return data_.dim; }
  Point get(std::size_t i) const override {
    if (i >= data_.size()) throw std::out_of_range("sample index out of range");
    return data_.points[i];
  }

 private:
  PointSet data_;
};

// Wrapper counting get calls, for query-complexity assertions.
class CountingSource final : public SampleSource {
 public:
  explicit CountingSource(const SampleSource& inner) : inner_(inner) {}

  std::size_t size() const override { return inner_.size(); }
  int dim() const override { return inner_.dim(); }
  Point get(std::size_t i) const override {
    reads_.fetch_add(1, std::memory_order_relaxed);
    return inner_.get(i);
  }
  long long reads() const { return reads_.load(std::memory_order_relaxed); }

 private:
  const SampleSource& inner_;
  mutable std::atomic<long long> reads_{0};
};

}  // namespace pierce
