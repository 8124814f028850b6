#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

namespace pierce {

// Seeded RNG wrapper. std:: distributions are implementation-defined, so all
// draws are derived from the raw mt19937_64 stream to keep identical seeds
// producing identical output across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform index in [0, n); rejection sampling avoids modulo bias.
  std::size_t index(std::size_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t limit = max - max % n;
    std::uint64_t x = eng_();
    while (x >= limit) x = eng_();
    return static_cast<std::size_t>(x % n);
  }

  // Uniform in [0, 1) at 53-bit resolution.
  double real01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double real(double lo, double hi) { return lo + (hi - lo) * real01(); }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[index(i)]);
  }

 private:
  std::mt19937_64 eng_;
};

// splitmix64 finalizer; used to derive independent child seeds from a parent
// seed and a stream label.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t label) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (label + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace pierce
