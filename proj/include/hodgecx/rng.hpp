#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hodgecx {

// Deterministic splitmix64 generator. Seeds fully determine every generated
// instance, independent of platform or standard-library implementation.
class DetRng {
 public:
  explicit DetRng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi], inclusive.
  int uniform(int lo, int hi) {
    if (hi < lo) throw std::invalid_argument("DetRng: empty range");
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next() % span);
  }

  bool coin(int num = 1, int den = 2) { return uniform(1, den) <= num; }

  template <class T>
  const T& pick(const std::vector<T>& xs) {
    if (xs.empty()) throw std::invalid_argument("DetRng: pick from empty");
    return xs[static_cast<size_t>(uniform(0, static_cast<int>(xs.size()) - 1))];
  }

  template <class T>
  void shuffle(std::vector<T>& xs) {
    for (int i = static_cast<int>(xs.size()) - 1; i > 0; --i) {
      int j = uniform(0, i);
      std::swap(xs[static_cast<size_t>(i)], xs[static_cast<size_t>(j)]);
    }
  }

 private:
  uint64_t state_;
};

}  // namespace hodgecx
