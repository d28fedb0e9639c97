#pragma once

#include <cstdint>
#include <cmath>
#include <vector>

namespace tabqa {

// Deterministic, platform-independent PRNG (splitmix64 core).
// std::uniform_int_distribution is implementation-defined, so corpora
// generated through it would not be byte-identical across toolchains.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Unbiased integer in [0, n) via rejection sampling.
  uint64_t below(uint64_t n) {
    uint64_t threshold = (0 - n) % n;
    for (;;) {
      uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  int index(int n) { return static_cast<int>(below(static_cast<uint64_t>(n))); }

  // Uniform in [0, 1) with 53 bits of precision.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  bool coin() { return (next_u64() & 1ull) != 0; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  // Independent child stream; used to give each sample its own generator so
  // parallel and serial generation agree.
  Rng fork(uint64_t stream) const {
    Rng child(state_ ^ (0x9e3779b97f4a7c15ull * (stream + 0x51ed2701)));
    child.next_u64();
    return child;
  }

 private:
  uint64_t state_;
};

}  // namespace tabqa
