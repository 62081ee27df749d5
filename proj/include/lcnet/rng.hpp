#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace lcnet {

// Deterministic splitmix64 generator. std::uniform_int_distribution and
// std::shuffle are implementation-defined, so seeded runs would not be
// reproducible across standard libraries; this keeps every seeded artifact
// byte-stable everywhere.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform-enough draw in [0, n); modulo bias is irrelevant at desk scale.
  int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }

  double unit() { return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0); }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) std::swap(v[i], v[below(i + 1)]);
  }

 private:
  uint64_t state_;
};

}  // namespace lcnet
