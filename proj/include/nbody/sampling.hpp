#pragma once

#include <array>
#include <cstdint>

namespace nbody {

// Low-discrepancy Halton points in bases 2, 3, 5. The seed shifts the start
// index, so runs with the same seed are bit-identical and runs with different
// seeds draw from disjoint stretches of the sequence.
inline double halton(std::uint64_t index, std::uint32_t base) {
  double f = 1.0, value = 0.0;
  while (index > 0) {
    f /= base;
    value += f * static_cast<double>(index % base);
    index /= base;
  }
  return value;
}

class HaltonSampler {
 public:
  explicit HaltonSampler(std::uint64_t seed) : offset_(1000 + seed * 7919) {}

  // dim < 3; points are in (0, 1)
  double operator()(std::uint64_t index, int dim) const {
    static constexpr std::array<std::uint32_t, 3> kBases{2, 3, 5};
    return halton(offset_ + index + 1, kBases[static_cast<std::size_t>(dim)]);
  }

 private:
  std::uint64_t offset_;
};

}  // namespace nbody
