#pragma once

// Sampling generator for measurement outcomes. Fixed splitmix64 state update
// so runs are bit-reproducible across implementations; see README for the
// exact recurrence.

#include <cstdint>
#include <vector>

#include "qclearn/numkit.hpp"

namespace qclearn::rng {

class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4B7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1), 53 mantissa bits
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
  std::uint64_t state_;
};

// Samples an index from the Born distribution |psi_i|^2 (normalized by the
// total so roundoff cannot bias the tail).
inline std::size_t sample_outcome(const numkit::CVec& psi, SplitMix64& gen) {
  double total = 0;
  for (const auto& x : psi) total += std::norm(x);
  const double u = gen.next_double() * total;
  double acc = 0;
  for (std::size_t i = 0; i + 1 < psi.size(); ++i) {
    acc += std::norm(psi[i]);
    if (u < acc) return i;
  }
  return psi.size() - 1;
}

}  // namespace qclearn::rng
