#pragma once

#include <cmath>
#include <cstdint>

namespace inksyn {

// splitmix64 stream. All randomness in the project flows through this class so
// that seeded runs are reproducible independent of the platform's <random>
// distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // standard normal via Box-Muller; no spare caching so the consumed stream
  // length per call is fixed
  double normal() {
    double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
  }

  // uniform integer in [0, n), n > 0
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * static_cast<unsigned __int128>(n)) >> 64);
  }

  // independent substream; forks of the same parent with distinct ids do not
  // overlap in practice
  Rng fork(std::uint64_t stream) const {
    Rng r(seed_ ^ (0xD1B54A32D192ED03ull * (stream + 1)) ^ 0x8CB92BA72F3D8DD7ull);
    r.next_u64();
    return r;
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  Rng r = Rng(seed).fork(stream);
  return r.next_u64();
}

}  // namespace inksyn
