#ifndef WSNSIM_RNG_HPP
#define WSNSIM_RNG_HPP

#include <cstdint>
#include <random>

namespace wsnsim {

// Stream ids derived from a run's master seed.
inline constexpr std::uint64_t kDeploymentStream = 0;
inline constexpr std::uint64_t kProtocolStream = 1;

/**
 * Seedable random stream.
 *
 * Wraps mt19937_64 and converts raw draws itself, so sequences do not depend
 * on the standard library's distribution implementations. Independent
 * streams are derived from a master seed through std::seed_seq, whose output
 * is fully specified by the standard.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Stream `stream` of master seed `seed`.
  static Rng derive(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32)};
    Rng rng(0);
    rng.engine_.seed(seq);
    return rng;
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, n), n > 0. Unbiased (rejection sampling).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t draw = engine_();
    while (draw >= limit) draw = engine_();
    return draw % n;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace wsnsim

#endif  // WSNSIM_RNG_HPP
