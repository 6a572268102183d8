#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace lvelab {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/* xoshiro256++ with splitmix64 seeding; self-contained so that streams are
   bit-identical across platforms and standard library versions. */
class Rng {
public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
    have_gauss_ = false;
    gauss_ = 0.0;
  }

  /* Derives an independent stream for a worker chunk. */
  static Rng for_chunk(std::uint64_t seed, std::uint64_t chunk) {
    std::uint64_t sm = seed ^ (0x632be59bd9b4e019ULL * (chunk + 1));
    return Rng(splitmix64(sm));
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /* Uniform in [0,1) with 53 bits. */
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /* Uniform in (0,1], safe for logarithms. */
  double uniform_pos() { return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53; }

  /* Standard normal via Box-Muller. */
  double gaussian() {
    if (have_gauss_) {
      have_gauss_ = false;
      return gauss_;
    }
    double u1 = uniform_pos();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    gauss_ = r * std::sin(a);
    have_gauss_ = true;
    return r * std::cos(a);
  }

  /* Complex normal with unit total variance: Re,Im ~ N(0, 1/2). */
  std::complex<double> complex_gaussian() {
    const double inv_sqrt2 = 0.70710678118654752440;
    return {gaussian() * inv_sqrt2, gaussian() * inv_sqrt2};
  }

private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t s_[4];
  bool have_gauss_;
  double gauss_;
};

}  // namespace lvelab
