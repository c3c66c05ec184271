#ifndef IRSA_RNG_HPP
#define IRSA_RNG_HPP

#include <cstdint>
#include <random>

namespace irsa {

/** All randomness flows through mt19937_64 streams seeded explicitly.
 *  Helpers below bypass std::uniform_*_distribution so that draw
 *  sequences are identical across standard library implementations.
 */
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/** Derive an independent stream seed from a base seed and a salt. */
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
  return splitmix64(base ^ splitmix64(salt));
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  return derive_seed(derive_seed(base, a), b);
}

/** Uniform double in [0,1) with 53 random bits; one engine call. */
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/** Uniform integer in [0,n), n >= 1; unbiased via rejection. */
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t threshold = -n % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % n;
  }
}

}  // namespace irsa

#endif
