#pragma once

#include <cstdint>
#include <initializer_list>

namespace graphclust {

/// SplitMix64 finalizer. Used to derive independent streams from (seed, key...) tuples.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Stateless hash of a seed and a sequence of keys. Scheduling-independent randomness
/// for superstep programs is drawn from hash_keys(seed, {vertex, superstep}).
constexpr std::uint64_t hash_keys(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) noexcept {
  std::uint64_t h = mix64(seed);
  for (std::uint64_t k : keys) h = mix64(h ^ mix64(k));
  return h;
}

/// Uniform index in [0, n) from a 64-bit hash (Lemire's multiply-shift).
constexpr std::uint64_t bounded(std::uint64_t hash, std::uint64_t n) noexcept {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(hash) * n) >> 64);
}

}  // namespace graphclust
