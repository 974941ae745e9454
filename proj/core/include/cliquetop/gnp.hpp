#pragma once

#include <cstdint>

#include "cliquetop/graph.hpp"

namespace cliquetop {

// Counter-mode 64-bit mixer (splitmix64 finalizer). Used everywhere a
// reproducible stream is needed; identical inputs give identical outputs on
// every platform.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// G(n, p) sampler. Edge k in the lexicographic order over pairs (i, j),
// i < j, is present iff mix64(seed ^ mix64(k + 1)) < floor(p * 2^64).
// The threshold is exact for p in [0, 1): a double has a 53-bit mantissa and
// scaling by 2^64 only shifts the exponent, so the comparison is
// bit-reproducible.
class GnpSampler {
 public:
  GnpSampler(int n, double p, std::uint64_t seed);

  Graph sample() const;

  static long long pair_rank(int n, int i, int j);

 private:
  int n_;
  double p_;
  std::uint64_t seed_;
  std::uint64_t threshold_;
};

Graph sample_gnp(int n, double p, std::uint64_t seed);

}  // namespace cliquetop
