#include "cliquetop/gnp.hpp"

#include <cmath>
#include <stdexcept>

namespace cliquetop {

GnpSampler::GnpSampler(int n, double p, std::uint64_t seed) : n_(n), p_(p), seed_(seed) {
  if (n < 0) throw std::invalid_argument("GnpSampler: negative n");
  if (!(p >= 0.0) || !(p <= 1.0)) throw std::invalid_argument("GnpSampler: p outside [0,1]");
  if (p >= 1.0) {
    threshold_ = ~0ull;  // p == 1: every draw passes (draws are never ~0ull + 1)
  } else {
    threshold_ = static_cast<std::uint64_t>(std::ldexp(p, 64));
  }
}

long long GnpSampler::pair_rank(int n, int i, int j) {
  // Rank of (i, j), i < j, in lexicographic order over all pairs.
  long long before = static_cast<long long>(i) * n - static_cast<long long>(i) * (i + 1) / 2;
  return before + (j - i - 1);
}

Graph GnpSampler::sample() const {
  Graph g(n_);
  if (threshold_ == 0) return g;
  long long k = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j, ++k) {
      std::uint64_t draw = mix64(seed_ ^ mix64(static_cast<std::uint64_t>(k) + 1));
      bool present = (threshold_ == ~0ull) ? true : draw < threshold_;
      if (present) g.add_edge(i, j);
    }
  }
  return g;
}

Graph sample_gnp(int n, double p, std::uint64_t seed) { return GnpSampler(n, p, seed).sample(); }

}  // namespace cliquetop
