#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cliquetop/complex.hpp"

namespace cliquetop {

// Exact rank confirmation failed (modular ranks disagree with each other and
// with elimination). Callers treat the instance as undecided.
struct RankUncertainError : std::runtime_error {
  using runtime_error::runtime_error;
};

enum class Field { GF2, Q };

// Betti numbers b_0..b_dim. GF2 uses packed elimination throughout. Q uses
// dual-prime modular ranks with fraction-free elimination as arbiter when the
// primes disagree; rank of the vertex-edge boundary is v - #components over
// any field and is computed combinatorially.
std::vector<long long> betti(const Complex& x, Field field);

// GF2 boundary matrix of dimension k: rows are (k-1)-cells, columns k-cells,
// column bits packed 64 per word.
struct Gf2Matrix {
  long long rows = 0;
  std::vector<std::vector<uint64_t>> cols;
};
Gf2Matrix boundary_matrix_gf2(const Complex& x, int k);
long long gf2_rank(Gf2Matrix m);  // by value: reduction clobbers columns
std::vector<std::vector<long long>> gf2_kernel_basis(const Gf2Matrix& m);

// Signed boundary matrix as (row, col, sign) triples, sign = (-1)^i for the
// face dropping vertex i.
struct SparseIntMatrix {
  long long rows = 0, cols = 0;
  std::vector<std::tuple<long long, long long, int>> entries;
};
SparseIntMatrix boundary_matrix(const Complex& x, int k);

// Fraction-free (Bareiss) rank over the integers, exact.
long long bareiss_rank(const SparseIntMatrix& m);
// Gaussian elimination rank mod prime (prime < 2^63).
long long modular_rank(const SparseIntMatrix& m, uint64_t prime);

// Rank of the k-th boundary map over Q. Exact runs elimination and demands
// agreement with both primes; fast returns the agreed dual-prime rank and
// falls back to elimination only on disagreement (a modular rank never
// exceeds the rational rank, so ranks meeting a structural ceiling are exact
// either way).
long long boundary_rank_q(const Complex& x, int k);
long long boundary_rank_q_fast(const Complex& x, int k);
long long boundary_rank_gf2(const Complex& x, int k);

// Like betti(x, Field::Q) but with fast ranks; used in per-step loops.
std::vector<long long> betti_q_fast(const Complex& x);

// Basis of the GF2 kernel of the triangle boundary map, each vector given by
// its sorted triangle index support.
std::vector<std::vector<long long>> two_cycle_space(const Complex& x);

// Every (k-2)-face appears an even number of times with cancelling signs in
// the double boundary; test helper.
bool boundary_squared_is_zero(const Complex& x);

inline constexpr uint64_t kRankPrimeA = (uint64_t{1} << 61) - 1;
inline constexpr uint64_t kRankPrimeB = 9223372036854775783ull;

}  // namespace cliquetop
