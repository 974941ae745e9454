#include "cliquetop/homology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <map>
#include <tuple>

namespace cliquetop {

namespace {

long long skeleton_rank1(const Complex& x) {
  if (x.vertex_count() == 0) return 0;
  auto comps = x.one_skeleton().components();
  return x.vertex_count() - static_cast<long long>(comps.size());
}

int first_set_bit(const std::vector<uint64_t>& col) {
  for (size_t w = 0; w < col.size(); ++w)
    if (col[w]) return static_cast<int>(w * 64 + std::countr_zero(col[w]));
  return -1;
}

void xor_into(std::vector<uint64_t>& dst, const std::vector<uint64_t>& src) {
  for (size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>(static_cast<__uint128_t>(a) * b % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

Gf2Matrix boundary_matrix_gf2(const Complex& x, int k) {
  Gf2Matrix m;
  m.rows = x.count(k - 1);
  long long cols = x.count(k);
  size_t words = static_cast<size_t>((m.rows + 63) / 64);
  m.cols.assign(cols, std::vector<uint64_t>(words, 0));
  std::vector<int> face(k);
  for (long long j = 0; j < cols; ++j) {
    auto c = x.cell(k, j);
    for (int drop = 0; drop <= k; ++drop) {
      int t = 0;
      for (int i = 0; i <= k; ++i)
        if (i != drop) face[t++] = c[i];
      long long r = x.index_of(k - 1, face);
      m.cols[j][r / 64] ^= uint64_t{1} << (r % 64);
    }
  }
  return m;
}

long long gf2_rank(Gf2Matrix m) {
  std::vector<long long> pivot_owner(m.rows, -1);
  long long rank = 0;
  for (auto& col : m.cols) {
    int p;
    while ((p = first_set_bit(col)) >= 0 && pivot_owner[p] >= 0)
      xor_into(col, m.cols[pivot_owner[p]]);
    if (p >= 0) {
      pivot_owner[p] = &col - m.cols.data();
      ++rank;
    }
  }
  return rank;
}

std::vector<std::vector<long long>> gf2_kernel_basis(const Gf2Matrix& m) {
  long long cols = static_cast<long long>(m.cols.size());
  size_t vwords = static_cast<size_t>((cols + 63) / 64);
  std::vector<std::vector<uint64_t>> work = m.cols;
  std::vector<std::vector<uint64_t>> comb(cols, std::vector<uint64_t>(vwords, 0));
  for (long long j = 0; j < cols; ++j) comb[j][j / 64] = uint64_t{1} << (j % 64);
  std::vector<long long> pivot_owner(m.rows, -1);
  std::vector<std::vector<long long>> kernel;
  for (long long j = 0; j < cols; ++j) {
    int p;
    while ((p = first_set_bit(work[j])) >= 0 && pivot_owner[p] >= 0) {
      xor_into(work[j], work[pivot_owner[p]]);
      xor_into(comb[j], comb[pivot_owner[p]]);
    }
    if (p >= 0) {
      pivot_owner[p] = j;
    } else {
      std::vector<long long> support;
      for (long long i = 0; i < cols; ++i)
        if (comb[j][i / 64] >> (i % 64) & 1) support.push_back(i);
      kernel.push_back(std::move(support));
    }
  }
  return kernel;
}

SparseIntMatrix boundary_matrix(const Complex& x, int k) {
  SparseIntMatrix m;
  m.rows = x.count(k - 1);
  m.cols = x.count(k);
  std::vector<int> face(k);
  for (long long j = 0; j < m.cols; ++j) {
    auto c = x.cell(k, j);
    for (int drop = 0; drop <= k; ++drop) {
      int t = 0;
      for (int i = 0; i <= k; ++i)
        if (i != drop) face[t++] = c[i];
      long long r = x.index_of(k - 1, face);
      m.entries.emplace_back(r, j, drop % 2 == 0 ? 1 : -1);
    }
  }
  return m;
}

long long bareiss_rank(const SparseIntMatrix& m) {
  long long R = m.rows, C = m.cols;
  if (R == 0 || C == 0) return 0;
  std::vector<mpz_class> a(R * C);
  for (auto& [r, c, s] : m.entries) a[r * C + c] += s;
  mpz_class prev = 1, t1, t2;
  long long rank = 0;
  for (long long c = 0; c < C && rank < R; ++c) {
    long long pr = -1;
    for (long long i = rank; i < R; ++i)
      if (a[i * C + c] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != rank)
      for (long long j = c; j < C; ++j) std::swap(a[pr * C + j], a[rank * C + j]);
    mpz_class& piv = a[rank * C + c];
    for (long long i = rank + 1; i < R; ++i) {
      mpz_class& lead = a[i * C + c];
      if (lead == 0) {
        // Still scale the row: a[i][j] = piv * a[i][j] / prev.
        for (long long j = c + 1; j < C; ++j) {
          mpz_class& v = a[i * C + j];
          if (v == 0) continue;
          mpz_mul(t1.get_mpz_t(), piv.get_mpz_t(), v.get_mpz_t());
          mpz_divexact(v.get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
        }
        continue;
      }
      for (long long j = c + 1; j < C; ++j) {
        mpz_class& v = a[i * C + j];
        mpz_mul(t1.get_mpz_t(), piv.get_mpz_t(), v.get_mpz_t());
        mpz_mul(t2.get_mpz_t(), lead.get_mpz_t(), a[rank * C + j].get_mpz_t());
        mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
        mpz_divexact(v.get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      lead = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

long long modular_rank(const SparseIntMatrix& m, uint64_t prime) {
  long long R = m.rows, C = m.cols;
  if (R == 0 || C == 0) return 0;
  std::vector<std::vector<uint64_t>> a(R, std::vector<uint64_t>(C, 0));
  for (auto& [r, c, s] : m.entries) {
    uint64_t add = s >= 0 ? static_cast<uint64_t>(s) : prime - static_cast<uint64_t>(-s) % prime;
    a[r][c] = (a[r][c] + add) % prime;
  }
  long long rank = 0;
  for (long long c = 0; c < C && rank < R; ++c) {
    long long pr = -1;
    for (long long i = rank; i < R; ++i)
      if (a[i][c] % prime) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[pr], a[rank]);
    uint64_t inv = powmod(a[rank][c], prime - 2, prime);
    for (long long i = rank + 1; i < R; ++i) {
      uint64_t lead = a[i][c] % prime;
      if (!lead) continue;
      uint64_t factor = mulmod(lead, inv, prime);
      for (long long j = c; j < C; ++j) {
        uint64_t sub = mulmod(factor, a[rank][j], prime);
        a[i][j] = (a[i][j] + prime - sub) % prime;
      }
    }
    ++rank;
  }
  return rank;
}

long long boundary_rank_gf2(const Complex& x, int k) {
  if (k < 1 || x.count(k) == 0) return 0;
  if (k == 1) return skeleton_rank1(x);
  return gf2_rank(boundary_matrix_gf2(x, k));
}

long long boundary_rank_q(const Complex& x, int k) {
  if (k < 1 || x.count(k) == 0) return 0;
  if (k == 1) return skeleton_rank1(x);
  auto m = boundary_matrix(x, k);
  long long exact = bareiss_rank(m);
  long long ra = modular_rank(m, kRankPrimeA);
  long long rb = modular_rank(m, kRankPrimeB);
  if (exact != ra || exact != rb)
    throw RankUncertainError("boundary rank: elimination and modular ranks disagree");
  return exact;
}

long long boundary_rank_q_fast(const Complex& x, int k) {
  if (k < 1 || x.count(k) == 0) return 0;
  if (k == 1) return skeleton_rank1(x);
  auto m = boundary_matrix(x, k);
  long long ra = modular_rank(m, kRankPrimeA);
  long long rb = modular_rank(m, kRankPrimeB);
  if (ra == rb) return ra;
  long long exact = bareiss_rank(m);
  if (exact != std::max(ra, rb))
    throw RankUncertainError("boundary rank: modular ranks disagree with elimination");
  return exact;
}

namespace {

std::vector<long long> betti_impl(const Complex& x, Field field, bool fast) {
  int dim = x.dimension();
  if (dim < 0) return {};
  std::vector<long long> rank(dim + 2, 0);
  for (int k = 1; k <= dim; ++k) {
    if (field == Field::GF2)
      rank[k] = boundary_rank_gf2(x, k);
    else
      rank[k] = fast ? boundary_rank_q_fast(x, k) : boundary_rank_q(x, k);
  }
  std::vector<long long> b(dim + 1);
  for (int k = 0; k <= dim; ++k) b[k] = x.count(k) - rank[k] - rank[k + 1];
  return b;
}

}  // namespace

std::vector<long long> betti(const Complex& x, Field field) {
  return betti_impl(x, field, false);
}

std::vector<long long> betti_q_fast(const Complex& x) {
  return betti_impl(x, Field::Q, true);
}

std::vector<std::vector<long long>> two_cycle_space(const Complex& x) {
  if (x.count(2) == 0) return {};
  return gf2_kernel_basis(boundary_matrix_gf2(x, 2));
}

bool boundary_squared_is_zero(const Complex& x) {
  for (int k = 2; k <= x.dimension(); ++k) {
    for (long long idx = 0; idx < x.count(k); ++idx) {
      auto c = x.cell(k, idx);
      std::map<std::vector<int>, long long> acc;
      for (int i = 0; i <= k; ++i) {
        std::vector<int> face;
        for (int t = 0; t <= k; ++t)
          if (t != i) face.push_back(c[t]);
        int sign_i = i % 2 == 0 ? 1 : -1;
        for (int j = 0; j <= k - 1; ++j) {
          std::vector<int> sub = face;
          sub.erase(sub.begin() + j);
          acc[sub] += sign_i * (j % 2 == 0 ? 1 : -1);
        }
      }
      for (auto& [sub, coeff] : acc)
        if (coeff != 0) return false;
    }
  }
  return true;
}

}  // namespace cliquetop
