#include "cliquetop/patterns.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "cliquetop/density.hpp"
#include "cliquetop/fixtures.hpp"
#include "cliquetop/gnp.hpp"
#include "cliquetop/homology.hpp"

namespace cliquetop {

namespace {

// Backtracking subgraph matcher. Pattern vertices are assigned in a static
// order (pinned first, then greedily by number of already-ordered
// neighbors, then by degree); candidates for each vertex come from
// intersecting the host adjacency rows of its placed neighbors.
struct Matcher {
  const Graph& host;
  const Graph& pat;
  long long cap;
  std::chrono::steady_clock::time_point deadline{};
  bool has_deadline = false;

  std::vector<int> order;
  std::vector<std::vector<int>> earlier_nbrs;   // per order position
  std::vector<std::vector<uint64_t>> scratch;   // per-depth candidate words
  std::vector<int> phi;                         // pattern vertex -> host vertex
  std::vector<uint64_t> used;                   // host bitset
  std::function<bool(const std::vector<int>&)> on_match;  // false stops the search

  long long count = 0, nodes = 0;
  bool saturated = false, timed_out = false;

  Matcher(const Graph& h, const Graph& q, long long cap_limit)
      : host(h), pat(q), cap(cap_limit) {
    phi.assign(static_cast<size_t>(pat.vertex_count()), -1);
    used.assign(static_cast<size_t>(host.words_per_row()), 0);
  }

  void pin(int pat_vertex, int host_vertex) {
    phi[static_cast<size_t>(pat_vertex)] = host_vertex;
    used[static_cast<size_t>(host_vertex >> 6)] |= uint64_t{1} << (host_vertex & 63);
  }

  void build_order() {
    int vp = pat.vertex_count();
    std::vector<char> placed(static_cast<size_t>(vp), 0);
    for (int u = 0; u < vp; ++u)
      if (phi[static_cast<size_t>(u)] >= 0) placed[static_cast<size_t>(u)] = 1;
    for (;;) {
      int best = -1;
      long long best_key = -1;
      for (int u = 0; u < vp; ++u) {
        if (placed[static_cast<size_t>(u)]) continue;
        long long anchored = 0;
        for (int w : pat.neighbors(u)) anchored += placed[static_cast<size_t>(w)];
        long long key = anchored * 1024 + pat.degree(u);
        if (key > best_key) {
          best_key = key;
          best = u;
        }
      }
      if (best < 0) break;
      placed[static_cast<size_t>(best)] = 1;
      order.push_back(best);
    }
    earlier_nbrs.resize(order.size());
    std::vector<char> before(static_cast<size_t>(vp), 0);
    for (int u = 0; u < vp; ++u)
      if (phi[static_cast<size_t>(u)] >= 0) before[static_cast<size_t>(u)] = 1;
    for (size_t t = 0; t < order.size(); ++t) {
      for (int w : pat.neighbors(order[t]))
        if (before[static_cast<size_t>(w)]) earlier_nbrs[t].push_back(w);
      before[static_cast<size_t>(order[t])] = 1;
    }
    scratch.assign(order.size(),
                   std::vector<uint64_t>(static_cast<size_t>(host.words_per_row()), 0));
  }

  bool expired() {
    if (!has_deadline || (nodes & 1023) != 0) return false;
    if (std::chrono::steady_clock::now() < deadline) return false;
    timed_out = true;
    return true;
  }

  // Returns false to unwind the whole search.
  bool rec(size_t t) {
    if (t == order.size()) {
      ++count;
      if (on_match && !on_match(phi)) return false;
      if (count >= cap) {
        saturated = true;
        return false;
      }
      return true;
    }
    int u = order[t];
    int words = host.words_per_row();
    int n = host.vertex_count();
    std::vector<uint64_t>& cand = scratch[t];
    std::fill(cand.begin(), cand.end(), ~uint64_t{0});
    if (n & 63) cand[static_cast<size_t>(words - 1)] = (uint64_t{1} << (n & 63)) - 1;
    for (int w = 0; w < words; ++w) cand[static_cast<size_t>(w)] &= ~used[static_cast<size_t>(w)];
    for (int pn : earlier_nbrs[t]) {
      const uint64_t* row = host.row_words(phi[static_cast<size_t>(pn)]);
      for (int w = 0; w < words; ++w) cand[static_cast<size_t>(w)] &= row[w];
    }
    int need = pat.degree(u);
    for (int w = 0; w < words; ++w) {
      uint64_t bits = cand[static_cast<size_t>(w)];
      while (bits) {
        int v = (w << 6) + std::countr_zero(bits);
        bits &= bits - 1;
        if (host.degree(v) < need) continue;
        ++nodes;
        if (expired()) return false;
        phi[static_cast<size_t>(u)] = v;
        used[static_cast<size_t>(w)] |= uint64_t{1} << (v & 63);
        bool go = rec(t + 1);
        used[static_cast<size_t>(w)] &= ~(uint64_t{1} << (v & 63));
        phi[static_cast<size_t>(u)] = -1;
        if (!go) return false;
      }
    }
    return true;
  }
};

EmbeddingCount run_matcher(Matcher& m, std::chrono::nanoseconds budget) {
  if (budget.count() > 0) {
    m.has_deadline = true;
    m.deadline = std::chrono::steady_clock::now() + budget;
  }
  m.build_order();
  m.rec(0);
  EmbeddingCount out;
  out.count = m.count;
  out.saturated = m.saturated;
  out.timed_out = m.timed_out;
  out.nodes = m.nodes;
  return out;
}

}  // namespace

EmbeddingCount count_embeddings(const Graph& host, const Graph& pattern, long long cap,
                                std::chrono::nanoseconds budget) {
  if (cap <= 0) throw std::invalid_argument("count_embeddings: cap must be positive");
  if (pattern.vertex_count() == 0 || pattern.vertex_count() > host.vertex_count()) {
    EmbeddingCount out;
    out.count = pattern.vertex_count() == 0 ? 1 : 0;
    return out;
  }
  Matcher m(host, pattern, cap);
  return run_matcher(m, budget);
}

EmbeddingCount count_embeddings(const Graph& host, const Pattern& pat, long long cap,
                                std::chrono::nanoseconds budget) {
  EmbeddingCount out = count_embeddings(host, pat.complex.one_skeleton(), cap, budget);
  out.pattern = pat.name;
  return out;
}

long long count_embeddings_oracle(const Graph& host, const Graph& pattern) {
  int vp = pattern.vertex_count(), vh = host.vertex_count();
  if (vp == 0) return 1;
  if (vp > vh) return 0;
  std::vector<int> map(static_cast<size_t>(vp), -1);
  std::vector<char> used(static_cast<size_t>(vh), 0);
  long long total = 0;
  std::function<void(int)> rec = [&](int u) {
    if (u == vp) {
      ++total;
      return;
    }
    for (int w = 0; w < vh; ++w) {
      if (used[static_cast<size_t>(w)]) continue;
      bool ok = true;
      for (int x = 0; x < u && ok; ++x)
        if (pattern.has_edge(u, x) && !host.has_edge(w, map[static_cast<size_t>(x)])) ok = false;
      if (!ok) continue;
      map[static_cast<size_t>(u)] = w;
      used[static_cast<size_t>(w)] = 1;
      rec(u + 1);
      used[static_cast<size_t>(w)] = 0;
    }
  };
  rec(0);
  return total;
}

Rational relative_nu(const Complex& s1, const Complex& s2) {
  long long v1 = s1.count(0), e1 = s1.count(1);
  long long v2 = s2.count(0), e2 = s2.count(1);
  if (e1 <= e2) throw std::invalid_argument("relative_nu: needs e(s1) > e(s2)");
  return Rational(v1 - v2, e1 - e2);
}

namespace {

Pattern make_pattern(const std::string& name, const Complex& c, const Rational& declared) {
  if (c.count(1) == 0) throw std::invalid_argument("pattern " + name + " has no edges");
  Pattern p;
  p.name = name;
  p.complex = c;
  p.nu = Rational(c.count(0), c.count(1));
  Graph skel = c.one_skeleton();
  Rational nt = Rational(1) / max_density_subgraph(skel).max_density;
  if (nt != declared)
    throw std::logic_error("pattern " + name + ": declared nu_tilde " + to_string(declared) +
                           " but solver says " + to_string(nt));
  p.nu_tilde = nt;
  p.threshold_exponent = -nt;
  p.automorphisms = count_embeddings(skel, skel, 1'000'000).count;
  return p;
}

const char* validator_for(const std::string& name) {
  if (name == "k3") return "counts_only";
  if (name == "p2") return "projective_plane";
  return "sphere";
}

void run_validator(const std::string& name, const Complex& c, const std::string& validator) {
  auto fail = [&](const std::string& what) {
    throw std::runtime_error("pattern " + name + " failed " + validator + " check: " + what);
  };
  if (validator == "counts_only") return;
  if (validator != "sphere" && validator != "projective_plane")
    throw std::runtime_error("unknown pattern validator: " + validator);
  if (c.dimension() != 2 || !(c.pure_part(2) == c)) fail("not a pure 2-complex");
  for (int d : c.edge_triangle_degrees())
    if (d != 2) fail("edge degree != 2");
  auto b2 = betti(c, Field::GF2);
  auto bq = betti(c, Field::Q);
  if (validator == "sphere") {
    if (bq != std::vector<long long>{1, 0, 1} || b2 != std::vector<long long>{1, 0, 1})
      fail("betti mismatch");
  } else {
    if (bq != std::vector<long long>{1, 0, 0} || b2 != std::vector<long long>{1, 1, 1})
      fail("betti mismatch");
  }
}

Rational parse_rational(const std::string& s) {
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::runtime_error("bad rational in pattern registry: " + s);
  }
}

}  // namespace

const std::vector<Pattern>& builtin_patterns() {
  static const std::vector<Pattern> pats = [] {
    std::vector<Pattern> v;
    v.push_back(make_pattern("k3", Complex::from_cells({{0, 1, 2}}), Rational(1)));
    v.push_back(make_pattern("k4", sphere_tetra(), Rational(2, 3)));
    v.push_back(make_pattern("s2", sphere_bipyramid(), Rational(5, 9)));
    v.push_back(make_pattern("p2", p2_clean_11(), Rational(11, 30)));
    return v;
  }();
  return pats;
}

const Pattern& pattern_by_name(const std::string& name) {
  for (const Pattern& p : builtin_patterns())
    if (p.name == name) return p;
  throw std::invalid_argument("unknown pattern " + name + " (known: k3, k4, s2, p2)");
}

void write_pattern_files(const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::ofstream reg(fs::path(dir) / "patterns.txt");
  if (!reg) throw std::runtime_error("cannot write pattern registry in " + dir);
  reg << "# name path nu_tilde validator\n";
  for (const Pattern& p : builtin_patterns()) {
    std::string file = p.name + ".cells";
    save_complex((fs::path(dir) / file).string(), p.complex);
    reg << p.name << ' ' << file << ' ' << to_string(p.nu_tilde) << ' '
        << validator_for(p.name) << '\n';
  }
}

std::vector<Pattern> load_pattern_registry(const std::string& registry_path) {
  namespace fs = std::filesystem;
  std::ifstream in(registry_path);
  if (!in) throw std::runtime_error("cannot open pattern registry: " + registry_path);
  fs::path base = fs::path(registry_path).parent_path();
  std::vector<Pattern> out;
  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream iss(line);
    std::string name, file, nt_str, validator;
    if (!(iss >> name)) continue;
    if (!(iss >> file >> nt_str >> validator))
      throw std::runtime_error("pattern registry line " + std::to_string(line_no) +
                               ": expected 'name path nu_tilde validator'");
    fs::path cells = fs::path(file).is_absolute() ? fs::path(file) : base / file;
    Complex c = load_complex(cells.string());
    run_validator(name, c, validator);
    out.push_back(make_pattern(name, c, parse_rational(nt_str)));
  }
  return out;
}

CountComparisonSummary count_comparison_experiment(const PatternPair& pair, int n, double alpha,
                                                   int trials, uint64_t base_seed,
                                                   long long count_cap) {
  const Complex& s1 = pair.outer.complex;
  const Complex& s2 = pair.inner.complex;
  Graph outer_g = s1.one_skeleton();
  Graph inner_g = s2.one_skeleton();
  long long v2 = s2.count(0);
  if (static_cast<long long>(pair.inner_to_outer.size()) != v2)
    throw std::invalid_argument("count comparison: inner_to_outer size != inner vertex count");
  std::vector<int> pin_idx(static_cast<size_t>(v2));
  for (long long i = 0; i < v2; ++i) {
    long long idx = s1.vertex_index(pair.inner_to_outer[static_cast<size_t>(i)]);
    if (idx < 0) throw std::invalid_argument("count comparison: mapped label not in outer");
    pin_idx[static_cast<size_t>(i)] = static_cast<int>(idx);
  }
  for (auto [a, b] : inner_g.edges())
    if (!outer_g.has_edge(pin_idx[static_cast<size_t>(a)], pin_idx[static_cast<size_t>(b)]))
      throw std::invalid_argument("count comparison: inner edge not mapped onto an outer edge");

  CountComparisonSummary sum;
  sum.trials = trials;
  double p = std::pow(static_cast<double>(n), alpha);
  Rational rel = relative_nu(s1, s2);
  sum.alpha_in_sandwich =
      alpha > -to_double(pair.inner.nu_tilde) && alpha < -to_double(rel);
  sum.expected_ratio = std::pow(static_cast<double>(n), static_cast<double>(s1.count(0) - v2)) *
                       std::pow(p, static_cast<double>(s1.count(1) - s2.count(1)));

  // Outer edges between pinned images must be present in the host before an
  // inner embedding can extend.
  std::vector<std::pair<int, int>> pinned_extra;
  for (auto [a, b] : outer_g.edges()) {
    int ia = -1, ib = -1;
    for (long long i = 0; i < v2; ++i) {
      if (pin_idx[static_cast<size_t>(i)] == a) ia = static_cast<int>(i);
      if (pin_idx[static_cast<size_t>(i)] == b) ib = static_cast<int>(i);
    }
    if (ia >= 0 && ib >= 0 && !inner_g.has_edge(ia, ib)) pinned_extra.push_back({ia, ib});
  }

  for (int t = 0; t < trials; ++t) {
    uint64_t seed = mix64(mix64(mix64(base_seed ^ 0x636f6d70617265ull) ^
                                static_cast<uint64_t>(n)) ^
                          static_cast<uint64_t>(t));
    Graph g = sample_gnp(n, p, seed);
    EmbeddingCount t1 = count_embeddings(g, outer_g, count_cap);
    EmbeddingCount t2 = count_embeddings(g, inner_g, count_cap);
    if (t1.count < t2.count) ++sum.outer_fewer;
    if (t2.count == 0) {
      ++sum.inner_absent;
      continue;
    }
    bool found_stuck = false;
    if (t1.count == 0) {
      found_stuck = true;  // some inner embedding exists, no outer one at all
    } else {
      Matcher inner_m(g, inner_g, count_cap);
      inner_m.on_match = [&](const std::vector<int>& phi) {
        bool extends = true;
        for (auto [ia, ib] : pinned_extra)
          if (!g.has_edge(phi[static_cast<size_t>(ia)], phi[static_cast<size_t>(ib)]))
            extends = false;
        if (extends) {
          Matcher ext(g, outer_g, 1);
          for (long long i = 0; i < v2; ++i)
            ext.pin(pin_idx[static_cast<size_t>(i)], phi[static_cast<size_t>(i)]);
          ext.build_order();
          ext.rec(0);
          extends = ext.count > 0;
        }
        if (!extends) found_stuck = true;
        return extends;  // first stuck embedding stops the scan
      };
      run_matcher(inner_m, std::chrono::nanoseconds{0});
    }
    if (found_stuck) ++sum.non_extendable;
  }
  return sum;
}

}  // namespace cliquetop
