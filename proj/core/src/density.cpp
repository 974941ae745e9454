#include "cliquetop/density.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace cliquetop {

namespace {

struct Dinic {
  struct Arc {
    int to;
    long long cap;
    int rev;
  };
  std::vector<std::vector<Arc>> adj;
  std::vector<int> level, iter;

  explicit Dinic(int n) : adj(n), level(n), iter(n) {}

  void add_arc(int from, int to, long long cap) {
    adj[from].push_back({to, cap, static_cast<int>(adj[to].size())});
    adj[to].push_back({from, 0, static_cast<int>(adj[from].size()) - 1});
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::queue<int> q;
    level[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const Arc& a : adj[v])
        if (a.cap > 0 && level[a.to] < 0) {
          level[a.to] = level[v] + 1;
          q.push(a.to);
        }
    }
    return level[t] >= 0;
  }

  long long dfs(int v, int t, long long f) {
    if (v == t) return f;
    for (int& i = iter[v]; i < static_cast<int>(adj[v].size()); ++i) {
      Arc& a = adj[v][i];
      if (a.cap > 0 && level[v] < level[a.to]) {
        long long d = dfs(a.to, t, std::min(f, a.cap));
        if (d > 0) {
          a.cap -= d;
          adj[a.to][a.rev].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  long long max_flow(int s, int t) {
    long long flow = 0;
    while (bfs(s, t)) {
      std::fill(iter.begin(), iter.end(), 0);
      while (long long f = dfs(s, t, std::numeric_limits<long long>::max())) flow += f;
    }
    return flow;
  }

  // Source side of the min cut after max_flow.
  std::vector<bool> reachable(int s) {
    std::vector<bool> seen(adj.size(), false);
    std::queue<int> q;
    seen[s] = true;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const Arc& a : adj[v])
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = true;
          q.push(a.to);
        }
    }
    return seen;
  }
};

Rational subset_density(const Graph& g, const std::vector<int>& vs) {
  long long e = 0;
  for (size_t a = 0; a < vs.size(); ++a)
    for (size_t b = a + 1; b < vs.size(); ++b)
      if (g.has_edge(vs[a], vs[b])) ++e;
  return Rational(e, static_cast<long long>(vs.size()));
}

// Is there a nonempty H with e(H)/v(H) > a/b? If so return it.
bool denser_subgraph_than(const Graph& g, long long a, long long b, std::vector<int>* witness) {
  const int n = g.vertex_count();
  const long long m = g.edge_count();
  const int S = 0, T = 1;
  Dinic net(2 + n + static_cast<int>(m));
  const long long inf = b * m + 1;
  for (int v = 0; v < n; ++v) net.add_arc(2 + v, T, a);
  int k = 0;
  for (auto [u, v] : g.edges()) {
    int enode = 2 + n + k++;
    net.add_arc(S, enode, b);
    net.add_arc(enode, 2 + u, inf);
    net.add_arc(enode, 2 + v, inf);
  }
  long long flow = net.max_flow(S, T);
  if (flow >= b * m) return false;
  auto side = net.reachable(S);
  witness->clear();
  for (int v = 0; v < n; ++v)
    if (side[2 + v]) witness->push_back(v);
  return !witness->empty();
}

}  // namespace

DensitySolverResult max_density_subgraph(const Graph& g) {
  if (g.edge_count() == 0) throw EdgelessGraphError();
  const long long n = g.vertex_count();
  DensitySolverResult res;
  res.witness.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) res.witness[v] = v;
  Rational lo(g.edge_count(), n);  // attained by the whole graph
  Rational hi(n - 1 + 2, 2);       // e(H)/v(H) <= (v-1)/2, with slack
  const Rational gap(1, n * n);
  while (hi - lo >= gap) {
    Rational mid = (lo + hi) / 2;
    std::vector<int> w;
    if (denser_subgraph_than(g, mid.numerator(), mid.denominator(), &w)) {
      Rational d = subset_density(g, w);
      // d > mid by construction of the cut
      lo = d;
      res.witness = std::move(w);
    } else {
      hi = mid;
    }
  }
  res.max_density = lo;
  res.attained_by_whole = (lo == Rational(g.edge_count(), n));
  return res;
}

DensitySolverResult brute_force_max_density(const Graph& g) {
  const int n = g.vertex_count();
  if (g.edge_count() == 0) throw EdgelessGraphError();
  if (n > 25) throw std::invalid_argument("brute_force_max_density: n > 25");
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  Rational best(0, 1);
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    long long e = 0;
    std::uint32_t rest = mask;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      e += std::popcount(adj[v] & rest);  // pairs counted once
    }
    Rational d(e, std::popcount(mask));
    if (d > best) {
      best = d;
      best_mask = mask;
    }
  }
  DensitySolverResult res;
  res.max_density = best;
  for (int v = 0; v < n; ++v)
    if ((best_mask >> v) & 1) res.witness.push_back(v);
  res.attained_by_whole = (best == Rational(g.edge_count(), n));
  return res;
}

namespace {

// balanced/strict verdicts for a graph known to have at least one edge
void balance_of(const Graph& g, bool* balanced, bool* strictly) {
  const long long n = g.vertex_count();
  Rational whole(g.edge_count(), n);
  DensitySolverResult r = max_density_subgraph(g);
  *balanced = (r.max_density == whole);
  *strictly = false;
  if (!*balanced) return;
  *strictly = true;
  for (int x = 0; x < g.vertex_count(); ++x) {
    std::vector<int> keep;
    keep.reserve(g.vertex_count() - 1);
    for (int v = 0; v < g.vertex_count(); ++v)
      if (v != x) keep.push_back(v);
    if (keep.empty()) break;
    Graph h = g.induced(keep);
    if (h.edge_count() == 0) continue;  // no dense proper part on this side
    DensitySolverResult rh = max_density_subgraph(h);
    if (rh.max_density >= whole) {
      *strictly = false;
      return;
    }
  }
}

}  // namespace

BalanceReport is_balanced(const Graph& g) {
  if (g.edge_count() == 0) throw EdgelessGraphError();
  BalanceReport rep;
  balance_of(g, &rep.balanced, &rep.strictly_balanced);
  for (const auto& comp : g.components()) {
    ComponentBalance cb;
    cb.vertices = comp;
    Graph h = g.induced(comp);
    cb.has_edges = h.edge_count() > 0;
    if (cb.has_edges) balance_of(h, &cb.balanced, &cb.strictly_balanced);
    rep.components.push_back(std::move(cb));
  }
  return rep;
}

bool brute_force_balanced(const Graph& g, bool* strictly) {
  const int n = g.vertex_count();
  if (g.edge_count() == 0) throw EdgelessGraphError();
  if (n > 25) throw std::invalid_argument("brute_force_balanced: n > 25");
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  Rational whole(g.edge_count(), n);
  bool balanced = true;
  *strictly = true;
  const std::uint32_t full = (n == 32) ? ~0u : (1u << n) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {  // proper nonempty subsets
    long long e = 0;
    std::uint32_t rest = mask;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      e += std::popcount(adj[v] & rest);
    }
    if (e == 0) continue;
    Rational d(e, std::popcount(mask));
    if (d > whole) balanced = false;
    if (d >= whole) *strictly = false;
  }
  if (!balanced) *strictly = false;
  return balanced;
}

}  // namespace cliquetop
