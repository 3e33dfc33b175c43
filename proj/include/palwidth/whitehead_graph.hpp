#ifndef PALWIDTH_WHITEHEAD_GRAPH_HPP
#define PALWIDTH_WHITEHEAD_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "palwidth/cyclic.hpp"
#include "palwidth/word.hpp"

namespace palwidth {

/// Simplified Whitehead graph of a linear word.
///
/// Vertices are the 2n letters, numbered by Letter::index(). Each length-2
/// subword ab contributes the edge {a, b^-1}. Edges form a set; loops cannot
/// occur because ab reduced means b != a^-1.
class WhiteheadGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;  // first < second

  explicit WhiteheadGraph(std::size_t rank) : rank_(rank), adj_(2 * rank) {
    if (rank == 0) throw RankError("rank must be at least 1");
  }

  /// Adds {u, v}. Vertex indices must be distinct and below 2 * rank.
  void add_edge(std::size_t u, std::size_t v) {
    if (u == v) throw PreconditionError("Whitehead graph has no loops");
    if (u >= vertex_count() || v >= vertex_count()) {
      throw RankError("edge endpoint outside the 2n letters");
    }
    if (u > v) std::swap(u, v);
    if (edges_.insert({u, v}).second) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
  }

  [[nodiscard]] std::size_t rank() const { return rank_; }
  [[nodiscard]] std::size_t vertex_count() const { return 2 * rank_; }
  [[nodiscard]] const std::set<Edge>& edges() const { return edges_; }
  [[nodiscard]] const std::vector<std::size_t>& neighbors(std::size_t v) const {
    return adj_[v];
  }
  [[nodiscard]] bool has_edge(std::size_t u, std::size_t v) const {
    if (u > v) std::swap(u, v);
    return edges_.contains({u, v});
  }

  bool operator==(const WhiteheadGraph& o) const {
    return rank_ == o.rank_ && edges_ == o.edges_;
  }

 private:
  std::size_t rank_;
  std::set<Edge> edges_;
  std::vector<std::vector<std::size_t>> adj_;
};

inline WhiteheadGraph whitehead_graph(const Word& w) {
  WhiteheadGraph g(w.rank());
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    g.add_edge(w[i].index(), w[i + 1].inverse().index());
  }
  return g;
}

/// Edge-set inclusion G <= H.
inline bool subgraph_of(const WhiteheadGraph& g, const WhiteheadGraph& h) {
  if (g.rank() != h.rank()) throw RankError("subgraph_of: rank mismatch");
  return std::includes(h.edges().begin(), h.edges().end(), g.edges().begin(),
                       g.edges().end());
}

/// Number of connected components, skipping vertex `removed` if given.
inline std::size_t component_count(const WhiteheadGraph& g,
                                   std::optional<std::size_t> removed = std::nullopt) {
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  if (removed) seen[*removed] = 1;
  std::size_t count = 0;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
  }
  return count;
}

inline bool is_connected(const WhiteheadGraph& g) { return component_count(g) == 1; }

inline bool has_isolated_vertex(const WhiteheadGraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.neighbors(v).empty()) return true;
  }
  return false;
}

/// Articulation points by the low-link DFS.
inline std::vector<std::size_t> cut_vertices(const WhiteheadGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> depth(n, -1), low(n, 0);
  std::vector<char> is_cut(n, 0);
  auto dfs = [&](auto& self, std::size_t v, std::optional<std::size_t> parent,
                 int d) -> void {
    depth[v] = low[v] = d;
    int children = 0;
    for (std::size_t u : g.neighbors(v)) {
      if (parent && u == *parent) continue;
      if (depth[u] >= 0) {
        low[v] = std::min(low[v], depth[u]);
        continue;
      }
      ++children;
      self(self, u, v, d + 1);
      low[v] = std::min(low[v], low[u]);
      if (parent && low[u] >= depth[v]) is_cut[v] = 1;
    }
    if (!parent && children > 1) is_cut[v] = 1;
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (depth[v] < 0) dfs(dfs, v, std::nullopt, 0);
  }
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (is_cut[v]) out.push_back(v);
  }
  return out;
}

/// True iff removing some vertex strictly increases the component count.
inline bool has_cut_vertex(const WhiteheadGraph& g) { return !cut_vertices(g).empty(); }

/// Default ceiling on the rank for the Hamiltonian-cycle backtracking.
inline constexpr std::size_t kHamiltonianRankCap = 6;

/// A simple cycle through all 2n vertices, as a vertex sequence starting at
/// vertex 0 (the closing edge back to the start is implied).
inline std::optional<std::vector<std::size_t>> is_hamiltonian(
    const WhiteheadGraph& g, std::size_t rank_cap = kHamiltonianRankCap) {
  const std::size_t n = g.vertex_count();
  if (n < 3) throw PreconditionError("a spanning simple cycle needs at least 3 vertices");
  if (g.rank() > rank_cap || n > 64) {
    throw BudgetError("Hamiltonian search limited to rank " + std::to_string(rank_cap));
  }
  std::vector<std::uint64_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (std::popcount(adj[v]) < 2) return std::nullopt;
  }
  if (!is_connected(g)) return std::nullopt;

  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<std::size_t> path{0};
  // Unvisited vertices must stay reachable from the path's end.
  auto reachable = [&](std::uint64_t visited, std::size_t from) {
    std::uint64_t frontier = std::uint64_t{1} << from, seen = frontier;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) {
        next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      }
      next &= ~visited & ~seen;
      seen |= next;
      frontier = next;
    }
    return (seen | visited) == all;
  };
  auto extend = [&](auto& self, std::uint64_t visited) -> bool {
    const std::size_t v = path.back();
    if (visited == all) return (adj[v] & 1) != 0;
    if (!reachable(visited, v)) return false;
    for (std::uint64_t cand = adj[v] & ~visited; cand; cand &= cand - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(cand));
      path.push_back(u);
      if (self(self, visited | (std::uint64_t{1} << u))) return true;
      path.pop_back();
    }
    return false;
  };
  if (extend(extend, 1)) return path;
  return std::nullopt;
}

/// True iff `cycle` lists every vertex once and consecutive entries (cyclically)
/// are adjacent in g.
inline bool is_hamiltonian_cycle(const WhiteheadGraph& g,
                                 const std::vector<std::size_t>& cycle) {
  const std::size_t n = g.vertex_count();
  if (cycle.size() != n || n < 3) return false;
  std::vector<char> seen(n, 0);
  for (std::size_t v : cycle) {
    if (v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.has_edge(cycle[i], cycle[(i + 1) % n])) return false;
  }
  return true;
}

/// Evidence that a word is not primitive: its Whitehead graph spans all 2n
/// letters, is connected and has no cut vertex.
/// Claims about the Whitehead graph of `core`, the cyclic reduction of
/// `word`. A conjugate c x c^-1 can have a 2-connected linear graph while being
/// primitive, so only the core is examined.
struct NonPrimCert {
  Word word;
  Word core;
  std::optional<std::vector<std::size_t>> hamiltonian_cycle;
  bool spanning = false;
  bool connected = false;
  bool cut_vertex_free = false;
};

inline std::optional<NonPrimCert> nonprimitivity_certificate(
    const Word& w, std::size_t ham_rank_cap = kHamiltonianRankCap) {
  Word core = cyclic_reduce(w).core;
  const WhiteheadGraph g = whitehead_graph(core);
  if (has_isolated_vertex(g) || !is_connected(g) || has_cut_vertex(g)) return std::nullopt;
  NonPrimCert cert{w, std::move(core), std::nullopt, true, true, true};
  if (g.vertex_count() >= 3 && g.rank() <= ham_rank_cap) {
    cert.hamiltonian_cycle = is_hamiltonian(g, ham_rank_cap);
  }
  return cert;
}

/// Re-derives every claim in the certificate from the word alone.
inline bool check_certificate(const NonPrimCert& cert) {
  if (!(cyclic_reduce(cert.word).core == cert.core)) return false;
  const WhiteheadGraph g = whitehead_graph(cert.core);
  if (cert.hamiltonian_cycle && !is_hamiltonian_cycle(g, *cert.hamiltonian_cycle)) {
    return false;
  }
  return cert.spanning && cert.connected && cert.cut_vertex_free &&
         !has_isolated_vertex(g) && is_connected(g) && !has_cut_vertex(g);
}

}  // namespace palwidth

#endif  // PALWIDTH_WHITEHEAD_GRAPH_HPP
