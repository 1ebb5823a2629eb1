#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circalg/edge_subset.hpp"
#include "circalg/error.hpp"
#include "circalg/graph.hpp"

namespace circalg {

inline constexpr std::size_t kDefaultEnumerationCap = 20;

// ---------------------------------------------------------------------------
// Edge orderings

// An ordering lists edge indices from smallest to largest.
using EdgeOrdering = std::vector<std::size_t>;

inline EdgeOrdering natural_ordering(std::size_t num_edges) {
  EdgeOrdering o(num_edges);
  std::iota(o.begin(), o.end(), std::size_t{0});
  return o;
}

// position[e] = rank of edge e under the ordering.
inline std::vector<std::size_t> ordering_positions(const EdgeOrdering& ordering, std::size_t num_edges) {
  if (ordering.size() != num_edges) throw InvalidArgument("ordering must list every edge exactly once");
  std::vector<std::size_t> position(num_edges, num_edges);
  for (std::size_t i = 0; i < ordering.size(); ++i) {
    const std::size_t e = ordering[i];
    if (e >= num_edges || position[e] != num_edges) throw InvalidArgument("ordering must be a permutation");
    position[e] = i;
  }
  return position;
}

// Edges of `s` ranked strictly above `e`.
inline EdgeSubset edges_above(EdgeSubset s, std::size_t e, const std::vector<std::size_t>& position) {
  EdgeSubset out;
  s.for_each([&](std::size_t f) {
    if (position[f] > position[e]) out = out.with(f);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Component structure of an edge-induced subgraph

namespace detail {

// Union-find with parity, tracking per-component vertex and edge counts and
// whether the component is bipartite (a loop is an odd cycle).
class ParityForest {
 public:
  explicit ParityForest(std::size_t n) : parent_(n), parity_(n, 0), vertices_(n, 1), edges_(n, 0), bipartite_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::pair<std::size_t, int> find(std::size_t v) {
    int par = 0;
    std::size_t root = v;
    while (parent_[root] != root) {
      par ^= parity_[root];
      root = parent_[root];
    }
    // Path compression with parity bookkeeping.
    int acc = par;
    while (parent_[v] != v) {
      const std::size_t next = parent_[v];
      const int here = parity_[v];
      parent_[v] = root;
      parity_[v] = acc;
      acc ^= here;
      v = next;
    }
    return {root, par};
  }

  void add_edge(const Edge& e) {
    if (e.is_loop()) {
      auto [r, p] = find(e.tail);
      ++edges_[r];
      bipartite_[r] = 0;
      return;
    }
    auto [ra, pa] = find(e.tail);
    auto [rb, pb] = find(e.head);
    if (ra == rb) {
      ++edges_[ra];
      if (pa == pb) bipartite_[ra] = 0;
      return;
    }
    if (vertices_[ra] < vertices_[rb]) {
      std::swap(ra, rb);
      std::swap(pa, pb);
    }
    parent_[rb] = ra;
    parity_[rb] = pa ^ pb ^ 1;
    vertices_[ra] += vertices_[rb];
    edges_[ra] += edges_[rb] + 1;
    bipartite_[ra] = bipartite_[ra] & bipartite_[rb];
  }

  template <typename F>
  void for_each_component(F&& f) {
    for (std::size_t v = 0; v < parent_.size(); ++v) {
      if (parent_[v] == v) f(vertices_[v], edges_[v], bipartite_[v] != 0);
    }
  }

  bool same_component(std::size_t a, std::size_t b) { return find(a).first == find(b).first; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> parity_;
  std::vector<std::size_t> vertices_;
  std::vector<std::size_t> edges_;
  std::vector<char> bipartite_;
};

inline ParityForest build_components(const Multigraph& g, EdgeSubset s) {
  ParityForest pf(g.num_vertices());
  s.for_each([&](std::size_t e) { pf.add_edge(g.edge(e)); });
  return pf;
}

inline void require_subset(const Multigraph& g, EdgeSubset s) {
  check_cap(g.num_edges(), kMaxGroundSet, "edge subset");
  if (!s.is_subset_of(EdgeSubset::full(g.num_edges()))) throw InvalidArgument("edge subset out of range");
}

}  // namespace detail

inline bool is_forest(const Multigraph& g, EdgeSubset s) {
  detail::require_subset(g, s);
  auto pf = detail::build_components(g, s);
  bool ok = true;
  pf.for_each_component([&](std::size_t v, std::size_t e, bool) { ok = ok && e + 1 == v; });
  return ok;
}

// Every component has at most one cycle.
inline bool is_pseudoforest(const Multigraph& g, EdgeSubset s) {
  detail::require_subset(g, s);
  auto pf = detail::build_components(g, s);
  bool ok = true;
  pf.for_each_component([&](std::size_t v, std::size_t e, bool) { ok = ok && e <= v; });
  return ok;
}

// Pseudoforest whose cycles are all odd. A unicyclic component has an odd
// cycle exactly when it is not bipartite.
inline bool is_odd_circle_pseudoforest(const Multigraph& g, EdgeSubset s) {
  detail::require_subset(g, s);
  auto pf = detail::build_components(g, s);
  bool ok = true;
  pf.for_each_component([&](std::size_t v, std::size_t e, bool bip) { ok = ok && (e < v || (e == v && !bip)); });
  return ok;
}

// ---------------------------------------------------------------------------
// Cycles

// Connected, nonempty, every touched vertex of degree 2 (a loop counts twice).
inline bool is_cycle(const Multigraph& g, EdgeSubset s) {
  detail::require_subset(g, s);
  if (s.empty()) return false;
  std::vector<std::size_t> degree(g.num_vertices(), 0);
  s.for_each([&](std::size_t e) {
    degree[g.edge(e).tail] += 1;
    degree[g.edge(e).head] += 1;
  });
  std::size_t touched = 0;
  for (auto d : degree) {
    if (d != 0 && d != 2) return false;
    touched += d != 0 ? 1 : 0;
  }
  auto pf = detail::build_components(g, s);
  std::size_t nontrivial = 0;
  pf.for_each_component([&](std::size_t, std::size_t e, bool) { nontrivial += e > 0 ? 1 : 0; });
  return nontrivial == 1 && touched == s.size();
}

namespace detail {

struct Incidence {
  std::size_t edge;
  std::size_t other;
};

inline std::vector<std::vector<Incidence>> adjacency(const Multigraph& g, EdgeSubset within) {
  std::vector<std::vector<Incidence>> adj(g.num_vertices());
  within.for_each([&](std::size_t e) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) return;
    adj[ed.tail].push_back({e, ed.head});
    adj[ed.head].push_back({e, ed.tail});
  });
  return adj;
}

template <typename F>
void extend_cycle_path(const std::vector<std::vector<Incidence>>& adj, std::size_t start_edge, std::size_t origin,
                       std::size_t current, EdgeSubset path, std::vector<char>& visited, std::size_t& found,
                       std::size_t limit, F& f) {
  for (const auto& inc : adj[current]) {
    if (inc.edge <= start_edge || path.contains(inc.edge)) continue;
    if (inc.other == origin) {
      if (++found > limit) throw SizeLimitExceeded("cycle enumeration exceeded " + std::to_string(limit) + " cycles");
      f(path.with(inc.edge));
      continue;
    }
    if (visited[inc.other]) continue;
    visited[inc.other] = 1;
    extend_cycle_path(adj, start_edge, origin, inc.other, path.with(inc.edge), visited, found, limit, f);
    visited[inc.other] = 0;
  }
}

}  // namespace detail

inline constexpr std::size_t kDefaultCycleLimit = 1'000'000;

// Streams every simple cycle of the subgraph `within` exactly once. Each cycle
// is found from its smallest edge s, walking s from tail to head and closing
// back at the tail through larger edges only.
template <typename F>
void for_each_cycle(const Multigraph& g, EdgeSubset within, F&& f, std::size_t limit = kDefaultCycleLimit) {
  detail::require_subset(g, within);
  const auto adj = detail::adjacency(g, within);
  std::vector<char> visited(g.num_vertices(), 0);
  std::size_t found = 0;
  within.for_each([&](std::size_t s) {
    const Edge& ed = g.edge(s);
    if (ed.is_loop()) {
      if (++found > limit) throw SizeLimitExceeded("cycle enumeration exceeded " + std::to_string(limit) + " cycles");
      f(EdgeSubset{}.with(s));
      return;
    }
    visited[ed.tail] = 1;
    visited[ed.head] = 1;
    detail::extend_cycle_path(adj, s, ed.tail, ed.head, EdgeSubset{}.with(s), visited, found, limit, f);
    visited[ed.tail] = 0;
    visited[ed.head] = 0;
  });
}

inline std::vector<EdgeSubset> enumerate_cycles(const Multigraph& g, std::size_t cap = kDefaultEnumerationCap) {
  check_cap(g.num_edges(), cap, "cycle enumeration");
  std::vector<EdgeSubset> out;
  for_each_cycle(g, EdgeSubset::full(g.num_edges()), [&](EdgeSubset c) { out.push_back(c); });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t vertex_count(const Multigraph& g, EdgeSubset s) {
  std::vector<char> seen(g.num_vertices(), 0);
  std::size_t n = 0;
  s.for_each([&](std::size_t e) {
    for (auto v : {g.edge(e).tail, g.edge(e).head}) {
      if (!seen[v]) {
        seen[v] = 1;
        ++n;
      }
    }
  });
  return n;
}

inline std::vector<char> vertex_mask(const Multigraph& g, EdgeSubset s) {
  std::vector<char> seen(g.num_vertices(), 0);
  s.for_each([&](std::size_t e) {
    seen[g.edge(e).tail] = 1;
    seen[g.edge(e).head] = 1;
  });
  return seen;
}

// Cycle traversed so that its smallest edge agrees with the orientation.
// Returns edges in walk order with the direction each one is walked.
struct CycleWalk {
  std::vector<std::size_t> edges;
  std::vector<bool> along_orientation;
};

enum class CycleDirection { Forward, Backward };

inline CycleWalk walk_cycle(const Multigraph& g, const Orientation& o, EdgeSubset cycle) {
  require_orientation(g, o);
  if (!is_cycle(g, cycle)) throw InvalidArgument("edge set " + format_edges(cycle) + " is not a simple cycle");
  CycleWalk walk;
  const std::size_t first = cycle.first();
  auto [start, at] = oriented_ends(g, o, first);
  walk.edges.push_back(first);
  walk.along_orientation.push_back(true);
  EdgeSubset remaining = cycle.without(first);
  while (!remaining.empty()) {
    bool advanced = false;
    remaining.for_each([&](std::size_t e) {
      if (advanced) return;
      const Edge& ed = g.edge(e);
      if (ed.tail != at && ed.head != at) return;
      auto [from, to] = oriented_ends(g, o, e);
      walk.edges.push_back(e);
      walk.along_orientation.push_back(from == at);
      at = from == at ? to : from;
      remaining = remaining.without(e);
      advanced = true;
    });
    if (!advanced) throw InvalidArgument("cycle walk got stuck");
  }
  (void)start;
  return walk;
}

// Product of gain^{+1} over edges walked along the orientation and gain^{-1}
// over edges walked against it. The two directions give reciprocal values.
inline Rational cycle_gain(const Multigraph& g, const Orientation& o, const GainAssignment& gains, EdgeSubset cycle,
                           CycleDirection direction = CycleDirection::Forward) {
  require_gains(g, gains);
  const auto walk = walk_cycle(g, o, cycle);
  Rational product = 1;
  for (std::size_t i = 0; i < walk.edges.size(); ++i) {
    const bool agrees = walk.along_orientation[i] == (direction == CycleDirection::Forward);
    if (agrees) {
      product *= gains[walk.edges[i]];
    } else {
      product /= gains[walk.edges[i]];
    }
  }
  return product;
}

inline bool is_gainless(const Multigraph& g, const Orientation& o, const GainAssignment& gains, EdgeSubset cycle) {
  return cycle_gain(g, o, gains, cycle) == 1;
}

// ---------------------------------------------------------------------------
// Subgraph classification and even circuits

enum class SubgraphKind { Forest, OddCirclePseudoforest, ContainsEvenCircuit, Other };

enum class EvenCircuitType { EvenCycle, FigureEight, Handcuff };

struct EvenCircuit {
  EvenCircuitType type = EvenCircuitType::EvenCycle;
  EdgeSubset edges;
  // For figure-eights and handcuffs: the two odd cycles and the connecting path.
  EdgeSubset first_cycle;
  EdgeSubset second_cycle;
  EdgeSubset bridge;
  std::size_t first_anchor = 0;   // vertex of first_cycle where the bridge starts
  std::size_t second_anchor = 0;  // vertex of second_cycle where the bridge ends
  std::vector<std::size_t> bridge_path;  // bridge edges from first_anchor to second_anchor
};

struct SubgraphClass {
  SubgraphKind kind = SubgraphKind::Forest;
  bool pseudoforest = true;
  std::optional<EvenCircuit> witness;
};

inline const char* to_string(SubgraphKind k) {
  switch (k) {
    case SubgraphKind::Forest: return "forest";
    case SubgraphKind::OddCirclePseudoforest: return "odd-circle-pseudoforest";
    case SubgraphKind::ContainsEvenCircuit: return "contains-even-circuit";
    case SubgraphKind::Other: return "other";
  }
  return "?";
}

inline const char* to_string(EvenCircuitType t) {
  switch (t) {
    case EvenCircuitType::EvenCycle: return "even-cycle";
    case EvenCircuitType::FigureEight: return "odd-figure-eight";
    case EvenCircuitType::Handcuff: return "odd-handcuff";
  }
  return "?";
}

namespace detail {

// Shortest path (by edges of `within`) from any vertex of `from` to any vertex
// of `to`. Its interior avoids both vertex sets.
inline std::optional<std::pair<std::vector<std::size_t>, std::pair<std::size_t, std::size_t>>> shortest_bridge(
    const Multigraph& g, EdgeSubset within, const std::vector<char>& from, const std::vector<char>& to) {
  const auto adj = adjacency(g, within);
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> via_edge(n, SIZE_MAX);
  std::vector<std::size_t> prev(n, SIZE_MAX);
  std::vector<char> seen(n, 0);
  std::deque<std::size_t> queue;
  for (std::size_t v = 0; v < n; ++v) {
    if (from[v]) {
      seen[v] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    if (to[v]) {
      std::vector<std::size_t> path;
      std::size_t end = v;
      while (!from[v]) {
        path.push_back(via_edge[v]);
        v = prev[v];
      }
      std::reverse(path.begin(), path.end());
      return std::pair{path, std::pair{v, end}};
    }
    for (const auto& inc : adj[v]) {
      if (seen[inc.other]) continue;
      seen[inc.other] = 1;
      via_edge[inc.other] = inc.edge;
      prev[inc.other] = v;
      queue.push_back(inc.other);
    }
  }
  return std::nullopt;
}

// Even circuit inside `s`, found from its cycles: an even cycle, or two odd
// cycles of one component meeting in one vertex, or disjoint ones joined by a
// shortest path.
inline std::optional<EvenCircuit> find_even_circuit(const Multigraph& g, EdgeSubset s) {
  std::vector<EdgeSubset> cycles;
  for_each_cycle(g, s, [&](EdgeSubset c) { cycles.push_back(c); });
  std::sort(cycles.begin(), cycles.end(), [](EdgeSubset a, EdgeSubset b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (auto c : cycles) {
    if (c.size() % 2 == 0) {
      EvenCircuit w;
      w.type = EvenCircuitType::EvenCycle;
      w.edges = c;
      w.first_cycle = c;
      return w;
    }
  }
  auto pf = build_components(g, s);
  std::optional<EvenCircuit> best;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      const auto a = cycles[i];
      const auto b = cycles[j];
      const std::size_t va = g.edge(a.first()).tail;
      const std::size_t vb = g.edge(b.first()).tail;
      if (!pf.same_component(va, vb)) continue;
      const auto ma = vertex_mask(g, a);
      const auto mb = vertex_mask(g, b);
      std::size_t shared = 0;
      std::size_t shared_vertex = 0;
      for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (ma[v] && mb[v]) {
          ++shared;
          shared_vertex = v;
        }
      }
      EvenCircuit w;
      w.first_cycle = a;
      w.second_cycle = b;
      if (shared == 1) {
        w.type = EvenCircuitType::FigureEight;
        w.edges = a | b;
        w.first_anchor = w.second_anchor = shared_vertex;
      } else if (shared == 0) {
        auto bridge = shortest_bridge(g, s, ma, mb);
        if (!bridge) continue;
        w.type = EvenCircuitType::Handcuff;
        w.bridge_path = bridge->first;
        w.bridge = EdgeSubset::of(bridge->first);
        w.first_anchor = bridge->second.first;
        w.second_anchor = bridge->second.second;
        w.edges = a | b | w.bridge;
      } else {
        // Two odd cycles sharing two or more vertices enclose an even cycle,
        // which the scan above would already have returned.
        continue;
      }
      if (!best || w.edges.size() < best->edges.size()) best = w;
    }
  }
  return best;
}

}  // namespace detail

inline SubgraphClass classify_subgraph(const Multigraph& g, EdgeSubset s) {
  detail::require_subset(g, s);
  SubgraphClass out;
  out.pseudoforest = is_pseudoforest(g, s);
  if (is_forest(g, s)) {
    out.kind = SubgraphKind::Forest;
    return out;
  }
  if (is_odd_circle_pseudoforest(g, s)) {
    out.kind = SubgraphKind::OddCirclePseudoforest;
    return out;
  }
  out.witness = detail::find_even_circuit(g, s);
  out.kind = out.witness ? SubgraphKind::ContainsEvenCircuit : SubgraphKind::Other;
  return out;
}

// Structural recognizer: `s` is exactly an even cycle, odd figure-eight, or
// odd handcuff (bridge of length >= 1).
inline bool is_even_circuit(const Multigraph& g, EdgeSubset s) {
  detail::require_subset(g, s);
  if (s.empty()) return false;
  auto pf = detail::build_components(g, s);
  std::size_t nontrivial = 0;
  pf.for_each_component([&](std::size_t, std::size_t e, bool) { nontrivial += e > 0 ? 1 : 0; });
  if (nontrivial != 1) return false;

  std::vector<EdgeSubset> cycles;
  for_each_cycle(g, s, [&](EdgeSubset c) { cycles.push_back(c); });
  if (cycles.size() == 1) return cycles[0] == s && s.size() % 2 == 0;
  if (cycles.size() != 2) return false;
  const auto a = cycles[0];
  const auto b = cycles[1];
  if (a.intersects(b) || a.size() % 2 == 0 || b.size() % 2 == 0) return false;
  const auto ma = vertex_mask(g, a);
  const auto mb = vertex_mask(g, b);
  std::size_t shared = 0;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) shared += (ma[v] && mb[v]) ? 1 : 0;
  const EdgeSubset rest = s - a - b;
  if (shared == 1) return rest.empty();
  if (shared != 0 || rest.empty()) return false;
  // The remaining edges must form one path whose ends lie on the two cycles
  // and whose interior avoids them.
  std::vector<std::size_t> degree(g.num_vertices(), 0);
  rest.for_each([&](std::size_t e) {
    ++degree[g.edge(e).tail];
    ++degree[g.edge(e).head];
  });
  std::size_t ends_on_a = 0;
  std::size_t ends_on_b = 0;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (degree[v] == 0) continue;
    if (ma[v] || mb[v]) {
      if (degree[v] != 1) return false;
      ends_on_a += ma[v] ? 1 : 0;
      ends_on_b += mb[v] ? 1 : 0;
    } else if (degree[v] != 2) {
      return false;
    }
  }
  return ends_on_a == 1 && ends_on_b == 1 && is_forest(g, rest);
}

// Coefficients of a linear dependence among the undirected incidence columns
// of an even circuit: +-1 alternating around cycles, +-2 along a bridge.
inline std::vector<Rational> even_circuit_dependence(const Multigraph& g, const EvenCircuit& w) {
  std::vector<Rational> coeff(g.num_edges());
  const Orientation o = Orientation::identity(g.num_edges());

  // Walk a cycle starting at `anchor` with the first edge signed `sign`.
  auto assign_cycle = [&](EdgeSubset cycle, std::size_t anchor, int sign) {
    if (cycle.size() == 1) {
      coeff[cycle.first()] = sign;
      return;
    }
    std::size_t at = anchor;
    EdgeSubset remaining = cycle;
    int s = sign;
    while (!remaining.empty()) {
      bool moved = false;
      remaining.for_each([&](std::size_t e) {
        if (moved) return;
        const Edge& ed = g.edge(e);
        if (ed.tail != at && ed.head != at) return;
        coeff[e] = s;
        s = -s;
        at = ed.other(at);
        remaining = remaining.without(e);
        moved = true;
      });
      if (!moved) throw InvalidArgument("even circuit witness is not a cycle walk");
    }
  };

  switch (w.type) {
    case EvenCircuitType::EvenCycle:
      assign_cycle(w.first_cycle, g.edge(w.first_cycle.first()).tail, 1);
      break;
    case EvenCircuitType::FigureEight:
      assign_cycle(w.first_cycle, w.first_anchor, 1);
      assign_cycle(w.second_cycle, w.second_anchor, -1);
      break;
    case EvenCircuitType::Handcuff: {
      // The first cycle puts +2 on its anchor; the bridge alternates -2, +2, ...
      assign_cycle(w.first_cycle, w.first_anchor, 1);
      int s = -2;
      for (auto e : w.bridge_path) {
        coeff[e] = s;
        s = -s;
      }
      // Last bridge coefficient is -s; the second cycle must put +s there.
      assign_cycle(w.second_cycle, w.second_anchor, s / 2);
      break;
    }
  }
  (void)o;
  return coeff;
}

// ---------------------------------------------------------------------------
// Enumerations (streamed) and activity statistics

template <typename Pred, typename F>
void for_each_matching_subset(const Multigraph& g, std::size_t cap, Pred&& pred, F&& f) {
  for_each_subset(g.num_edges(), cap, [&](EdgeSubset s) {
    if (pred(g, s)) f(s);
  });
}

template <typename F>
void for_each_forest(const Multigraph& g, F&& f, std::size_t cap = kDefaultEnumerationCap) {
  for_each_matching_subset(g, cap, is_forest, f);
}

template <typename F>
void for_each_pseudoforest(const Multigraph& g, F&& f, std::size_t cap = kDefaultEnumerationCap) {
  for_each_matching_subset(g, cap, is_pseudoforest, f);
}

template <typename F>
void for_each_odd_circle_pseudoforest(const Multigraph& g, F&& f, std::size_t cap = kDefaultEnumerationCap) {
  for_each_matching_subset(g, cap, is_odd_circle_pseudoforest, f);
}

inline std::vector<EdgeSubset> enumerate_spanning_forests(const Multigraph& g, std::size_t cap = kDefaultEnumerationCap) {
  std::vector<EdgeSubset> out;
  for_each_forest(g, [&](EdgeSubset s) { out.push_back(s); }, cap);
  return out;
}

inline std::vector<EdgeSubset> enumerate_pseudoforests(const Multigraph& g, std::size_t cap = kDefaultEnumerationCap) {
  std::vector<EdgeSubset> out;
  for_each_pseudoforest(g, [&](EdgeSubset s) { out.push_back(s); }, cap);
  return out;
}

inline std::vector<EdgeSubset> enumerate_odd_circle_pseudoforests(const Multigraph& g,
                                                                 std::size_t cap = kDefaultEnumerationCap) {
  std::vector<EdgeSubset> out;
  for_each_odd_circle_pseudoforest(g, [&](EdgeSubset s) { out.push_back(s); }, cap);
  return out;
}

// counts[k]: objects of activity k. graded[j]: objects with
// |E| - |S| - activity = j, the indexing that matches graded dimensions.
struct ActivityProfile {
  std::map<std::size_t, std::uint64_t> counts;
  std::vector<std::uint64_t> graded;
  std::uint64_t total = 0;

  void add(std::size_t ground_size, std::size_t subset_size, std::size_t activity) {
    ++counts[activity];
    const std::size_t j = ground_size - subset_size - activity;
    if (graded.size() <= j) graded.resize(j + 1, 0);
    ++graded[j];
    ++total;
  }

  friend bool operator==(const ActivityProfile&, const ActivityProfile&) = default;
};

// Edges e outside the forest whose fundamental cycle has e as its smallest edge.
inline std::size_t external_activity(const Multigraph& g, EdgeSubset forest, const EdgeOrdering& ordering) {
  if (!is_forest(g, forest)) throw InvalidArgument(format_edges(forest) + " is not a forest");
  const auto position = ordering_positions(ordering, g.num_edges());
  const auto adj = detail::adjacency(g, forest);
  std::size_t active = 0;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (forest.contains(e)) continue;
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) {
      ++active;
      continue;
    }
    // Tree path from tail to head.
    std::vector<std::size_t> via(g.num_vertices(), SIZE_MAX);
    std::vector<std::size_t> prev(g.num_vertices(), SIZE_MAX);
    std::vector<char> seen(g.num_vertices(), 0);
    std::deque<std::size_t> queue{ed.tail};
    seen[ed.tail] = 1;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (const auto& inc : adj[v]) {
        if (seen[inc.other]) continue;
        seen[inc.other] = 1;
        via[inc.other] = inc.edge;
        prev[inc.other] = v;
        queue.push_back(inc.other);
      }
    }
    if (!seen[ed.head]) continue;
    bool minimal = true;
    for (std::size_t v = ed.head; v != ed.tail; v = prev[v]) minimal = minimal && position[via[v]] > position[e];
    active += minimal ? 1 : 0;
  }
  return active;
}

inline ActivityProfile forest_activity_profile(const Multigraph& g, const EdgeOrdering& ordering,
                                               std::size_t cap = kDefaultEnumerationCap) {
  ActivityProfile p;
  for_each_forest(
      g, [&](EdgeSubset f) { p.add(g.num_edges(), f.size(), external_activity(g, f, ordering)); }, cap);
  return p;
}

// Edges e outside F such that F + e contains an even circuit with e smallest.
// Any such circuit lies in e plus the edges of F above e, and conversely that
// set fails to be an odd-circle pseudoforest exactly when it contains one.
inline std::size_t even_activity(const Multigraph& g, EdgeSubset f, const EdgeOrdering& ordering) {
  if (!is_odd_circle_pseudoforest(g, f)) throw InvalidArgument(format_edges(f) + " is not an odd-circle pseudoforest");
  const auto position = ordering_positions(ordering, g.num_edges());
  std::size_t active = 0;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (f.contains(e)) continue;
    const EdgeSubset candidate = edges_above(f, e, position).with(e);
    const auto cls = classify_subgraph(g, candidate);
    if (cls.witness && cls.witness->edges.contains(e)) ++active;
  }
  return active;
}

inline ActivityProfile even_activity_profile(const Multigraph& g, const EdgeOrdering& ordering,
                                             std::size_t cap = kDefaultEnumerationCap) {
  ActivityProfile p;
  for_each_odd_circle_pseudoforest(
      g, [&](EdgeSubset f) { p.add(g.num_edges(), f.size(), even_activity(g, f, ordering)); }, cap);
  return p;
}

}  // namespace circalg
