#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "circalg/enumeration.hpp"
#include "circalg/graph.hpp"

namespace circalg {

struct NamedGraph {
  std::string id;
  Multigraph graph;
};

inline Multigraph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Multigraph(n, std::move(edges));
}

// Edges i -> i+1 and (n-1) -> 0, so the default orientation is cyclic.
inline Multigraph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Multigraph(n, std::move(edges));
}

// Two triangles sharing vertex 0.
inline Multigraph figure_eight_graph() {
  return Multigraph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
}

// Two disjoint triangles joined by a two-edge path 2 - 6 - 3.
inline Multigraph handcuff_graph() {
  return Multigraph(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 6}, {6, 3}});
}

inline Multigraph bouquet_graph(std::size_t loops) {
  return Multigraph(1, std::vector<Edge>(loops, Edge{0, 0}));
}

inline std::vector<NamedGraph> named_graphs() {
  return {
      {"named:K3", cycle_graph(3)},
      {"named:C4", cycle_graph(4)},
      {"named:C5", cycle_graph(5)},
      {"named:figure-eight", figure_eight_graph()},
      {"named:handcuff", handcuff_graph()},
      {"named:bouquet3", bouquet_graph(3)},
  };
}

namespace detail {

inline bool is_connected(const Multigraph& g) {
  if (g.num_vertices() <= 1) return true;
  auto pf = build_components(g, EdgeSubset::full(g.num_edges()));
  std::size_t components = 0;
  pf.for_each_component([&](std::size_t, std::size_t, bool) { ++components; });
  return components == 1;
}

// Sorted edge list with each edge written (min, max).
inline std::vector<Edge> normalized_edges(const std::vector<Edge>& edges, const std::vector<std::size_t>& relabel) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& e : edges) {
    const std::size_t a = relabel[e.tail];
    const std::size_t b = relabel[e.head];
    out.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_canonical(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  const auto self = normalized_edges(edges, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    if (normalized_edges(edges, perm) < self) return false;
  }
  return true;
}

}  // namespace detail

// Connected multigraphs (loops and parallel edges allowed) with at most
// `max_vertices` vertices and `max_edges` edges, one representative per
// vertex-relabeling class. Edges are sorted; ids read "n<V>:<edges>".
inline std::vector<NamedGraph> small_multigraphs(std::size_t max_vertices, std::size_t max_edges) {
  std::vector<NamedGraph> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    std::vector<Edge> slots;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) slots.push_back({a, b});
    }
    for (std::size_t m = 0; m <= max_edges; ++m) {
      // Multisets of m slots as nondecreasing index sequences.
      std::vector<std::size_t> idx(m, 0);
      bool more = true;
      while (more) {
        std::vector<Edge> edges;
        for (auto i : idx) edges.push_back(slots[i]);
        Multigraph g(n, edges);
        if (detail::is_connected(g) && detail::is_canonical(n, edges)) {
          std::string id = "n" + std::to_string(n) + ":";
          for (std::size_t i = 0; i < edges.size(); ++i) {
            if (i > 0) id += ",";
            id += std::to_string(edges[i].tail) + "-" + std::to_string(edges[i].head);
          }
          out.push_back({id, std::move(g)});
        }
        if (m == 0) break;
        std::size_t i = m;
        while (i > 0 && idx[i - 1] == slots.size() - 1) --i;
        if (i == 0) {
          more = false;
        } else {
          const std::size_t next = idx[i - 1] + 1;
          for (std::size_t j = i - 1; j < m; ++j) idx[j] = next;
        }
      }
    }
  }
  return out;
}

// Connected multigraphs with <= 4 vertices and <= 6 edges, then the named
// instances.
inline std::vector<NamedGraph> builtin_corpus() {
  auto out = small_multigraphs(4, 6);
  for (auto& g : named_graphs()) out.push_back(std::move(g));
  return out;
}

// ---------------------------------------------------------------------------
// Seeded generators

using Rng = std::mt19937_64;

inline std::size_t pick_index(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

inline Orientation random_orientation(Rng& rng, std::size_t num_edges) {
  Orientation o = Orientation::identity(num_edges);
  for (std::size_t e = 0; e < num_edges; ++e) o.flips[e] = (rng() & 1U) != 0;
  return o;
}

inline GainAssignment random_gains(Rng& rng, std::size_t num_edges, const std::vector<Rational>& pool) {
  std::vector<Rational> gains;
  gains.reserve(num_edges);
  for (std::size_t e = 0; e < num_edges; ++e) gains.push_back(pool[pick_index(rng, pool.size())]);
  return GainAssignment(std::move(gains));
}

inline EdgeOrdering random_ordering(Rng& rng, std::size_t num_edges) {
  EdgeOrdering o = natural_ordering(num_edges);
  for (std::size_t i = num_edges; i > 1; --i) std::swap(o[i - 1], o[pick_index(rng, i)]);
  return o;
}

// Uniform endpoints (loops and parallels allowed), 1..max_vertices vertices,
// 0..max_edges edges.
inline Multigraph random_multigraph(Rng& rng, std::size_t max_vertices, std::size_t max_edges) {
  const std::size_t n = 1 + pick_index(rng, max_vertices);
  const std::size_t m = pick_index(rng, max_edges + 1);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) edges.push_back({pick_index(rng, n), pick_index(rng, n)});
  return Multigraph(n, std::move(edges));
}

// The e-th edge gets the e-th odd prime, so distinct edge sets have distinct
// gain products.
inline GainAssignment distinct_prime_gains(std::size_t num_edges) {
  std::vector<Rational> gains;
  for (std::uint64_t p = 3; gains.size() < num_edges; p += 2) {
    bool prime = true;
    for (std::uint64_t d = 3; d * d <= p; d += 2) prime = prime && p % d != 0;
    if (prime) gains.emplace_back(static_cast<unsigned long>(p));
  }
  return GainAssignment(std::move(gains));
}

}  // namespace circalg
