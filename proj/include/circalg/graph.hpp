#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circalg/error.hpp"
#include "circalg/matrix.hpp"
#include "circalg/rational.hpp"

namespace circalg {

struct Edge {
  std::size_t tail = 0;
  std::size_t head = 0;

  bool is_loop() const { return tail == head; }
  std::size_t other(std::size_t v) const { return v == tail ? head : tail; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Vertices 0..n-1 and an ordered edge list; loops and parallel edges allowed.
// The list order is the default edge ordering and tail -> head the default
// orientation.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(std::size_t num_vertices, std::vector<Edge> edges)
      : num_vertices_(num_vertices), edges_(std::move(edges)) {
    for (const auto& e : edges_) {
      if (e.tail >= num_vertices_ || e.head >= num_vertices_) {
        throw InvalidArgument("edge (" + std::to_string(e.tail) + "," + std::to_string(e.head) +
                              ") has an endpoint outside " + std::to_string(num_vertices_) + " vertices");
      }
    }
  }

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::size_t num_vertices_ = 0;
  std::vector<Edge> edges_;
};

// flips[e] = true traverses edge e head -> tail.
struct Orientation {
  std::vector<bool> flips;

  static Orientation identity(std::size_t num_edges) { return {std::vector<bool>(num_edges, false)}; }
  static Orientation from_mask(std::size_t num_edges, std::uint64_t mask) {
    Orientation o = identity(num_edges);
    for (std::size_t e = 0; e < num_edges; ++e) o.flips[e] = ((mask >> e) & 1U) != 0;
    return o;
  }
  friend bool operator==(const Orientation&, const Orientation&) = default;
};

// Nonzero rational gain per edge.
class GainAssignment {
 public:
  GainAssignment() = default;
  explicit GainAssignment(std::vector<Rational> gains) : gains_(std::move(gains)) {
    for (const auto& g : gains_) {
      if (g == 0) throw InvalidArgument("gains must be nonzero");
    }
  }
  static GainAssignment constant(std::size_t num_edges, const Rational& g) {
    return GainAssignment(std::vector<Rational>(num_edges, g));
  }

  std::size_t size() const { return gains_.size(); }
  const Rational& operator[](std::size_t e) const { return gains_.at(e); }
  const std::vector<Rational>& values() const { return gains_; }

  friend bool operator==(const GainAssignment&, const GainAssignment&) = default;

 private:
  std::vector<Rational> gains_;
};

// Edge endpoints after applying the orientation: (start, end).
inline std::pair<std::size_t, std::size_t> oriented_ends(const Multigraph& g, const Orientation& o, std::size_t e) {
  const Edge& ed = g.edge(e);
  return o.flips.at(e) ? std::pair{ed.head, ed.tail} : std::pair{ed.tail, ed.head};
}

inline void require_orientation(const Multigraph& g, const Orientation& o) {
  if (o.flips.size() != g.num_edges()) throw DimensionMismatch("orientation length differs from edge count");
}

inline void require_gains(const Multigraph& g, const GainAssignment& gains) {
  if (gains.size() != g.num_edges()) throw DimensionMismatch("gain assignment length differs from edge count");
}

// -1 where an edge starts, +1 where it ends; loop columns are zero.
inline ExactMatrix directed_incidence(const Multigraph& g, const Orientation& o) {
  require_orientation(g, o);
  ExactMatrix a(g.num_vertices(), g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (g.edge(e).is_loop()) continue;
    auto [from, to] = oriented_ends(g, o, e);
    a(from, e) = -1;
    a(to, e) = 1;
  }
  return a;
}

inline ExactMatrix directed_incidence(const Multigraph& g) {
  return directed_incidence(g, Orientation::identity(g.num_edges()));
}

// 1 at both ends of an edge; a loop contributes a single 2.
inline ExactMatrix undirected_incidence(const Multigraph& g) {
  ExactMatrix a(g.num_vertices(), g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) {
      a(ed.tail, e) = 2;
    } else {
      a(ed.tail, e) = 1;
      a(ed.head, e) = 1;
    }
  }
  return a;
}

// -1 at the start, gain at the end, gain - 1 for a loop.
inline ExactMatrix gain_incidence(const Multigraph& g, const Orientation& o, const GainAssignment& gains) {
  require_orientation(g, o);
  require_gains(g, gains);
  ExactMatrix a(g.num_vertices(), g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (g.edge(e).is_loop()) {
      a(g.edge(e).tail, e) = gains[e] - 1;
      continue;
    }
    auto [from, to] = oriented_ends(g, o, e);
    a(from, e) = -1;
    a(to, e) = gains[e];
  }
  return a;
}

struct ReorientResult {
  Orientation orientation;
  GainAssignment gains;
  // Set when the edge is a loop: nothing changed because loops have no direction.
  bool loop_noop = false;
};

// Reverses edge e and inverts its gain; the circulation algebra changes only by
// the substitution x_e -> -gain(e)^{-1} x_e.
inline ReorientResult reorient_edge(const Multigraph& g, const Orientation& o, const GainAssignment& gains,
                                    std::size_t e) {
  require_orientation(g, o);
  require_gains(g, gains);
  if (e >= g.num_edges()) throw InvalidArgument("edge index out of range");
  if (g.edge(e).is_loop()) return {o, gains, true};
  Orientation flipped = o;
  flipped.flips[e] = !flipped.flips[e];
  std::vector<Rational> values = gains.values();
  values[e] = 1 / values[e];
  return {std::move(flipped), GainAssignment(std::move(values)), false};
}

inline bool is_generalized_incidence(const ExactMatrix& a) {
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (a.nonzeros_in_column(c) > 2) return false;
  }
  return true;
}

// Gain graph read off a generalized incidence matrix. column_scale[e] is the
// factor s with A[:,e] = s * gain_incidence(...)[:,e].
struct GainGraph {
  Multigraph graph;
  Orientation orientation;
  GainAssignment gains;
  std::vector<Rational> column_scale;
};

inline GainGraph gain_graph_from_matrix(const ExactMatrix& a) {
  std::vector<Edge> edges;
  std::vector<Rational> gains;
  std::vector<Rational> scale;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    std::vector<std::size_t> support;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (a(r, c) != 0) support.push_back(r);
    }
    if (support.size() > 2) {
      throw NotGeneralizedIncidence("column " + std::to_string(c) + " has " + std::to_string(support.size()) +
                                    " nonzero entries");
    }
    if (support.size() == 2) {
      const std::size_t v = support[0];
      const std::size_t u = support[1];
      edges.push_back({v, u});
      gains.push_back(-a(u, c) / a(v, c));
      scale.push_back(-a(v, c));
    } else if (support.size() == 1) {
      const std::size_t v = support[0];
      edges.push_back({v, v});
      if (a(v, c) == -1) {
        // gain a + 1 would be 0; gain 2 gives loop entry 1 = -1 * (-1).
        gains.push_back(2);
        scale.push_back(-1);
      } else {
        gains.push_back(a(v, c) + 1);
        scale.push_back(1);
      }
    } else {
      // A zero column is a loop of gain 1; its vertex is immaterial.
      if (a.rows() == 0) throw InvalidArgument("zero column in a matrix without rows has no vertex to attach to");
      edges.push_back({0, 0});
      gains.push_back(1);
      scale.push_back(1);
    }
  }
  Multigraph g(a.rows(), std::move(edges));
  const std::size_t m = g.num_edges();
  return {std::move(g), Orientation::identity(m), GainAssignment(std::move(gains)), std::move(scale)};
}

}  // namespace circalg
