#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circalg/algebra.hpp"
#include "circalg/enumeration.hpp"
#include "circalg/graph.hpp"
#include "circalg/io.hpp"
#include "circalg/matroid.hpp"

namespace circalg {

enum class VerificationStatus { Match, Mismatch, HypothesisNotMet };

inline const char* to_string(VerificationStatus s) {
  switch (s) {
    case VerificationStatus::Match: return "match";
    case VerificationStatus::Mismatch: return "mismatch";
    case VerificationStatus::HypothesisNotMet: return "hypothesis-not-met";
  }
  return "?";
}

// One dimension-theorem check: `claimed` is the combinatorial side, `computed`
// the algebraic (or brute-force) side.
struct VerificationRecord {
  std::string theorem;
  std::string instance_id;
  json instance;
  json claimed;
  json computed;
  VerificationStatus status = VerificationStatus::Match;
  json witness;

  bool match() const { return status != VerificationStatus::Mismatch; }
};

inline json record_to_json(const VerificationRecord& r) {
  return json{{"theorem", r.theorem},
              {"id", r.instance_id},
              {"instance", r.instance},
              {"claimed", r.claimed},
              {"computed", r.computed},
              {"status", to_string(r.status)},
              {"match", r.status == VerificationStatus::Match},
              {"witness", r.witness}};
}

namespace detail {

// First degree where the graded sequences disagree, for mismatch witnesses.
inline json first_graded_difference(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    const auto x = k < a.size() ? a[k] : 0;
    const auto y = k < b.size() ? b[k] : 0;
    if (x != y) return json{{"degree", k}, {"claimed", x}, {"computed", y}};
  }
  return nullptr;
}

inline VerificationRecord graded_record(std::string theorem, std::string id, json instance,
                                        const ActivityProfile& profile, const HilbertFunction& h) {
  VerificationRecord r;
  r.theorem = std::move(theorem);
  r.instance_id = std::move(id);
  r.instance = std::move(instance);
  r.claimed = profile_to_json(profile);
  r.computed = hilbert_to_json(h);
  const bool ok = profile.total == h.total_dim && profile.graded == h.dims;
  r.status = ok ? VerificationStatus::Match : VerificationStatus::Mismatch;
  if (!ok) r.witness = first_graded_difference(profile.graded, h.dims);
  return r;
}

}  // namespace detail

// Circulation algebra of a directed graph vs its forests by external activity.
inline VerificationRecord verify_A(const std::string& id, const Multigraph& g, const Orientation& o,
                                   const EdgeOrdering& ordering, std::size_t cap = kDefaultEnumerationCap) {
  const auto profile = forest_activity_profile(g, ordering, cap);
  const auto h = hilbert_function(directed_incidence(g, o));
  return detail::graded_record("A", id, graph_to_json(g, std::nullopt, o), profile, h);
}

// Circulation algebra of any matrix vs independent column sets by activity.
inline VerificationRecord verify_B(const std::string& id, const ExactMatrix& a, const EdgeOrdering& ordering,
                                   std::size_t cap = kDefaultEnumerationCap) {
  const VectorMatroid m(a);
  const auto profile = vector_activity_profile(m, ordering, cap);
  const auto h = hilbert_function(a);
  return detail::graded_record("B", id, matrix_to_json(a), profile, h);
}

// Undirected incidence algebra vs odd-circle pseudoforests by even activity.
inline VerificationRecord verify_1(const std::string& id, const Multigraph& g, const EdgeOrdering& ordering,
                                   std::size_t cap = kDefaultEnumerationCap) {
  const auto profile = even_activity_profile(g, ordering, cap);
  const auto h = hilbert_function(undirected_incidence(g));
  return detail::graded_record("1", id, graph_to_json(g), profile, h);
}

// Generic gains: Hilbert total equals the number of pseudoforests, and the
// Hilbert function is the same for every orientation. Gains with a split
// P | (S - P) of equal products on some cycle do not meet the hypothesis.
inline VerificationRecord verify_2(const std::string& id, const Multigraph& g, const GainAssignment& gains,
                                   const Orientation& reference, std::size_t cap = kDefaultEnumerationCap,
                                   std::size_t orientation_cap = kDefaultOrientationCap) {
  VerificationRecord r;
  r.theorem = "2";
  r.instance_id = id;
  r.instance = graph_to_json(g, gains, reference);

  const auto criterion = orientation_independent_criterion(g, gains, cap);
  // Hypothesis: no cycle has any balancing split, so no cycle is ever gainless.
  std::optional<std::pair<EdgeSubset, EdgeSubset>> violation;
  for (auto cycle : enumerate_cycles(g, cap)) {
    if (auto p = detail::balancing_subset(gains, cycle, false)) {
      violation = std::pair{cycle, *p};
      break;
    }
  }
  if (violation) {
    r.status = VerificationStatus::HypothesisNotMet;
    r.witness = json{{"cycle", subset_to_json(violation->first)},
                     {"P", subset_to_json(violation->second)},
                     {"nonempty_proper_reading_met", criterion.independent_nonempty_proper}};
    return r;
  }

  check_cap(g.num_edges(), orientation_cap, "orientation sweep");
  std::uint64_t pseudoforests = 0;
  for_each_pseudoforest(g, [&](EdgeSubset) { ++pseudoforests; }, cap);
  const auto h0 = hilbert_function(gain_incidence(g, reference, gains));

  std::optional<Orientation> differing;
  std::optional<HilbertFunction> differing_h;
  const std::uint64_t end = std::uint64_t{1} << g.num_edges();
  for (std::uint64_t flips = 1; flips < end && !differing; ++flips) {
    Orientation o = reference;
    bool touches_edge = false;
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      if ((flips >> e) & 1U) {
        o.flips[e] = !o.flips[e];
        touches_edge = touches_edge || !g.edge(e).is_loop();
      }
    }
    if (!touches_edge) continue;
    auto h = hilbert_function(gain_incidence(g, o, gains));
    if (!(h == h0)) {
      differing = o;
      differing_h = h;
    }
  }

  r.claimed = json{{"pseudoforests", pseudoforests}};
  r.computed = json{{"hilbert", hilbert_to_json(h0)}, {"orientations", end}, {"orientation_invariant", !differing}};
  const bool ok = h0.total_dim == pseudoforests && !differing;
  r.status = ok ? VerificationStatus::Match : VerificationStatus::Mismatch;
  if (differing) {
    json flips = json::array();
    for (bool f : differing->flips) flips.push_back(f);
    r.witness = json{{"flips", flips}, {"hilbert", hilbert_to_json(*differing_h)}};
  }
  return r;
}

inline json orientation_report_to_json(const OrientationReport& rep) {
  json out{{"independent", rep.independent},
           {"method", rep.method == DecisionMethod::Criterion ? "criterion" : "brute-force"}};
  if (rep.failing_cycle) out["cycle"] = subset_to_json(*rep.failing_cycle);
  if (rep.failing_subset) out["P"] = subset_to_json(*rep.failing_subset);
  if (rep.method == DecisionMethod::Criterion) {
    out["cycles"] = rep.cycles;
    out["cleared_by_unit_gains"] = rep.cleared_by_unit_gains;
    out["cleared_by_products"] = rep.cleared_by_products;
    out["independent_nonempty_proper"] = rep.independent_nonempty_proper;
    if (rep.nonempty_proper_failing_cycle) {
      out["nonempty_proper_cycle"] = subset_to_json(*rep.nonempty_proper_failing_cycle);
      out["nonempty_proper_P"] = subset_to_json(*rep.nonempty_proper_failing_subset);
    }
  }
  if (rep.failing_orientation) {
    json flips = json::array();
    for (bool f : rep.failing_orientation->flips) flips.push_back(f);
    out["flips"] = flips;
  }
  return out;
}

// Criterion decider vs the all-orientations sweep.
inline VerificationRecord verify_main(const std::string& id, const Multigraph& g, const GainAssignment& gains,
                                      const Orientation& reference, std::size_t cap = kDefaultEnumerationCap,
                                      std::size_t orientation_cap = kDefaultOrientationCap) {
  VerificationRecord r;
  r.theorem = "main";
  r.instance_id = id;
  r.instance = graph_to_json(g, gains, reference);
  const auto criterion = orientation_independent_criterion(g, gains, cap);
  const auto brute = orientation_independent_bruteforce(g, gains, reference, orientation_cap);
  r.claimed = orientation_report_to_json(criterion);
  r.computed = orientation_report_to_json(brute);
  const bool ok = criterion.independent == brute.independent;
  r.status = ok ? VerificationStatus::Match : VerificationStatus::Mismatch;
  if (!ok) r.witness = json{{"criterion", criterion.independent}, {"brute_force", brute.independent}};
  return r;
}

}  // namespace circalg
