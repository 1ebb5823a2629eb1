#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "circalg/edge_subset.hpp"
#include "circalg/error.hpp"
#include "circalg/rational.hpp"

namespace circalg {

// Element of the square-free algebra K[x_0..x_{n-1}] / (x_e^2). A monomial is
// identified with the subset of variables it contains.
class SquareFreeElement {
 public:
  using Terms = std::map<EdgeSubset, Rational>;

  SquareFreeElement() = default;
  explicit SquareFreeElement(std::size_t num_edges) : num_edges_(num_edges) {
    check_cap(num_edges, kMaxGroundSet, "square-free algebra");
  }

  static SquareFreeElement one(std::size_t num_edges) {
    SquareFreeElement out(num_edges);
    out.add_term(EdgeSubset{}, 1);
    return out;
  }

  static SquareFreeElement variable(std::size_t num_edges, std::size_t e, const Rational& coeff = 1) {
    SquareFreeElement out(num_edges);
    out.add_term(EdgeSubset{}.with(e), coeff);
    return out;
  }

  std::size_t num_edges() const { return num_edges_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(EdgeSubset monomial) const {
    auto it = terms_.find(monomial);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // Adds c * monomial, dropping the term if it cancels.
  void add_term(EdgeSubset monomial, const Rational& c) {
    if (!monomial.is_subset_of(EdgeSubset::full(num_edges_))) {
      throw InvalidArgument("monomial uses a variable outside the ground set");
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(monomial, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SquareFreeElement& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }

  friend bool operator==(const SquareFreeElement&, const SquareFreeElement&) = default;

 private:
  std::size_t num_edges_ = 0;
  Terms terms_;
};

inline void require_same_ground_set(const SquareFreeElement& a, const SquareFreeElement& b) {
  if (a.num_edges() != b.num_edges()) {
    throw DimensionMismatch("square-free elements over " + std::to_string(a.num_edges()) + " and " +
                            std::to_string(b.num_edges()) + " variables");
  }
}

inline SquareFreeElement sf_add(const SquareFreeElement& a, const SquareFreeElement& b) {
  require_same_ground_set(a, b);
  SquareFreeElement out = a;
  for (const auto& [m, c] : b.terms()) out.add_term(m, c);
  return out;
}

// Monomials multiply as disjoint unions; overlapping supports vanish.
inline SquareFreeElement sf_mul(const SquareFreeElement& a, const SquareFreeElement& b) {
  require_same_ground_set(a, b);
  SquareFreeElement out(a.num_edges());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.intersects(mb)) continue;
      out.add_term(ma | mb, ca * cb);
    }
  }
  return out;
}

inline SquareFreeElement operator+(const SquareFreeElement& a, const SquareFreeElement& b) { return sf_add(a, b); }
inline SquareFreeElement operator*(const SquareFreeElement& a, const SquareFreeElement& b) { return sf_mul(a, b); }
inline SquareFreeElement operator*(const Rational& s, SquareFreeElement a) { return a *= s; }
inline SquareFreeElement operator-(SquareFreeElement a) { return a *= Rational(-1); }

// Human-readable form such as "x1x2 - 2*x3" (one-based variable names).
inline std::string to_string(const SquareFreeElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    Rational mag = abs(c);
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    std::string mono;
    m.for_each([&](std::size_t e) { mono += "x" + std::to_string(e + 1); });
    if (mono.empty()) {
      out += circalg::to_string(mag);
    } else {
      if (mag != 1) out += circalg::to_string(mag) + "*";
      out += mono;
    }
    first = false;
  }
  return out;
}

}  // namespace circalg
