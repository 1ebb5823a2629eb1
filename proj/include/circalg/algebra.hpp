#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "circalg/matrix.hpp"
#include "circalg/square_free.hpp"

namespace circalg {

// Graded dimensions dims[k] = dim C^k, truncated after the last nonzero degree.
struct HilbertFunction {
  std::vector<std::uint64_t> dims;
  std::uint64_t total_dim = 0;

  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
};

inline HilbertFunction make_hilbert_function(std::vector<std::uint64_t> dims) {
  while (!dims.empty() && dims.back() == 0) dims.pop_back();
  HilbertFunction h;
  h.total_dim = std::accumulate(dims.begin(), dims.end(), std::uint64_t{0});
  h.dims = std::move(dims);
  return h;
}

// y_v = sum_e A[v,e] x_e, one generator per row.
inline std::vector<SquareFreeElement> generators_from_matrix(const ExactMatrix& a) {
  std::vector<SquareFreeElement> gens;
  gens.reserve(a.rows());
  for (std::size_t v = 0; v < a.rows(); ++v) {
    SquareFreeElement y(a.cols());
    for (std::size_t e = 0; e < a.cols(); ++e) y.add_term(EdgeSubset{}.with(e), a(v, e));
    gens.push_back(std::move(y));
  }
  return gens;
}

// Incremental echelon basis of a subspace of B(E), keyed by leading monomial.
// Every stored row is monic in its leading (smallest) monomial.
class SparseEchelon {
 public:
  // Reduces `v` against the basis; keeps it when it is independent.
  bool insert(SquareFreeElement v) {
    while (!v.is_zero()) {
      const auto& [lead, coeff] = *v.terms().begin();
      auto pivot = rows_.find(lead);
      if (pivot == rows_.end()) {
        const EdgeSubset key = lead;
        v *= Rational(1) / coeff;
        rows_.emplace(key, std::move(v));
        return true;
      }
      const Rational factor = -coeff;
      for (const auto& [m, c] : pivot->second.terms()) v.add_term(m, factor * c);
    }
    return false;
  }

  std::size_t rank() const { return rows_.size(); }

  std::vector<SquareFreeElement> basis() const {
    std::vector<SquareFreeElement> out;
    out.reserve(rows_.size());
    for (const auto& [key, row] : rows_) out.push_back(row);
    return out;
  }

 private:
  std::map<EdgeSubset, SquareFreeElement> rows_;
};

namespace detail {

// Visits every nondecreasing index sequence of length k over [0, n).
template <typename F>
void for_each_multiset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k, 0);
  if (k == 0) {
    f(idx);
    return;
  }
  if (n == 0) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - 1) --i;
    if (i == 0) return;
    const std::size_t next = idx[i - 1] + 1;
    for (std::size_t j = i - 1; j < k; ++j) idx[j] = next;
  }
}

}  // namespace detail

// dim C^k(A): rank of all degree-k products of generators, taken over every
// multiset of k row indices.
inline std::size_t graded_dimension(const ExactMatrix& a, std::size_t k) {
  if (k == 0) return 1;
  if (k > a.cols()) return 0;
  const auto gens = generators_from_matrix(a);
  SparseEchelon span;
  detail::for_each_multiset(gens.size(), k, [&](const std::vector<std::size_t>& idx) {
    SquareFreeElement prod = SquareFreeElement::one(a.cols());
    for (auto v : idx) {
      prod = sf_mul(prod, gens[v]);
      if (prod.is_zero()) return;
    }
    span.insert(std::move(prod));
  });
  return span.rank();
}

// Full Hilbert function. Degree k is spanned by the products b * y_v with b
// running over a basis of degree k-1, so each degree reuses the previous basis.
inline HilbertFunction hilbert_function(const ExactMatrix& a) {
  const auto gens = generators_from_matrix(a);
  std::vector<std::uint64_t> dims{1};
  std::vector<SquareFreeElement> previous{SquareFreeElement::one(a.cols())};
  for (std::size_t k = 1; k <= a.cols(); ++k) {
    SparseEchelon span;
    for (const auto& b : previous) {
      for (const auto& y : gens) {
        auto prod = sf_mul(b, y);
        if (!prod.is_zero()) span.insert(std::move(prod));
      }
    }
    if (span.rank() == 0) break;
    dims.push_back(span.rank());
    previous = span.basis();
  }
  return make_hilbert_function(std::move(dims));
}

}  // namespace circalg
