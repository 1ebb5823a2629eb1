#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "circalg/error.hpp"

namespace circalg {

// Ground sets are indexed by bit position, so they cannot exceed 63 elements.
inline constexpr std::size_t kMaxGroundSet = 63;

// Subset of a ground set of edges (or matrix columns).
class EdgeSubset {
 public:
  constexpr EdgeSubset() = default;
  constexpr explicit EdgeSubset(std::uint64_t bits) : bits_(bits) {}

  static EdgeSubset of(std::initializer_list<std::size_t> elems) {
    EdgeSubset s;
    for (auto e : elems) s = s.with(e);
    return s;
  }
  static EdgeSubset of(const std::vector<std::size_t>& elems) {
    EdgeSubset s;
    for (auto e : elems) s = s.with(e);
    return s;
  }
  static EdgeSubset full(std::size_t n) {
    check_cap(n, kMaxGroundSet, "ground set");
    return EdgeSubset(n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n)));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(std::size_t e) const { return e < 64 && ((bits_ >> e) & 1U) != 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr EdgeSubset with(std::size_t e) const { return EdgeSubset(bits_ | (std::uint64_t{1} << e)); }
  constexpr EdgeSubset without(std::size_t e) const { return EdgeSubset(bits_ & ~(std::uint64_t{1} << e)); }
  constexpr bool is_subset_of(EdgeSubset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(EdgeSubset other) const { return (bits_ & other.bits_) != 0; }

  // Smallest element; undefined on the empty set.
  constexpr std::size_t first() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t e) { out.push_back(e); });
    return out;
  }

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<std::size_t>(std::countr_zero(b)));
  }

  friend constexpr EdgeSubset operator|(EdgeSubset a, EdgeSubset b) { return EdgeSubset(a.bits_ | b.bits_); }
  friend constexpr EdgeSubset operator&(EdgeSubset a, EdgeSubset b) { return EdgeSubset(a.bits_ & b.bits_); }
  friend constexpr EdgeSubset operator-(EdgeSubset a, EdgeSubset b) { return EdgeSubset(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(EdgeSubset, EdgeSubset) = default;
  friend constexpr auto operator<=>(EdgeSubset a, EdgeSubset b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

// "{e1,e3}" with one-based labels, the way edges are named in reports.
inline std::string format_edges(EdgeSubset s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t e) {
    if (!first) out += ",";
    out += "e" + std::to_string(e + 1);
    first = false;
  });
  return out + "}";
}

// Visits all 2^n subsets of {0..n-1} in increasing bit order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t cap, F&& f) {
  check_cap(n, cap, "subset enumeration");
  check_cap(n, kMaxGroundSet, "subset enumeration");
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t b = 0; b < end; ++b) f(EdgeSubset(b));
}

}  // namespace circalg
