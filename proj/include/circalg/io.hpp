#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "circalg/algebra.hpp"
#include "circalg/enumeration.hpp"
#include "circalg/error.hpp"
#include "circalg/graph.hpp"
#include "circalg/matrix.hpp"
#include "circalg/rational.hpp"

namespace circalg {

using json = nlohmann::json;

// A graph as read from disk: gains and flips are optional.
struct GraphInput {
  Multigraph graph;
  std::optional<GainAssignment> gains;
  std::optional<Orientation> orientation;

  Orientation orientation_or_identity() const {
    return orientation ? *orientation : Orientation::identity(graph.num_edges());
  }
};

// ---------------------------------------------------------------------------
// Matrices: {"rows": r, "cols": c, "entries": [["p/q", ...], ...]}

inline json matrix_to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

namespace detail {

inline Rational rational_from_json(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ParseError("expected a rational string or integer, got " + v.dump());
}

inline std::size_t count_from_json(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_number_integer() || obj[key].get<long long>() < 0) {
    throw ParseError(std::string("missing or invalid \"") + key + "\"");
  }
  return obj[key].get<std::size_t>();
}

}  // namespace detail

// Accepts row-nested or flat row-major entry arrays.
inline ExactMatrix matrix_from_json(const json& obj) {
  if (!obj.is_object()) throw ParseError("matrix JSON must be an object");
  const std::size_t rows = detail::count_from_json(obj, "rows");
  const std::size_t cols = detail::count_from_json(obj, "cols");
  if (!obj.contains("entries") || !obj["entries"].is_array()) throw ParseError("missing \"entries\" array");
  std::vector<Rational> entries;
  for (const auto& item : obj["entries"]) {
    if (item.is_array()) {
      if (item.size() != cols) throw ParseError("matrix row has the wrong length");
      for (const auto& v : item) entries.push_back(detail::rational_from_json(v));
    } else {
      entries.push_back(detail::rational_from_json(item));
    }
  }
  if (entries.size() != rows * cols) throw ParseError("matrix has the wrong number of entries");
  return ExactMatrix(rows, cols, std::move(entries));
}

// ---------------------------------------------------------------------------
// Graphs: {"vertices": n, "edges": [[t, h], ...], "gains": [...], "flips": [...]}

inline json graph_to_json(const Multigraph& g, const std::optional<GainAssignment>& gains = std::nullopt,
                          const std::optional<Orientation>& orientation = std::nullopt) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back(json::array({e.tail, e.head}));
  json out{{"vertices", g.num_vertices()}, {"edges", std::move(edges)}};
  if (gains) {
    json gs = json::array();
    for (const auto& v : gains->values()) gs.push_back(to_string(v));
    out["gains"] = std::move(gs);
  }
  if (orientation) {
    json fs = json::array();
    for (bool f : orientation->flips) fs.push_back(f);
    out["flips"] = std::move(fs);
  }
  return out;
}

inline json graph_to_json(const GraphInput& in) { return graph_to_json(in.graph, in.gains, in.orientation); }

inline GraphInput graph_from_json(const json& obj) {
  if (!obj.is_object()) throw ParseError("graph JSON must be an object");
  const std::size_t n = detail::count_from_json(obj, "vertices");
  if (!obj.contains("edges") || !obj["edges"].is_array()) throw ParseError("missing \"edges\" array");
  std::vector<Edge> edges;
  for (const auto& e : obj["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
      throw ParseError("edge must be [tail, head] with nonnegative integers: " + e.dump());
    }
    edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>()});
  }
  GraphInput in;
  try {
    in.graph = Multigraph(n, std::move(edges));
  } catch (const InvalidArgument& err) {
    throw ParseError(err.what());
  }
  if (obj.contains("gains")) {
    if (!obj["gains"].is_array() || obj["gains"].size() != in.graph.num_edges()) {
      throw ParseError("\"gains\" must list one value per edge");
    }
    std::vector<Rational> gains;
    for (const auto& v : obj["gains"]) gains.push_back(detail::rational_from_json(v));
    try {
      in.gains = GainAssignment(std::move(gains));
    } catch (const InvalidArgument& err) {
      throw ParseError(err.what());
    }
  }
  if (obj.contains("flips")) {
    if (!obj["flips"].is_array() || obj["flips"].size() != in.graph.num_edges()) {
      throw ParseError("\"flips\" must list one boolean per edge");
    }
    Orientation o;
    for (const auto& v : obj["flips"]) {
      if (!v.is_boolean()) throw ParseError("flips must be booleans");
      o.flips.push_back(v.get<bool>());
    }
    in.orientation = std::move(o);
  }
  return in;
}

// One "tail head [gain]" per line; '#' starts a comment. An optional
// "vertices N" line fixes the vertex count, otherwise it is max endpoint + 1.
inline GraphInput parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::vector<Rational> gains;
  std::optional<std::size_t> declared;
  std::size_t needed = 0;
  std::size_t line_no = 0;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto where = [&] { return " on line " + std::to_string(line_no); };
    auto parse_index = [&](const std::string& s) {
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("bad vertex '" + s + "'" + where());
      }
      return static_cast<std::size_t>(std::stoull(s));
    };
    if (tok[0] == "vertices") {
      if (tok.size() != 2) throw ParseError("expected 'vertices N'" + where());
      declared = parse_index(tok[1]);
      continue;
    }
    if (tok.size() < 2 || tok.size() > 3) throw ParseError("expected 'tail head [gain]'" + where());
    const Edge e{parse_index(tok[0]), parse_index(tok[1])};
    needed = std::max({needed, e.tail + 1, e.head + 1});
    edges.push_back(e);
    if (tok.size() == 3) {
      if (gains.size() + 1 != edges.size()) throw ParseError("gains must be given for all edges or none" + where());
      gains.push_back(parse_rational(tok[2]));
    } else if (!gains.empty()) {
      throw ParseError("gains must be given for all edges or none" + where());
    }
  }
  const std::size_t n = declared.value_or(needed);
  if (n < needed) throw ParseError("declared vertex count is smaller than an edge endpoint");
  GraphInput in;
  in.graph = Multigraph(n, std::move(edges));
  if (!gains.empty()) {
    try {
      in.gains = GainAssignment(std::move(gains));
    } catch (const InvalidArgument& err) {
      throw ParseError(err.what());
    }
  }
  return in;
}

// ---------------------------------------------------------------------------
// Reports

inline json hilbert_to_json(const HilbertFunction& h) { return json{{"dims", h.dims}, {"total", h.total_dim}}; }

// {"k": count} keyed by activity, plus the regraded sequence.
inline json profile_to_json(const ActivityProfile& p) {
  json counts = json::object();
  for (const auto& [k, n] : p.counts) counts[std::to_string(k)] = n;
  return json{{"counts", std::move(counts)}, {"graded", p.graded}, {"total", p.total}};
}

inline json subset_to_json(EdgeSubset s) { return json(s.elements()); }

}  // namespace circalg
