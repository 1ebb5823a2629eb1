#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "circalg/circalg.hpp"

namespace circalg::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kInputError = 2, kResourceCap = 3 };

enum class MatrixKind { Directed, Undirected, Gain };
enum class OutputFormat { Table, Json };

struct RunConfig {
  std::string command;
  std::string what;  // count target or theorem
  std::optional<std::string> input_path;
  bool use_stdin = false;
  std::optional<std::string> inline_graph;
  std::optional<std::string> named;
  MatrixKind kind = MatrixKind::Directed;
  std::size_t max_edges = kDefaultEnumerationCap;
  std::size_t orientation_cap = kDefaultOrientationCap;
  std::optional<std::vector<std::size_t>> ordering;
  std::uint64_t seed = 1;
  std::size_t trials = 200;
  OutputFormat format = OutputFormat::Table;
  bool profile = false;
};

// Parsed input: either a graph or a bare matrix.
struct Instance {
  std::string id;
  std::optional<GraphInput> graph;
  std::optional<ExactMatrix> matrix;
};

inline std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline Instance parse_instance(const std::string& text, std::string id) {
  Instance inst;
  inst.id = std::move(id);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (doc.contains("rows")) {
      inst.matrix = matrix_from_json(doc);
    } else {
      inst.graph = graph_from_json(doc);
    }
  } else {
    inst.graph = parse_edge_list(text);
  }
  return inst;
}

inline std::optional<Instance> load_instance(const RunConfig& cfg, std::istream& in) {
  if (cfg.named) {
    for (auto& ng : named_graphs()) {
      if (ng.id == "named:" + *cfg.named) return Instance{ng.id, GraphInput{ng.graph, {}, {}}, {}};
    }
    throw ParseError("unknown named graph '" + *cfg.named + "'");
  }
  if (cfg.inline_graph) {
    std::string text = *cfg.inline_graph;
    std::replace(text.begin(), text.end(), ';', '\n');
    return parse_instance(text, "inline");
  }
  if (cfg.use_stdin) return parse_instance(read_all(in), "stdin");
  if (cfg.input_path) {
    std::ifstream file(*cfg.input_path);
    if (!file) throw ParseError("cannot open '" + *cfg.input_path + "'");
    return parse_instance(read_all(file), *cfg.input_path);
  }
  return std::nullopt;
}

inline Instance require_instance(const RunConfig& cfg, std::istream& in) {
  auto inst = load_instance(cfg, in);
  if (!inst) throw ParseError("no input: use --input PATH, --stdin, --graph TEXT or --named NAME");
  return *inst;
}

inline const GraphInput& require_graph(const Instance& inst) {
  if (!inst.graph) throw ParseError("this command needs a graph, not a matrix");
  return *inst.graph;
}

inline EdgeOrdering ordering_for(const RunConfig& cfg, std::size_t num_edges) {
  if (!cfg.ordering) return natural_ordering(num_edges);
  try {
    ordering_positions(*cfg.ordering, num_edges);
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("--ordering: ") + e.what());
  }
  return *cfg.ordering;
}

inline ExactMatrix matrix_for(const RunConfig& cfg, const Instance& inst) {
  if (inst.matrix) return *inst.matrix;
  const auto& g = *inst.graph;
  switch (cfg.kind) {
    case MatrixKind::Directed:
      return directed_incidence(g.graph, g.orientation_or_identity());
    case MatrixKind::Undirected:
      return undirected_incidence(g.graph);
    case MatrixKind::Gain:
      if (!g.gains) throw ParseError("--kind gain needs per-edge gains in the input");
      return gain_incidence(g.graph, g.orientation_or_identity(), *g.gains);
  }
  return {};
}

inline const char* kind_name(MatrixKind k) {
  switch (k) {
    case MatrixKind::Directed: return "directed";
    case MatrixKind::Undirected: return "undirected";
    case MatrixKind::Gain: return "gain";
  }
  return "?";
}

// Fixed-width row, one column per degree.
inline std::string format_sequence(const std::vector<std::uint64_t>& v) {
  std::size_t width = 1;
  for (auto x : v) width = std::max(width, std::to_string(x).size());
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) os << ' ';
    os << std::setw(static_cast<int>(width)) << v[i];
  }
  return os.str();
}

inline void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

inline int cmd_hilbert(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const auto inst = require_instance(cfg, in);
  const auto a = matrix_for(cfg, inst);
  check_cap(a.cols(), cfg.max_edges, "hilbert");
  const auto h = hilbert_function(a);
  if (cfg.format == OutputFormat::Json) {
    json j = hilbert_to_json(h);
    j["kind"] = inst.matrix ? "matrix" : kind_name(cfg.kind);
    j["matrix"] = matrix_to_json(a);
    print_json(out, j);
  } else {
    out << format_sequence(h.dims) << " | total " << h.total_dim << '\n';
  }
  return kOk;
}

inline int cmd_count(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const auto inst = require_instance(cfg, in);
  const auto& g = require_graph(inst).graph;
  const auto ordering = ordering_for(cfg, g.num_edges());
  std::uint64_t count = 0;
  std::optional<ActivityProfile> profile;
  if (cfg.what == "forests") {
    for_each_forest(g, [&](EdgeSubset) { ++count; }, cfg.max_edges);
    if (cfg.profile) profile = forest_activity_profile(g, ordering, cfg.max_edges);
  } else if (cfg.what == "odd-pseudoforests") {
    for_each_odd_circle_pseudoforest(g, [&](EdgeSubset) { ++count; }, cfg.max_edges);
    if (cfg.profile) profile = even_activity_profile(g, ordering, cfg.max_edges);
  } else if (cfg.what == "pseudoforests") {
    for_each_pseudoforest(g, [&](EdgeSubset) { ++count; }, cfg.max_edges);
    if (cfg.profile) {
      // Activity in the bicircular matroid, realised with distinct-prime gains.
      const VectorMatroid m(
          gain_incidence(g, Orientation::identity(g.num_edges()), distinct_prime_gains(g.num_edges())));
      profile = vector_activity_profile(m, ordering, cfg.max_edges);
    }
  } else if (cfg.what == "cycles") {
    count = enumerate_cycles(g, cfg.max_edges).size();
  } else {
    throw ParseError("unknown count target '" + cfg.what + "'");
  }

  if (cfg.format == OutputFormat::Json) {
    json j{{"target", cfg.what}, {"count", count}};
    if (profile) j["profile"] = profile_to_json(*profile);
    print_json(out, j);
  } else {
    out << count << '\n';
    if (profile) {
      out << "activity:";
      for (const auto& [k, n] : profile->counts) out << ' ' << k << ':' << n;
      out << "\ngraded: " << format_sequence(profile->graded) << '\n';
    }
  }
  return kOk;
}

inline std::string clause_summary(const OrientationReport& r) {
  if (r.cycles == 0) return "no cycles";
  if (r.cleared_by_products == 0) return "clause 1";
  if (r.cleared_by_unit_gains == 0) return "clause 2";
  return "clauses 1 and 2";
}

inline int cmd_orient_check(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const auto inst = require_instance(cfg, in);
  const auto& gi = require_graph(inst);
  if (!gi.gains) throw ParseError("orient-check needs per-edge gains in the input");
  const auto criterion = orientation_independent_criterion(gi.graph, *gi.gains, cfg.max_edges);
  std::optional<OrientationReport> brute;
  if (gi.graph.num_edges() <= cfg.orientation_cap) {
    brute = orientation_independent_bruteforce(gi.graph, *gi.gains, gi.orientation_or_identity(), cfg.orientation_cap);
  }
  const bool agree = !brute || brute->independent == criterion.independent;

  if (cfg.format == OutputFormat::Json) {
    json j{{"instance", graph_to_json(gi)}, {"criterion", orientation_report_to_json(criterion)}};
    j["brute_force"] = brute ? orientation_report_to_json(*brute) : json(nullptr);
    j["agree"] = agree;
    print_json(out, j);
  } else {
    const std::string brute_note =
        !brute ? "brute force skipped (edge cap)" : (agree ? "brute force agrees" : "brute force DISAGREES");
    if (criterion.independent) {
      out << "INDEPENDENT (criterion " << clause_summary(criterion) << "; " << brute_note << ")\n";
    } else {
      out << "DEPENDENT; witness cycle " << format_edges(*criterion.failing_cycle) << ", P="
          << format_edges(*criterion.failing_subset) << " (" << brute_note << ")\n";
    }
    if (criterion.independent != criterion.independent_nonempty_proper) {
      out << "note: with P restricted to nonempty proper subsets the verdict would be "
          << (criterion.independent_nonempty_proper ? "INDEPENDENT" : "DEPENDENT") << '\n';
    }
  }
  return agree ? kOk : kMismatch;
}

// ---------------------------------------------------------------------------
// verify

inline const std::vector<Rational>& main_sweep_gain_pool() {
  static const std::vector<Rational> pool{1, -1, 2, -2, 3, -3, Rational(1, 2), 3, 5};
  return pool;
}

inline const std::vector<Rational>& random_trial_gain_pool() {
  static const std::vector<Rational> pool{1, -1, 2, -2, 3, -3, Rational(1, 2), 3};
  return pool;
}

inline std::vector<VerificationRecord> verify_theorem(const std::string& theorem, const RunConfig& cfg,
                                                      const std::optional<Instance>& single) {
  std::vector<VerificationRecord> records;
  Rng rng(cfg.seed);
  std::vector<Instance> instances;
  if (single) {
    instances.push_back(*single);
  } else {
    for (auto& ng : builtin_corpus()) instances.push_back(Instance{ng.id, GraphInput{ng.graph, {}, {}}, {}});
  }

  for (const auto& inst : instances) {
    if (inst.matrix) {
      if (theorem != "B") throw ParseError("matrix input supports only theorem B");
      records.push_back(verify_B(inst.id, *inst.matrix, ordering_for(cfg, inst.matrix->cols()), cfg.max_edges));
      continue;
    }
    const auto& gi = *inst.graph;
    const auto& g = gi.graph;
    const auto ordering = ordering_for(cfg, g.num_edges());
    if (theorem == "A") {
      if (single) {
        records.push_back(verify_A(inst.id, g, gi.orientation_or_identity(), ordering, cfg.max_edges));
      } else {
        for (int t = 1; t <= 3; ++t) {
          records.push_back(verify_A(inst.id + "#o" + std::to_string(t), g, random_orientation(rng, g.num_edges()),
                                     ordering, cfg.max_edges));
        }
      }
    } else if (theorem == "B") {
      const auto o = gi.orientation_or_identity();
      records.push_back(verify_B(inst.id + "#directed", directed_incidence(g, o), ordering, cfg.max_edges));
      records.push_back(verify_B(inst.id + "#undirected", undirected_incidence(g), ordering, cfg.max_edges));
      if (gi.gains) records.push_back(verify_B(inst.id + "#gain", gain_incidence(g, o, *gi.gains), ordering, cfg.max_edges));
    } else if (theorem == "1") {
      records.push_back(verify_1(inst.id, g, ordering, cfg.max_edges));
    } else if (theorem == "2") {
      const auto gains = gi.gains ? *gi.gains : distinct_prime_gains(g.num_edges());
      records.push_back(verify_2(inst.id, g, gains, gi.orientation_or_identity(), cfg.max_edges, cfg.orientation_cap));
    } else if (theorem == "main") {
      const auto gains = gi.gains ? *gi.gains : random_gains(rng, g.num_edges(), main_sweep_gain_pool());
      records.push_back(verify_main(inst.id, g, gains, gi.orientation_or_identity(), cfg.max_edges, cfg.orientation_cap));
    } else {
      throw ParseError("unknown theorem '" + theorem + "'");
    }
  }

  if (theorem == "main" && !single) {
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const auto g = random_multigraph(rng, 5, 7);
      const auto gains = random_gains(rng, g.num_edges(), random_trial_gain_pool());
      const auto o = random_orientation(rng, g.num_edges());
      std::ostringstream id;
      id << "random:" << std::setw(4) << std::setfill('0') << t;
      records.push_back(verify_main(id.str(), g, gains, o, cfg.max_edges, cfg.orientation_cap));
    }
  }
  std::stable_sort(records.begin(), records.end(),
                   [](const auto& a, const auto& b) { return a.instance_id < b.instance_id; });
  return records;
}

inline int cmd_verify(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const auto single = load_instance(cfg, in);
  std::vector<std::string> theorems;
  if (cfg.what == "all") {
    theorems = {"A", "B", "1", "2", "main"};
  } else {
    theorems = {cfg.what};
  }
  if (single && single->matrix) theorems = {"B"};

  std::vector<VerificationRecord> all;
  for (const auto& t : theorems) {
    auto recs = verify_theorem(t, cfg, single);
    all.insert(all.end(), std::make_move_iterator(recs.begin()), std::make_move_iterator(recs.end()));
  }
  std::size_t matched = 0;
  std::size_t mismatched = 0;
  std::size_t not_met = 0;
  for (const auto& r : all) {
    matched += r.status == VerificationStatus::Match ? 1 : 0;
    mismatched += r.status == VerificationStatus::Mismatch ? 1 : 0;
    not_met += r.status == VerificationStatus::HypothesisNotMet ? 1 : 0;
  }

  if (cfg.format == OutputFormat::Json) {
    json recs = json::array();
    for (const auto& r : all) recs.push_back(record_to_json(r));
    print_json(out, json{{"records", recs},
                         {"summary", {{"match", matched}, {"mismatch", mismatched}, {"hypothesis_not_met", not_met}}}});
  } else {
    for (const auto& r : all) {
      out << std::left << std::setw(6) << r.theorem << std::setw(20) << to_string(r.status) << r.instance_id;
      if (r.status == VerificationStatus::HypothesisNotMet && r.witness.contains("cycle")) {
        out << "  cycle=" << r.witness["cycle"].dump() << " P=" << r.witness["P"].dump();
      }
      out << '\n';
    }
    out << "summary: " << matched << " match, " << mismatched << " mismatch, " << not_met
        << " hypothesis-not-met\n";
  }
  return mismatched == 0 ? kOk : kMismatch;
}

// ---------------------------------------------------------------------------

inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circulation algebras of graphs and matrices: Hilbert functions and dimension checks", "circalg"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string kind = "directed";
  std::string format = "table";
  std::string ordering;
  std::optional<std::size_t> max_edges;

  auto add_common = [&](CLI::App* sub) {
    auto* input = sub->add_option("--input", cfg.input_path, "graph or matrix file (JSON or edge list)");
    auto* use_stdin = sub->add_flag("--stdin", cfg.use_stdin, "read the graph from standard input");
    auto* inline_graph = sub->add_option("--graph", cfg.inline_graph, "inline edge list, ';' between edges");
    auto* named = sub->add_option("--named", cfg.named, "builtin graph: K3, C4, C5, figure-eight, handcuff, bouquet3");
    input->excludes(use_stdin)->excludes(inline_graph)->excludes(named);
    use_stdin->excludes(inline_graph)->excludes(named);
    inline_graph->excludes(named);
    sub->add_option("--kind", kind, "incidence matrix: directed, undirected or gain")
        ->check(CLI::IsMember({"directed", "undirected", "gain"}));
    sub->add_option("--ordering", ordering, "edge ordering, smallest first, e.g. 2,0,1");
    sub->add_option("--seed", cfg.seed, "seed for random orientations, gains and trials");
    sub->add_option("--trials", cfg.trials, "random instances for 'verify main'");
    sub->add_option("--max-edges", max_edges, "edge cap for exhaustive enumeration")->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
  };

  auto* hilbert = app.add_subcommand("hilbert", "graded dimensions of the circulation algebra");
  add_common(hilbert);
  auto* count = app.add_subcommand("count", "count forests, pseudoforests, odd-pseudoforests or cycles");
  count->add_option("target", cfg.what, "forests | pseudoforests | odd-pseudoforests | cycles")
      ->required()
      ->check(CLI::IsMember({"forests", "pseudoforests", "odd-pseudoforests", "cycles"}));
  count->add_flag("--profile", cfg.profile, "also print the activity profile");
  add_common(count);
  auto* orient = app.add_subcommand("orient-check", "is the gain-graph matroid orientation independent?");
  add_common(orient);
  auto* verify = app.add_subcommand("verify", "check the dimension theorems on a corpus or one input");
  verify->add_option("theorem", cfg.what, "A | B | 1 | 2 | main | all")
      ->required()
      ->check(CLI::IsMember({"A", "B", "1", "2", "main", "all"}));
  add_common(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  cfg.kind = kind == "undirected" ? MatrixKind::Undirected : kind == "gain" ? MatrixKind::Gain : MatrixKind::Directed;
  cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Table;
  if (max_edges) {
    cfg.max_edges = *max_edges;
    cfg.orientation_cap = *max_edges;
  }

  try {
    if (!ordering.empty()) {
      std::vector<std::size_t> ord;
      std::stringstream ss(ordering);
      for (std::string item; std::getline(ss, item, ',');) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
          throw ParseError("--ordering expects comma-separated edge indices");
        }
        ord.push_back(std::stoul(item));
      }
      cfg.ordering = std::move(ord);
    }
    if (hilbert->parsed()) return cmd_hilbert(cfg, in, out);
    if (count->parsed()) return cmd_count(cfg, in, out);
    if (orient->parsed()) return cmd_orient_check(cfg, in, out);
    return cmd_verify(cfg, in, out);
  } catch (const SizeLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace circalg::cli
