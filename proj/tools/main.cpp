// hq: command-line front end. Vertex arguments (--at, --seq) are 1-based;
// JSON files use 0-based vertices.

#include <CLI11.hpp>

#include <iostream>
#include <set>
#include <sstream>
#include <tuple>

#include "hq/examples.hpp"
#include "hq/io.hpp"

#ifndef HQ_DATA_DIR
#define HQ_DATA_DIR "data"
#endif

using namespace hq;

namespace {

int exit_code(const Error& e) { return e.code() == ErrorCode::DecisionUnknown ? 2 : 1; }

void emit(const json& j, const std::string& out) {
  std::string text = j.dump(2) + "\n";
  if (out.empty()) std::cout << text;
  else write_text_file(out, text);
}

std::vector<VertexId> parse_sequence(const std::string& s, int n) {
  std::vector<VertexId> ks;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    int k = 0;
    try {
      k = std::stoi(item);
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidInput, "bad vertex '" + item + "' in --seq");
    }
    if (k < 1 || k > n) fail(ErrorCode::InvalidInput, "vertex " + item + " out of range 1.." + std::to_string(n));
    ks.push_back(k - 1);
  }
  if (ks.empty()) fail(ErrorCode::InvalidInput, "empty --seq");
  return ks;
}

VertexId vertex_arg(int k, int n) {
  if (k < 1 || k > n) fail(ErrorCode::InvalidInput, "vertex " + std::to_string(k) + " out of range 1.." + std::to_string(n));
  return k - 1;
}

// Arrow set as (src, tgt, label) with 1-based vertices, order-insensitive.
using ArrowSet = std::multiset<std::tuple<int, int, std::string>>;

ArrowSet arrow_set(const Quiver& q) {
  ArrowSet s;
  for (const Arrow& a : q.arrows()) s.insert({a.src + 1, a.tgt + 1, a.label});
  return s;
}

ArrowSet arrow_set(const json& arrows) {
  ArrowSet s;
  for (const auto& a : arrows) s.insert({a.at("src").get<int>(), a.at("tgt").get<int>(), a.at("label").get<std::string>()});
  return s;
}

json arrow_set_json(const ArrowSet& s) {
  json a = json::array();
  for (const auto& [src, tgt, label] : s) a.push_back({{"label", label}, {"src", src}, {"tgt", tgt}});
  return a;
}

json repro_three_cycle(const json& golden, bool& match) {
  Quiver q = three_cycle_quiver();
  json out = json::object();
  struct Case {
    const char* key;
    HomotopyOracle h;
  };
  std::vector<Case> cases = {{"trivial", HomotopyOracle::trivial(q)},
                             {"cycle", HomotopyOracle::generated(q, {three_cycle_walk(q)})}};
  for (auto& c : cases) {
    TrackedQuiver t = mutate(init_tracked(q, c.h), 1);
    ArrowSet got = arrow_set(t.current);
    bool ok = golden.contains(c.key) && arrow_set(golden[c.key]) == got;
    match = match && ok;
    out[c.key] = {{"arrows", arrow_set_json(got)}, {"match", ok}};
  }
  return out;
}

json repro_markov(const json& golden, bool& match) {
  Quiver q = markov_quiver();
  auto gens = markov_homotopy_generators(q);
  json rows = json::array();
  for (std::size_t h = 0; h < gens.size(); ++h) {
    TrackedQuiver t = init_tracked(q, HomotopyOracle::generated(q, gens[h]));
    std::vector<int> counts;
    for (VertexId k = 0; k < 3; ++k) counts.push_back(static_cast<int>(mutate(t, k).deletions.size()));
    std::string key = "H" + std::to_string(h + 1);
    bool ok = golden.contains(key) && golden[key].get<std::vector<int>>() == counts;
    match = match && ok;
    rows.push_back({{"homotopy", key}, {"deleted", counts}, {"match", ok}});
  }
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quivers with homotopies: mutation, coverings, surfaces and cluster seeds"};
  app.require_subcommand(1);

  std::string quiver_path, homotopy_path, cover_path, tri_path, seed_path, out_path, dot_path, seq, report_path;
  std::string format = "json", golden_dir = std::string(HQ_DATA_DIR) + "/golden";
  int at = 0, depth = 0, max_nodes = 1000, paths = 0;
  bool exhaustive = false, all_nodes = false;
  std::uint64_t rng_seed = 1;

  auto* mutate_cmd = app.add_subcommand("mutate", "Mutate a quiver with homotopy");
  mutate_cmd->add_option("--quiver", quiver_path, "quiver JSON")->required();
  mutate_cmd->add_option("--homotopy", homotopy_path, "homotopy JSON (default: full)");
  auto* at_opt = mutate_cmd->add_option("--at", at, "vertex (1-based)");
  auto* seq_opt = mutate_cmd->add_option("--seq", seq, "comma-separated vertices (1-based)");
  at_opt->excludes(seq_opt);
  mutate_cmd->add_option("--out", out_path, "result JSON (default: stdout)");
  mutate_cmd->add_option("--dot", dot_path, "DOT of the mutated quiver");

  auto* orbit_cmd = app.add_subcommand("orbit-mutate", "Orbit mutation of a covering");
  orbit_cmd->add_option("--cover", cover_path, "covering JSON")->required();
  orbit_cmd->add_option("--at", at, "base vertex (1-based)")->required();
  orbit_cmd->add_option("--out", out_path, "result JSON (default: stdout)");
  orbit_cmd->add_option("--dot", dot_path, "DOT of the mutated total quiver");

  auto* global_cmd = app.add_subcommand("check-global", "Bounded check of global weak admissibility");
  global_cmd->add_option("--cover", cover_path, "covering JSON")->required();
  global_cmd->add_option("--depth", depth, "sequence length bound")->required()->check(CLI::Range(0, 12));
  global_cmd->add_option("--out", out_path, "result JSON (default: stdout)");

  auto* flip_cmd = app.add_subcommand("flip", "Flip a tagged arc");
  flip_cmd->add_option("--tri", tri_path, "triangulation JSON")->required();
  flip_cmd->add_option("--at", at, "arc (1-based)")->required();
  flip_cmd->add_option("--out", out_path, "result JSON (default: stdout)");

  auto* graph_cmd = app.add_subcommand("flip-graph", "Flip graph up to isomorphism");
  graph_cmd->add_option("--tri", tri_path, "triangulation JSON")->required();
  graph_cmd->add_option("--max-nodes", max_nodes, "node cap")->check(CLI::Range(1, 1000000));
  graph_cmd->add_option("--out", out_path, "result JSON (default: stdout)");
  graph_cmd->add_option("--dot", dot_path, "DOT of the flip graph");

  auto* verify_cmd = app.add_subcommand("verify-flip-mutation", "Check that flips agree with mutation");
  verify_cmd->add_option("--tri", tri_path, "triangulation JSON")->required();
  verify_cmd->add_flag("--all-nodes", all_nodes, "check every node of the flip graph");
  verify_cmd->add_option("--max-nodes", max_nodes, "node cap with --all-nodes")->check(CLI::Range(1, 1000000));
  verify_cmd->add_option("--out", out_path, "result JSON (default: stdout)");

  auto* cluster_cmd = app.add_subcommand("cluster-explore", "Explore cluster variables of a seed");
  cluster_cmd->add_option("--seed", seed_path, "seed JSON")->required();
  cluster_cmd->add_option("--depth", depth, "path length")->required()->check(CLI::Range(0, kMaxClusterDepth));
  auto* paths_opt = cluster_cmd->add_option("--paths", paths, "number of random paths")->check(CLI::PositiveNumber);
  auto* exh_opt = cluster_cmd->add_flag("--exhaustive", exhaustive, "all paths");
  paths_opt->excludes(exh_opt);
  cluster_cmd->add_option("--rng-seed", rng_seed, "seed for random paths");
  cluster_cmd->add_option("--report", report_path, "report JSON (default: stdout)");

  auto* export_cmd = app.add_subcommand("export", "Export a quiver, covering or triangulation quiver");
  auto* eq = export_cmd->add_option("--quiver", quiver_path, "quiver JSON");
  auto* ec = export_cmd->add_option("--cover", cover_path, "covering JSON");
  auto* et = export_cmd->add_option("--tri", tri_path, "triangulation JSON");
  eq->excludes(ec)->excludes(et);
  ec->excludes(et);
  export_cmd->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  export_cmd->add_flag("--dot", [&](std::int64_t) { format = "dot"; }, "same as --format dot");
  export_cmd->add_option("--out", out_path, "output file (default: stdout)");

  std::string target;
  auto* repro_cmd = app.add_subcommand("repro", "Replay a worked example against its golden file");
  repro_cmd->add_option("target", target, "fig1 | markov-homotopies")
      ->required()
      ->check(CLI::IsMember({"fig1", "markov-homotopies"}));
  repro_cmd->add_option("--golden-dir", golden_dir, "directory with golden files");
  repro_cmd->add_option("--out", out_path, "result JSON (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    json err = {{"error", "UsageError"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  }

  try {
    if (mutate_cmd->parsed()) {
      Quiver q = quiver_from_json(read_json_file(quiver_path), "");
      HomotopyOracle h = homotopy_path.empty() ? HomotopyOracle::full(q)
                                               : homotopy_from_json(q, read_json_file(homotopy_path));
      std::vector<VertexId> ks;
      if (!seq.empty()) ks = parse_sequence(seq, q.num_vertices());
      else if (*at_opt) ks = {vertex_arg(at, q.num_vertices())};
      else fail(ErrorCode::InvalidInput, "mutate needs --at or --seq");
      TrackedQuiver t = init_tracked(q, h);
      for (VertexId k : ks) t = mutate(t, k);
      emit(tracked_to_json(t), out_path);
      if (!dot_path.empty()) write_text_file(dot_path, quiver_to_dot(t.current, "mutated"));
    } else if (orbit_cmd->parsed()) {
      Covering c = covering_from_json(read_json_file(cover_path));
      VertexId k = vertex_arg(at, c.base.num_vertices());
      Covering m = orbit_mutate(c, k);
      json j = {{"covering", covering_to_json(m)}, {"weakly_admissible", is_weakly_admissible(m)},
                {"sufficient_condition", sufficient_k_mutable(c, k)}};
      json loops = json::array();
      for (const Arrow& a : m.base.arrows())
        if (a.src == a.tgt) loops.push_back(a.src + 1);
      j["base_loops_at"] = loops;
      emit(j, out_path);
      if (!dot_path.empty()) write_text_file(dot_path, covering_to_dot(m));
    } else if (global_cmd->parsed()) {
      Covering c = covering_from_json(read_json_file(cover_path));
      GlobalCheck g = check_global_bounded(c, depth);
      json ce = json::array();
      for (VertexId k : g.counterexample) ce.push_back(k + 1);
      emit({{"ok", g.ok}, {"counterexample", ce}, {"nodes_visited", g.nodes_visited}}, out_path);
    } else if (flip_cmd->parsed()) {
      TaggedTriangulation t = triangulation_from_json(read_json_file(tri_path));
      emit(triangulation_to_json(flip(t, vertex_arg(at, t.ideal.num_arcs()))), out_path);
    } else if (graph_cmd->parsed()) {
      TaggedTriangulation t = triangulation_from_json(read_json_file(tri_path));
      FlipGraph g = flip_graph(t, max_nodes);
      emit(flip_graph_to_json(g), out_path);
      if (!dot_path.empty()) write_text_file(dot_path, flip_graph_to_dot(g));
    } else if (verify_cmd->parsed()) {
      TaggedTriangulation t = triangulation_from_json(read_json_file(tri_path));
      std::vector<TaggedTriangulation> nodes = {t};
      if (all_nodes) nodes = flip_graph(t, max_nodes).nodes;
      json results = json::array();
      bool all = true;
      for (std::size_t v = 0; v < nodes.size(); ++v)
        for (int k = 0; k < nodes[v].ideal.num_arcs(); ++k) {
          bool ok = verify_flip_mutation(nodes[v], k);
          all = all && ok;
          results.push_back({{"node", v}, {"arc", k + 1}, {"ok", ok}});
        }
      emit({{"all_passed", all}, {"results", results}}, out_path);
    } else if (cluster_cmd->parsed()) {
      Seed s = seed_from_json(read_json_file(seed_path));
      if (!exhaustive && paths == 0) fail(ErrorCode::InvalidInput, "cluster-explore needs --paths N or --exhaustive");
      LaurentReport r = explore_laurent(s, depth, exhaustive, paths, rng_seed);
      emit(laurent_report_to_json(r), report_path);
    } else if (export_cmd->parsed()) {
      std::string text;
      if (!quiver_path.empty()) {
        Quiver q = quiver_from_json(read_json_file(quiver_path));
        text = format == "dot" ? quiver_to_dot(q) : quiver_to_json(q).dump(2) + "\n";
      } else if (!cover_path.empty()) {
        Covering c = covering_from_json(read_json_file(cover_path));
        text = format == "dot" ? covering_to_dot(c) : covering_to_json(c).dump(2) + "\n";
      } else if (!tri_path.empty()) {
        TaggedTriangulation t = triangulation_from_json(read_json_file(tri_path));
        Quiver q = build_surface_quiver(t).quiver;
        text = format == "dot" ? quiver_to_dot(q, "QT") : quiver_to_json(q).dump(2) + "\n";
      } else {
        fail(ErrorCode::InvalidInput, "export needs --quiver, --cover or --tri");
      }
      if (out_path.empty()) std::cout << text;
      else write_text_file(out_path, text);
    } else if (repro_cmd->parsed()) {
      std::string file = golden_dir + "/" + target + ".json";
      json golden = read_json_file(file);
      bool match = true;
      json result = target == "fig1" ? repro_three_cycle(golden, match) : repro_markov(golden, match);
      emit({{"target", target}, {"golden", file}, {"match", match}, {"result", result}}, out_path);
      if (!match) {
        std::cerr << json({{"error", "GoldenMismatch"}, {"target", target}}).dump() << "\n";
        return 1;
      }
    }
  } catch (const Error& e) {
    std::cerr << error_to_json(e).dump() << "\n";
    return exit_code(e);
  } catch (const json::exception& e) {
    std::cerr << json({{"error", "SchemaViolation"}, {"message", e.what()}}).dump() << "\n";
    return 1;
  }
  return 0;
}
