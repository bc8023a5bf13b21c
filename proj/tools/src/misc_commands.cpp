#include <algorithm>
#include <cctype>
#include <fstream>
#include <memory>

#include "cli_internal.hpp"
#include "splitkit/canonical.hpp"
#include "splitkit/catalog.hpp"
#include "splitkit/error.hpp"
#include "splitkit/properties.hpp"
#include "splitkit/reductions.hpp"
#include "splitkit/small_families.hpp"
#include "splitkit_cli/family_spec.hpp"

namespace splitkit::cli {

namespace {

struct GenArgs {
  std::vector<std::string> words;
  std::uint64_t seed = 1;
  std::string out;
};

std::size_t to_size(const std::string& s) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size()) throw Error("expected a non-negative integer, got '" + s + "'");
  return v;
}

Graph generate(const GenArgs& a, RunReport& r) {
  const auto& w = a.words;
  auto need = [&](std::size_t n) {
    if (w.size() != n + 1) throw Error("gen " + w[0] + " takes " + std::to_string(n) + " argument(s)");
  };
  std::string name = w.at(0);
  if (name == "cubic") {
    need(1);
    return cubic_graph(w[1]);
  }
  if (name == "pattern") {
    need(1);
    return pattern_graph(w[1]);
  }
  if (name == "cliques") {
    need(2);
    return overlapping_cliques(to_size(w[1]), to_size(w[2]));
  }
  if (name == "random" || name == "random-m") {
    need(2);
    r.seed = a.seed;
    if (name == "random-m") return random_graph_m(to_size(w[1]), to_size(w[2]), a.seed);
    double p = 0;
    try {
      p = std::stod(w[2]);
    } catch (const std::exception&) {
      throw Error("bad edge probability '" + w[2] + "'");
    }
    if (p < 0 || p > 1) throw Error("edge probability must lie in [0, 1]");
    return random_graph(to_size(w[1]), p, a.seed);
  }
  // k 4, c 5, co-p 3, claw 4 ...
  need(1);
  std::string prefix;
  if (name.rfind("co-", 0) == 0) {
    prefix = "co-";
    name = name.substr(3);
  }
  if (name.size() == 1) name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  return named_graph(prefix + name, to_size(w[1]));
}

int cmd_gen(const Context& ctx, const GenArgs& a) {
  Stopwatch clock;
  RunReport r("gen");
  const Graph g = generate(a, r);
  std::string header = "# splitkit gen";
  for (const auto& w : a.words) header += " " + w;
  if (r.seed) header += " --seed " + std::to_string(*r.seed);
  if (a.out.empty() || a.out == "-") {
    // the graph itself is the output; a JSON report would corrupt it
    ctx.out << header << '\n';
    write_graph_output("-", g, ctx.out);
    return 0;
  }
  std::ofstream f(a.out);
  if (!f) throw Error("cannot write " + a.out);
  f << header << '\n';
  write_graph_output("-", g, f);
  r.decision = "pass";
  r.details["output"] = a.out;
  r.details["vertices"] = g.vertex_count();
  r.details["edges"] = g.edge_count();
  return finish(ctx, r, clock);
}

struct StatsArgs {
  std::string graph;
  std::string family;
};

int cmd_stats(const Context& ctx, const StatsArgs& a) {
  Stopwatch clock;
  RunReport r("stats");
  r.decision = "pass";
  const Graph g = read_graph_file(a.graph);
  auto& d = r.details;
  d["vertices"] = g.vertex_count();
  d["edges"] = g.edge_count();
  std::size_t lo = g.empty() ? 0 : g.vertex_count(), hi = 0;
  for (Vertex v : g.vertices()) {
    lo = std::min(lo, g.degree(v));
    hi = std::max(hi, g.degree(v));
  }
  d["min_degree"] = lo;
  d["max_degree"] = hi;
  d["isolated"] = g.isolated_vertices().size();
  d["triangles"] = triangles(g).size();
  d["components"] = components(g).size();
  d["bipartite"] = is_bipartite(g);
  if (auto diam = diameter(g)) d["diameter"] = *diam;
  else d["diameter"] = "infinite";
  d["threshold"] = recognize_threshold(g);
  d["split_graph"] = recognize_split(g);
  d["p3_k3_threshold"] = p3_k3_threshold(g);
  if (auto len = cubic_subdivision_length(g)) d["cubic_subdivision_length"] = *len;
  d["fingerprint"] = graph_fingerprint(g);
  if (!a.family.empty()) {
    const FamilySpec spec = parse_family_spec(a.family);
    d["family"] = format_family_spec(spec);
    d["free"] = is_free(g, spec.family());
  }
  return finish(ctx, r, clock);
}

}  // namespace

void add_misc_commands(CLI::App& app, Context& ctx, int& code) {
  auto gen = std::make_shared<GenArgs>();
  auto* gen_cmd = app.add_subcommand(
      "gen", "Write a graph: k|p|c|e|claw N, co-<name> N, cubic NAME, pattern TOKEN, cliques P SHARED, "
             "random N P, random-m N M");
  gen_cmd->add_option("what", gen->words, "Generator and its arguments")->required();
  gen_cmd->add_option("--seed", gen->seed, "Seed for random generators");
  gen_cmd->add_option("--out", gen->out, "Output file (default stdout)");
  gen_cmd->callback([&ctx, &code, gen] { code = cmd_gen(ctx, *gen); });

  auto stats = std::make_shared<StatsArgs>();
  auto* stats_cmd = app.add_subcommand("stats", "Structural summary of a graph");
  stats_cmd->add_option("--graph", stats->graph, "Graph file")->required();
  stats_cmd->add_option("--family", stats->family, "Also report freeness of this family");
  stats_cmd->callback([&ctx, &code, stats] { code = cmd_stats(ctx, *stats); });
}

}  // namespace splitkit::cli
