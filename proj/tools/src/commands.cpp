#include "splitkit_cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cli_internal.hpp"
#include "splitkit/certificate.hpp"
#include "splitkit/error.hpp"

namespace splitkit::cli {

int RunReport::exit_code() const {
  if (decision == "yes" || decision == "pass") return 0;
  if (decision == "no" || decision == "fail") return 1;
  return 2;
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json j{{"command", command}, {"decision", decision}, {"wall_ms", wall_ms}};
  if (!solver.empty()) j["solver"] = solver;
  if (!route.empty()) j["route"] = route;
  if (!certificate_path.empty()) j["certificate_path"] = certificate_path;
  if (!caps_hit.empty()) j["caps_hit"] = caps_hit;
  if (seed) j["seed"] = *seed;
  for (const auto& [key, value] : details.items()) j[key] = value;
  return j;
}

VertexSet parse_vertex_csv(const std::string& csv) {
  auto list = parse_vertex_list(csv);
  return VertexSet(list.begin(), list.end());
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<Vertex> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw Error("bad vertex id '" + tok + "'");
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.first, e.second});
  return {{"vertices", g.vertices()}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) {
  Graph g;
  for (Vertex v : j.at("vertices").get<std::vector<Vertex>>()) g.add_vertex(v);
  for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
  return g;
}

nlohmann::json steps_to_json(const std::vector<SplitSpec>& steps) {
  nlohmann::json out = nlohmann::json::array();
  for (const SplitSpec& s : steps)
    out.push_back({{"target", s.target},
                   {"part1", s.part1},
                   {"part2", s.part2},
                   {"child1", s.child1},
                   {"child2", s.child2}});
  return out;
}

void write_graph_output(const std::string& path, const Graph& g, std::ostream& out) {
  const Graph compact = g.is_compact() ? g : compacted(g).graph;
  if (path.empty() || path == "-") write_graph(out, compact);
  else write_graph_file(path, compact);
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  f << j.dump(2) << '\n';
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot read " + path);
  try {
    return nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw Error(path + ": " + e.what());
  }
}

int finish(const Context& ctx, RunReport& report, const Stopwatch& clock) {
  report.wall_ms = clock.ms();
  if (ctx.json) {
    ctx.out << report.to_json().dump(2) << '\n';
    return report.exit_code();
  }
  ctx.out << report.decision;
  if (!report.solver.empty()) {
    ctx.out << " (" << report.solver;
    if (!report.route.empty()) ctx.out << ": " << report.route;
    ctx.out << ')';
  }
  ctx.out << '\n';
  for (const auto& [key, value] : report.details.items()) {
    if (value.is_array() && !value.empty() && value.front().is_structured()) continue;
    ctx.out << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  for (const auto& c : report.caps_hit) ctx.out << "  cap: " << c << '\n';
  if (report.seed) ctx.out << "  seed: " << *report.seed << '\n';
  if (!report.certificate_path.empty()) ctx.out << "  certificate: " << report.certificate_path << '\n';
  return report.exit_code();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vertex splitting toolkit: deciders, exact oracle, reductions and certificate checks", "splitkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx{out, err};
  app.add_flag("--json", ctx.json, "Machine-readable output");
  int code = 2;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    add_solver_commands(app, ctx, code);
    add_reduce_commands(app, ctx, code);
    add_misc_commands(app, ctx, code);
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    if (ctx.json) out << nlohmann::json{{"decision", "error"}, {"error", e.what()}}.dump(2) << '\n';
    err << "splitkit: " << e.what() << '\n';
    return 2;
  }
  return code;
}

}  // namespace splitkit::cli
