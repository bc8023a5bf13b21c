#include <fstream>
#include <memory>
#include <sstream>

#include "cli_internal.hpp"
#include "splitkit/catalog.hpp"
#include "splitkit/certificate.hpp"
#include "splitkit/error.hpp"
#include "splitkit/exact_solver.hpp"
#include "splitkit/properties.hpp"
#include "splitkit/reductions.hpp"

namespace splitkit::cli {

namespace {

struct ReduceArgs {
  std::string kind;
  std::string graph;
  std::size_t k = 0;
  std::size_t ell = 1;
  std::string out;
  std::string meta;
  // constr only
  std::string h_file, pattern;
  Vertex a = 0, b = 1;
  std::string a1, a2, b1, b2, s;
};

nlohmann::json arc_json(const SkeletonArc& a) { return {a.first, a.second}; }

nlohmann::json chi_json(const std::map<Vertex, VertexSet>& cv, const std::map<SkeletonArc, VertexSet>& ca) {
  nlohmann::json vertices = nlohmann::json::array(), arcs = nlohmann::json::array();
  for (const auto& [v, set] : cv) vertices.push_back({{"vertex", v}, {"set", set}});
  for (const auto& [arc, set] : ca) arcs.push_back({{"arc", arc_json(arc)}, {"set", set}});
  return {{"vertices", vertices}, {"arcs", arcs}};
}

nlohmann::json config_json(const SplittingConfiguration& c) {
  return {{"h", graph_to_json(c.h)}, {"a", c.a},   {"b", c.b},  {"a1", c.a1set},
          {"a2", c.a2set},           {"b1", c.b1set}, {"b2", c.b2set}};
}

SplittingConfiguration config_from_json(const nlohmann::json& j) {
  SplittingConfiguration c{graph_from_json(j.at("h")), j.at("a").get<Vertex>(), j.at("a1").get<VertexSet>(),
                           j.at("a2").get<VertexSet>(), j.at("b").get<Vertex>(), j.at("b1").get<VertexSet>(),
                           j.at("b2").get<VertexSet>()};
  c.validate();
  return c;
}

SplittingConfiguration config_from_args(const ReduceArgs& a) {
  if (a.h_file.empty() == a.pattern.empty()) throw Error("constr needs exactly one of --gadget or --pattern");
  const Graph h = a.h_file.empty() ? pattern_graph(a.pattern) : read_graph_file(a.h_file);
  const bool explicit_sets = !(a.a1.empty() && a.a2.empty() && a.b1.empty() && a.b2.empty());
  if (!explicit_sets) return neighbour_configuration(h, a.a, a.b);
  SplittingConfiguration c{h, a.a, parse_vertex_csv(a.a1), parse_vertex_csv(a.a2),
                           a.b, parse_vertex_csv(a.b1), parse_vertex_csv(a.b2)};
  c.validate();
  return c;
}

// Everything verify-reduction needs, rebuilt from the source graph and parameters.
struct Built {
  Graph graph;
  std::size_t instance_k = 0;
  std::vector<std::string> warnings;
  std::optional<ConstrResult> gadgets;  // chi for bipartite, perfect, constr
  std::optional<Subdivision> sub;
  std::optional<ParaNpInstance> paranp;
  std::optional<SplittingConfiguration> config;
};

Built build(const std::string& kind, const Graph& source, std::size_t k, const nlohmann::json& params) {
  Built out;
  if (kind == "subdivided-vc") {
    VcInstance inst = subdivided_vc_instance(source, params.at("ell").get<std::size_t>(), k);
    out.graph = inst.sub.graph;
    out.instance_k = inst.k;
    out.sub = std::move(inst.sub);
  } else if (kind == "bipartite" || kind == "perfect") {
    ReductionInstance inst = kind == "bipartite" ? bipartite_reduction(source, k) : perfect_reduction(source, k);
    out.graph = inst.graph;
    out.instance_k = inst.k;
    out.warnings = inst.warnings;
    out.gadgets = ConstrResult{inst.graph, inst.chi_vertex, inst.chi_arc, {}, 0};
  } else if (kind == "paranp") {
    out.paranp = paranp_reduction(source, k);
    out.graph = out.paranp->graph;
    out.instance_k = k;
  } else if (kind == "constr") {
    out.config = config_from_json(params.at("config"));
    out.gadgets = constr(DiGraph::ascending_orientation(source), *out.config, params.at("s").get<VertexSet>());
    out.graph = out.gadgets->graph;
    out.instance_k = k;
  } else {
    throw Error("unknown reduction '" + kind + "'");
  }
  return out;
}

nlohmann::json metadata(const std::string& kind, const Graph& source, std::size_t k, const nlohmann::json& params,
                        const Built& b) {
  nlohmann::json m{{"reduction", kind},
                   {"source", graph_to_json(source)},
                   {"k", k},
                   {"instance_k", b.instance_k},
                   {"instance", {{"vertices", b.graph.vertex_count()},
                                 {"edges", b.graph.edge_count()},
                                 {"fingerprint", graph_fingerprint(b.graph)}}},
                   {"warnings", b.warnings}};
  for (const auto& [key, value] : params.items()) m[key] = value;
  if (b.gadgets) m["chi"] = chi_json(b.gadgets->chi_vertex, b.gadgets->chi_arc);
  if (b.sub) {
    nlohmann::json paths = nlohmann::json::array();
    for (const auto& [e, path] : b.sub->paths) paths.push_back({{"edge", {e.first, e.second}}, {"path", path}});
    m["paths"] = paths;
  }
  if (b.paranp) {
    nlohmann::json copies = nlohmann::json::array();
    for (const auto& copy : b.paranp->copies) {
      nlohmann::json pairs = nlohmann::json::array();
      for (const auto& [v, x] : copy) pairs.push_back({v, x});
      copies.push_back(pairs);
    }
    m["copies"] = copies;
    m["apex"] = b.paranp->apex;
    m["triangles"] = b.paranp->triangles;
  }
  return m;
}

int cmd_reduce(const Context& ctx, const ReduceArgs& a) {
  Stopwatch clock;
  RunReport r("reduce");
  r.route = a.kind;
  const Graph source = read_graph_file(a.graph);
  nlohmann::json params = nlohmann::json::object();
  if (a.kind == "subdivided-vc") params["ell"] = a.ell;
  if (a.kind == "constr") {
    const SplittingConfiguration c = config_from_args(a);
    params["config"] = config_json(c);
    params["s"] = parse_vertex_csv(a.s);
    if (auto w = width(c)) params["width"] = *w;
  }
  const Built b = build(a.kind, source, a.k, params);
  const nlohmann::json meta = metadata(a.kind, source, a.k, params, b);
  write_graph_output(a.out, b.graph, ctx.out);
  const std::string meta_path = a.meta.empty() ? a.out + ".json" : a.meta;
  write_json_file(meta_path, meta);

  r.decision = "pass";
  r.details["instance"] = a.out;
  r.details["metadata"] = meta_path;
  r.details["vertices"] = b.graph.vertex_count();
  r.details["edges"] = b.graph.edge_count();
  r.details["instance_k"] = b.instance_k;
  for (const auto& w : b.warnings) ctx.err << "warning: " << w << '\n';
  return finish(ctx, r, clock);
}

struct VerifyReductionArgs {
  std::string meta, instance, cert, cover, source_cover, coloring;
  std::string mode = "induced";
};

class Checks {
 public:
  explicit Checks(RunReport& r) : r_(r) {}
  void add(const std::string& name, bool ok, const std::string& note = "") {
    all_ok_ = all_ok_ && ok;
    r_.details["check " + name] = ok ? (note.empty() ? "pass" : "pass: " + note) : "fail: " + note;
  }
  bool ok() const { return all_ok_; }

 private:
  RunReport& r_;
  bool all_ok_ = true;
};

std::vector<Vertex> read_list_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot read " + path);
  std::stringstream ss;
  for (std::string line; std::getline(f, line);)
    if (auto hash = line.find('#'); hash != std::string::npos) ss << line.substr(0, hash) << ' ';
    else ss << line << ' ';
  return parse_vertex_list(ss.str());
}

void check_certificate(const Built& b, const std::string& kind, const Graph& source, const VerifyReductionArgs& a,
                       Checks& checks) {
  const Certificate cert = read_certificate_file(a.cert);
  if (!cert.matches(b.graph)) {
    checks.add("certificate", false, "header does not match the instance");
    return;
  }
  std::optional<SplittingSequence> seq;
  try {
    seq.emplace(b.graph, cert.steps);
  } catch (const Error& e) {
    checks.add("certificate", false, e.what());
    return;
  }
  checks.add("certificate", true, std::to_string(seq->size()) + " splits");
  checks.add("budget", seq->size() <= b.instance_k,
             std::to_string(seq->size()) + " <= " + std::to_string(b.instance_k));

  if (kind == "paranp") {
    auto colouring = sequence_to_coloring(*seq, *b.paranp);
    checks.add("final-free", colouring.has_value(), "triangle-free final graph");
    if (colouring) checks.add("coloring", is_proper_coloring(source, *colouring), "proper 3-colouring of the source");
    return;
  }
  if (!b.gadgets) {
    checks.add("final-free", false, "certificates are not defined for " + kind);
    return;
  }
  ForbiddenFamily fam = kind == "bipartite" ? ForbiddenFamily::odd_cycles()
                        : kind == "perfect" ? ForbiddenFamily::odd_holes_antiholes()
                                            : ForbiddenFamily::finite({b.config->h}, a.mode == "subgraph"
                                                                                         ? EmbedMode::subgraph
                                                                                         : EmbedMode::induced);
  bool free = false;
  try {
    free = is_free(seq->current(), fam);
  } catch (const CapExceeded& e) {
    checks.add("final-free", false, e.what());
    return;
  }
  checks.add("final-free", free);
  if (!free) return;
  const VertexSet cover = extract_vertex_cover(*seq, *b.gadgets, DiGraph::ascending_orientation(source));
  checks.add("cover", is_vertex_cover(source, cover) && cover.size() <= seq->size(),
             to_string(cover) + " of size " + std::to_string(cover.size()));
}

int cmd_verify_reduction(const Context& ctx, const VerifyReductionArgs& a) {
  Stopwatch clock;
  RunReport r("verify-reduction");
  const nlohmann::json meta = read_json_file(a.meta);
  const std::string kind = meta.at("reduction").get<std::string>();
  r.route = kind;
  const Graph source = graph_from_json(meta.at("source"));
  const std::size_t k = meta.at("k").get<std::size_t>();
  const Built b = build(kind, source, k, meta);
  const Graph instance = read_graph_file(a.instance);

  Checks checks(r);
  checks.add("instance", instance == b.graph, "rebuilt from the source graph and parameters");
  bool meta_ok = meta.at("instance_k").get<std::size_t>() == b.instance_k &&
                 meta.at("instance").at("fingerprint").get<std::uint64_t>() == graph_fingerprint(b.graph);
  if (b.gadgets) meta_ok = meta_ok && meta.at("chi") == chi_json(b.gadgets->chi_vertex, b.gadgets->chi_arc);
  checks.add("metadata", meta_ok);

  if (!a.cert.empty()) check_certificate(b, kind, source, a, checks);

  if (!a.cover.empty() || !a.source_cover.empty()) {
    if (kind != "subdivided-vc") throw Error("vertex covers are only checked for subdivided-vc");
    if (!a.cover.empty()) {
      const auto list = read_list_file(a.cover);
      const VertexSet c(list.begin(), list.end());
      const bool valid = is_vertex_cover(b.graph, c) && c.size() <= b.instance_k;
      checks.add("cover", valid, "size " + std::to_string(c.size()) + " on the subdivision");
      if (valid) {
        const VertexSet back = backward_vc_map(source, *b.sub, c);
        checks.add("backward", is_vertex_cover(source, back) && back.size() <= k,
                   to_string(back) + " of size " + std::to_string(back.size()));
      }
    }
    if (!a.source_cover.empty()) {
      const auto list = read_list_file(a.source_cover);
      const VertexSet c(list.begin(), list.end());
      const bool valid = is_vertex_cover(source, c) && c.size() <= k;
      checks.add("source-cover", valid, "size " + std::to_string(c.size()) + " on the cubic graph");
      if (valid) {
        const VertexSet fwd = forward_vc_map(source, *b.sub, c);
        checks.add("forward", is_vertex_cover(b.graph, fwd) && fwd.size() <= b.instance_k,
                   "size " + std::to_string(fwd.size()));
      }
    }
  }

  if (!a.coloring.empty()) {
    if (kind != "paranp") throw Error("colourings are only checked for paranp");
    const auto list = read_list_file(a.coloring);
    const auto vertices = source.vertices();
    if (list.size() != vertices.size()) throw Error("colouring needs one colour per source vertex");
    Coloring c;
    for (std::size_t i = 0; i < list.size(); ++i) c[vertices[i]] = static_cast<int>(list[i]);
    const bool proper = is_proper_coloring(source, c);
    checks.add("coloring-input", proper);
    if (proper) {
      const SplittingSequence seq = coloring_to_sequence(*b.paranp, c);
      const Verdict v = verify_certificate(seq, ForbiddenFamily::finite({complete_graph(3)}, EmbedMode::subgraph),
                                           b.instance_k);
      checks.add("forward", static_cast<bool>(v), v.reason);
    }
  }

  r.decision = checks.ok() ? "pass" : "fail";
  return finish(ctx, r, clock);
}

}  // namespace

void add_reduce_commands(CLI::App& app, Context& ctx, int& code) {
  auto* reduce = app.add_subcommand("reduce", "Build a reduction instance plus a JSON metadata sidecar");
  reduce->require_subcommand(1);
  const std::pair<const char*, const char*> kinds[] = {
      {"subdivided-vc", "Cubic graph with every edge subdivided 2*ell times"},
      {"bipartite", "Apex per edge of a subdivided cubic graph"},
      {"perfect", "Path of three per edge of a subdivided cubic graph"},
      {"paranp", "Three copies of a triangle-free graph under one apex"},
      {"constr", "Gadget copy per skeleton arc, glued at split ends"},
  };
  for (const auto& [kind, about] : kinds) {
    auto args = std::make_shared<ReduceArgs>();
    args->kind = kind;
    const bool is_constr = std::string(kind) == "constr";
    auto* sub = reduce->add_subcommand(kind, about);
    sub->add_option(is_constr ? "--skeleton" : "--graph", args->graph,
                    is_constr ? "Skeleton graph, oriented from smaller to larger id" : "Source graph")
        ->required();
    sub->add_option("--k", args->k, "Budget of the source instance")->required();
    sub->add_option("--out", args->out, "Instance graph file")->required();
    sub->add_option("--meta", args->meta, "Metadata file (default <out>.json)");
    if (std::string(kind) == "subdivided-vc") sub->add_option("--ell", args->ell, "Each edge gets 2*ell new vertices");
    if (is_constr) {
      sub->add_option("--gadget", args->h_file, "Gadget graph file");
      sub->add_option("--pattern", args->pattern, "Gadget graph as a pattern token, e.g. K3 or C4");
      sub->add_option("--a", args->a, "First end");
      sub->add_option("--b", args->b, "Second end");
      sub->add_option("--a1", args->a1, "Neighbours of the first descendant of a (csv)");
      sub->add_option("--a2", args->a2, "Neighbours of the second descendant of a (csv)");
      sub->add_option("--b1", args->b1, "Neighbours of the first descendant of b (csv)");
      sub->add_option("--b2", args->b2, "Neighbours of the second descendant of b (csv)");
      sub->add_option("--s", args->s, "Skeleton vertices whose ends are split (csv)");
    }
    sub->callback([&ctx, &code, args] { code = cmd_reduce(ctx, *args); });
  }

  auto vr = std::make_shared<VerifyReductionArgs>();
  auto* verify = app.add_subcommand("verify-reduction", "Rebuild an instance from its metadata and check translations");
  verify->add_option("--meta", vr->meta, "Metadata written by reduce")->required();
  verify->add_option("--instance", vr->instance, "Instance graph file")->required();
  verify->add_option("--cert", vr->cert, "Splitting certificate on the instance");
  verify->add_option("--cover", vr->cover, "File listing a vertex cover of the subdivided graph");
  verify->add_option("--source-cover", vr->source_cover, "File listing a vertex cover of the cubic source graph");
  verify->add_option("--coloring", vr->coloring, "File listing colours 1..3 of the source vertices in ascending order");
  verify->add_option("--mode", vr->mode, "induced | subgraph, for constr certificates");
  verify->callback([&ctx, &code, vr] { code = cmd_verify_reduction(ctx, *vr); });
}

}  // namespace splitkit::cli
