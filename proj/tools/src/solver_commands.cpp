#include <fstream>
#include <memory>

#include "cli_internal.hpp"
#include "splitkit/canonical.hpp"
#include "splitkit/certificate.hpp"
#include "splitkit/error.hpp"
#include "splitkit/exact_solver.hpp"
#include "splitkit/shallow_tfvs.hpp"
#include "splitkit/small_families.hpp"
#include "splitkit_cli/family_spec.hpp"

namespace splitkit::cli {

namespace {

struct SolveArgs {
  std::string graph;
  std::string family;
  std::size_t k = 0;
  std::string mode = "general";
  std::size_t cap = kCanonicalCap;
  bool allow_trivial = false;
  std::string emit_cert;
  std::string emit_model;
};

void add_common(CLI::App* sub, SolveArgs& a, bool with_family) {
  sub->add_option("--graph", a.graph, "Graph file")->required();
  if (with_family) sub->add_option("--family", a.family, "Forbidden family, e.g. induced:{K3,P3} or cluster")->required();
  sub->add_option("--k", a.k, "Split budget")->required();
  sub->add_option("--emit-cert", a.emit_cert, "Write a certificate here on a yes answer");
}

// Same members up to isomorphism.
bool same_family(const ForbiddenFamily& a, const ForbiddenFamily& b) {
  if (a.kind() != FamilyKind::finite || b.kind() != FamilyKind::finite || a.mode() != b.mode()) return false;
  auto forms = [](const ForbiddenFamily& f) {
    std::vector<CanonicalForm> out;
    for (const Graph& g : f.patterns()) out.push_back(canonical_form(g));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  return forms(a) == forms(b);
}

void emit_certificate(const std::string& path, const Graph& g, const SplittingSequence& seq, RunReport& r) {
  r.details["certificate"] = steps_to_json(seq.steps());
  r.details["splits"] = seq.size();
  if (path.empty()) return;
  write_certificate_file(path, Certificate::of(g, seq.steps()));
  r.certificate_path = path;
}

void run_oracle(const Graph& g, const ForbiddenFamily& fam, const SolveArgs& a, RunReport& r,
                std::optional<SplittingSequence>& cert, const char* refused_as) {
  SolverOptions opts{parse_solve_mode(a.mode), a.cap, a.allow_trivial};
  SolveStats stats;
  r.solver = "exact-solver";
  try {
    cert = solve(g, fam, a.k, opts, &stats);
    r.decision = cert ? "yes" : "no";
  } catch (const CapExceeded& e) {
    r.decision = refused_as;
    r.caps_hit.push_back(e.what());
  }
  r.details["expanded"] = stats.expanded;
  r.details["generated"] = stats.generated;
  r.details["duplicates"] = stats.duplicates;
}

int cmd_solve(const Context& ctx, const SolveArgs& a) {
  Stopwatch clock;
  RunReport r("solve");
  const Graph g = read_graph_file(a.graph);
  const FamilySpec spec = parse_family_spec(a.family);
  const ForbiddenFamily fam = spec.family();
  const SolveMode mode = parse_solve_mode(a.mode);
  r.details["family"] = format_family_spec(spec);
  r.details["mode"] = to_string(mode);
  r.details["k"] = a.k;

  std::optional<SplittingSequence> cert;
  bool decided = false;
  bool np_hard = false;
  SmallFamily small;
  if (mode == SolveMode::general && as_small_family(fam, small)) {
    const DispatchResult d = dispatch(small, g, a.k);
    r.route = to_string(d.route);
    if (d.decision == Decision::np_hard) {
      np_hard = true;
    } else {
      decided = true;
      r.solver = "small-families";
      r.decision = d.decision == Decision::yes ? "yes" : "no";
      if (d.decision == Decision::yes) {
        if (d.route == Route::p3_k3_count) {
          cert = p3_k3_certificate(g);
        } else if (is_free(g, fam)) {
          cert = SplittingSequence(g);
        } else {
          // positive, but no constructive certificate from the polynomial rule
          try {
            cert = solve(g, fam, a.k, SolverOptions{mode, a.cap});
          } catch (const CapExceeded& e) {
            r.caps_hit.push_back(std::string("certificate: ") + e.what());
          }
        }
      }
    }
  } else if (mode == SolveMode::general && (same_family(fam, threshold_family()) || same_family(fam, split_graph_family()))) {
    // splits cannot repair these classes: the answer is recognition of g itself
    decided = true;
    r.solver = "recognition";
    r.route = same_family(fam, threshold_family()) ? "threshold" : "split-graph";
    const bool in_class = r.route == "threshold" ? recognize_threshold(g) : recognize_split(g);
    r.decision = in_class ? "yes" : "no";
    if (in_class) cert = SplittingSequence(g);
  }

  if (!decided && mode == SolveMode::shallow && spec.is_triangle()) {
    decided = true;
    ShallowStats stats;
    auto res = solve_shallow_tfvs(g, a.k, &stats);
    r.solver = "shallow-tfvs";
    r.decision = res ? "yes" : "no";
    if (res) cert = res->sequence;
    r.details["hitting_sets"] = stats.hitting_sets;
    r.details["two_sat_calls"] = stats.two_sat_calls;
  }
  if (!decided) run_oracle(g, fam, a, r, cert, np_hard ? "np-hard-delegated" : "refused");

  if (cert) {
    Verdict v = verify_certificate(*cert, fam, a.k, mode);
    if (!v) throw Error("internal: produced certificate fails verification: " + v.reason);
    emit_certificate(a.emit_cert, g, *cert, r);
  }
  return finish(ctx, r, clock);
}

int cmd_oracle(const Context& ctx, const SolveArgs& a) {
  Stopwatch clock;
  RunReport r("oracle");
  const Graph g = read_graph_file(a.graph);
  const FamilySpec spec = parse_family_spec(a.family);
  r.details["family"] = format_family_spec(spec);
  r.details["mode"] = to_string(parse_solve_mode(a.mode));
  r.details["k"] = a.k;
  std::optional<SplittingSequence> cert;
  run_oracle(g, spec.family(), a, r, cert, "refused");
  if (cert) emit_certificate(a.emit_cert, g, *cert, r);
  return finish(ctx, r, clock);
}

int cmd_shallow(const Context& ctx, const SolveArgs& a) {
  Stopwatch clock;
  RunReport r("shallow-tfvs");
  r.solver = "shallow-tfvs";
  const Graph g = read_graph_file(a.graph);
  ShallowStats stats;
  auto res = solve_shallow_tfvs(g, a.k, &stats);
  r.decision = res ? "yes" : "no";
  r.details["k"] = a.k;
  r.details["hitting_sets"] = stats.hitting_sets;
  r.details["guesses"] = stats.guesses;
  r.details["two_sat_calls"] = stats.two_sat_calls;
  if (res) {
    emit_certificate(a.emit_cert, g, res->sequence, r);
    if (!a.emit_model.empty()) {
      std::ofstream f(a.emit_model);
      if (!f) throw Error("cannot write " + a.emit_model);
      write_model(f, res->model);
    }
  }
  return finish(ctx, r, clock);
}

struct VerifyArgs {
  std::string graph, cert, family, mode = "general";
  std::size_t k = 0;
};

int cmd_verify(const Context& ctx, const VerifyArgs& a) {
  Stopwatch clock;
  RunReport r("verify");
  const Graph g = read_graph_file(a.graph);
  const FamilySpec spec = parse_family_spec(a.family);
  const SolveMode mode = parse_solve_mode(a.mode);
  const Certificate cert = read_certificate_file(a.cert);
  r.details["splits"] = cert.steps.size();
  if (!cert.matches(g)) {
    r.decision = "error";
    r.details["reason"] = "certificate header does not match the graph";
    return finish(ctx, r, clock);
  }
  try {
    SplittingSequence(g, cert.steps);
  } catch (const Error& e) {
    // stale or foreign vertex ids: the certificate does not describe this graph
    r.decision = "error";
    r.details["reason"] = e.what();
    return finish(ctx, r, clock);
  }
  const Verdict v = verify_certificate(g, cert.steps, spec.family(), a.k, mode);
  r.decision = v ? "pass" : "fail";
  if (!v) r.details["reason"] = v.reason;
  return finish(ctx, r, clock);
}

}  // namespace

void add_solver_commands(CLI::App& app, Context& ctx, int& code) {
  auto solve_ptr = std::make_shared<SolveArgs>(), oracle_ptr = std::make_shared<SolveArgs>(),
       shallow_ptr = std::make_shared<SolveArgs>();
  auto verify_ptr = std::make_shared<VerifyArgs>();
  SolveArgs &solve_args = *solve_ptr, &oracle_args = *oracle_ptr, &shallow_args = *shallow_ptr;
  VerifyArgs& verify_args = *verify_ptr;

  auto* solve_cmd = app.add_subcommand("solve", "Decide via dichotomy dispatch, shallow-tfvs or the exact oracle");
  add_common(solve_cmd, solve_args, true);
  solve_cmd->add_option("--mode", solve_args.mode, "general | disjoint | shallow");
  solve_cmd->add_option("--cap", solve_args.cap, "Oracle cap on |V| + k");
  solve_cmd->callback([&ctx, &code, solve_ptr] { code = cmd_solve(ctx, *solve_ptr); });

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive search over split sequences");
  add_common(oracle_cmd, oracle_args, true);
  oracle_cmd->add_option("--mode", oracle_args.mode, "general | disjoint | shallow");
  oracle_cmd->add_option("--cap", oracle_args.cap, "Cap on |V| + k");
  oracle_cmd->add_flag("--allow-trivial", oracle_args.allow_trivial, "Also branch on trivial splits");
  oracle_cmd->callback([&ctx, &code, oracle_ptr] { code = cmd_oracle(ctx, *oracle_ptr); });

  auto* shallow_cmd = app.add_subcommand("shallow-tfvs", "Triangle-free splitting, each vertex split at most once");
  add_common(shallow_cmd, shallow_args, false);
  shallow_cmd->add_option("--emit-model", shallow_args.emit_model, "Write the satisfying interpretation here");
  shallow_cmd->callback([&ctx, &code, shallow_ptr] { code = cmd_shallow(ctx, *shallow_ptr); });

  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against a graph, family and budget");
  verify_cmd->add_option("--graph", verify_args.graph, "Graph file")->required();
  verify_cmd->add_option("--cert", verify_args.cert, "Certificate file")->required();
  verify_cmd->add_option("--family", verify_args.family, "Forbidden family")->required();
  verify_cmd->add_option("--k", verify_args.k, "Split budget")->required();
  verify_cmd->add_option("--mode", verify_args.mode, "general | disjoint | shallow");
  verify_cmd->callback([&ctx, &code, verify_ptr] { code = cmd_verify(ctx, *verify_ptr); });
}

}  // namespace splitkit::cli
