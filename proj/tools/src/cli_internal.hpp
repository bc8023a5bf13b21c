#pragma once

#include <chrono>
#include <iosfwd>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "splitkit/graph.hpp"
#include "splitkit/split.hpp"
#include "splitkit_cli/commands.hpp"

namespace splitkit::cli {

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
};

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

VertexSet parse_vertex_csv(const std::string& csv);
std::vector<Vertex> parse_vertex_list(const std::string& text);
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json steps_to_json(const std::vector<SplitSpec>& steps);
/// Writes g, compacting first if needed (the file format needs ids 0..n-1).
void write_graph_output(const std::string& path, const Graph& g, std::ostream& out);
void write_json_file(const std::string& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::string& path);

/// Prints the report as JSON or as a short human summary; returns its exit code.
int finish(const Context& ctx, RunReport& report, const Stopwatch& clock);

void add_solver_commands(CLI::App& app, Context& ctx, int& code);
void add_reduce_commands(CLI::App& app, Context& ctx, int& code);
void add_misc_commands(CLI::App& app, Context& ctx, int& code);

}  // namespace splitkit::cli
