#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace splitkit::cli {

/// Outcome of one command. Exit codes: 0 yes/pass, 1 no/fail, 2 refused or error.
struct RunReport {
  explicit RunReport(std::string cmd) : command(std::move(cmd)) {}

  std::string command;
  std::string decision;  // yes, no, pass, fail, refused, np-hard-delegated, error
  std::string solver;
  std::string route;
  std::string certificate_path;
  double wall_ms = 0;
  std::vector<std::string> caps_hit;
  std::optional<std::uint64_t> seed;
  nlohmann::json details = nlohmann::json::object();

  int exit_code() const;
  nlohmann::json to_json() const;
};

/// Runs `splitkit <args...>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace splitkit::cli
