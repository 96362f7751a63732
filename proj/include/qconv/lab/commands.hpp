#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qconv/lab/suites.hpp"

namespace qconv::lab {

/// Every option the subcommands read. Defaults apply when neither a flag
/// nor the config file sets a value.
struct Options {
  // sequence
  std::string family = "gf_space";
  int q = 2;
  std::string base;     ///< named graph or edge-list file
  std::string pattern = "K2";
  std::vector<std::string> graphs;
  std::vector<std::string> matrices;
  int n = 2;
  int from = 2;
  int to = 4;
  // profiles
  int k = 2;
  std::string mode = "Q";
  std::string strategy = "exact";
  std::optional<std::uint64_t> seed;
  std::uint64_t samples = 1000;
  std::string norm = "edges";
  std::string decrease_factor = "1/2";
  // verify
  std::string suite;
  // cutdist
  std::string graph_a, graph_b;
  bool unlabeled = false;
  int t_max = 1;
  int trials = 8;
  // hom
  std::string f_graph, g_graph, graphon;
  // output
  std::string format = "json";
  bool timings = false;
  bool include_points = true;
};

struct CommandOutput {
  nlohmann::ordered_json report;
  std::string csv;     ///< payload for --format csv
  int exit_code = 0;   ///< 0 ok, 1 verification failure
};

CommandOutput cmd_profile(const Options& o);
CommandOutput cmd_converge(const Options& o);
CommandOutput cmd_verify(const Options& o);
/// Report and exit code (1 if any check failed) for finished suites.
CommandOutput verify_output(const std::string& suite, std::uint64_t seed, const std::vector<SuiteResult>& suites);
CommandOutput cmd_cutdist(const Options& o);
CommandOutput cmd_hom(const Options& o);
CommandOutput cmd_cutcap(const Options& o);

}  // namespace qconv::lab
