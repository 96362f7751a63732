#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qconv/error.hpp"
#include "qconv/lab/commands.hpp"
#include "qconv/lab/suites.hpp"

namespace {

using qconv::lab::CommandOutput;
using qconv::lab::Options;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

void add_profile_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--k", o.k, "parts per tuple");
  cmd->add_option("--mode", o.mode, "Q, T, TDelta or TNabla");
  cmd->add_option("--strategy", o.strategy, "exact, sampled or flats");
  cmd->add_option("--samples", o.samples, "random tuples for the sampled strategy");
  cmd->add_flag_callback("--summary-only", [&o] { o.include_points = false; }, "omit the point lists");
}

void add_sequence_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "complete_cycle, gf_space, gf_matrix, alternating_trees, blowup, tau or cutcap");
  cmd->add_option("--q", o.q, "field order for gf_space");
  cmd->add_option("--base", o.base, "base graph (name like C5 or an edge-list file)");
  cmd->add_option("--pattern", o.pattern, "pattern graph F for the tau family");
  cmd->add_option("--graphs", o.graphs, "edge-list files for the cutcap family");
  cmd->add_option("--matrices", o.matrices, "GF(q) matrix files for the gf_matrix family");
  cmd->add_option("--norm", o.norm, "cut normalization: edges, twice-edges or nodes-squared");
}

int emit(const CommandOutput& out, const std::string& format, const std::string& path) {
  const std::string payload = format == "csv" ? out.csv : out.report.dump(2) + "\n";
  if (path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw qconv::InvalidArgumentError("cannot write " + path);
    f << payload;
    if (!f) throw qconv::InvalidArgumentError("write failed for " + path);
  }
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qconv: quotient profiles, Hausdorff convergence and cut distances of setfunctions"};
  app.set_config("--config", "", "TOML or INI file with option defaults");
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  std::uint64_t seed = 0;
  std::string out_path;
  auto* seed_opt = app.add_option("--seed", seed, "RNG seed (required for --strategy sampled)");
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--timings", o.timings, "add wall-clock timings to the report");

  auto* profile = app.add_subcommand("profile", "profile set of one family member");
  add_profile_flags(profile, o);
  add_sequence_flags(profile, o);
  profile->add_option("--n", o.n, "member index");

  auto* converge = app.add_subcommand("converge", "pairwise Hausdorff distances over a family prefix");
  add_profile_flags(converge, o);
  add_sequence_flags(converge, o);
  converge->add_option("--from", o.from, "first member index");
  converge->add_option("--to", o.to, "last member index");
  converge->add_option("--decrease-factor", o.decrease_factor, "tail ratio counted as consistent");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite, "suite name or all")->required();

  auto* cutdist = app.add_subcommand("cutdist", "cut distance of two graphs");
  cutdist->add_option("--a", o.graph_a, "first graph")->required();
  cutdist->add_option("--b", o.graph_b, "second graph")->required();
  cutdist->add_flag("--unlabeled", o.unlabeled, "also bound the unlabeled distance through blow-ups");
  cutdist->add_option("--t-max", o.t_max, "largest blow-up factor tried");
  cutdist->add_option("--trials", o.trials, "random starts per blow-up factor");

  auto* hom = app.add_subcommand("hom", "homomorphism densities");
  hom->add_option("--F", o.f_graph, "pattern graph")->required();
  hom->add_option("--G", o.g_graph, "target graph");
  hom->add_option("--graphon", o.graphon, "step graphon file");

  auto* cutcap = app.add_subcommand("cutcap", "cut-capacity profiles of graph files");
  add_profile_flags(cutcap, o);
  cutcap->add_option("--norm", o.norm, "edges, twice-edges or nodes-squared");
  cutcap->add_option("graphs", o.graphs, "edge-list files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (*seed_opt) o.seed = seed;

  try {
    CommandOutput out;
    if (*profile) out = qconv::lab::cmd_profile(o);
    else if (*converge) out = qconv::lab::cmd_converge(o);
    else if (*verify) out = qconv::lab::cmd_verify(o);
    else if (*cutdist) out = qconv::lab::cmd_cutdist(o);
    else if (*hom) out = qconv::lab::cmd_hom(o);
    else out = qconv::lab::cmd_cutcap(o);
    return emit(out, o.format, out_path);
  } catch (const qconv::CapError& e) {
    std::cerr << "qconv: cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const qconv::RationalOverflowError& e) {
    std::cerr << "qconv: exact arithmetic range exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const qconv::Error& e) {
    std::cerr << "qconv: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "qconv: " << e.what() << "\n";
    return kExitUsage;
  }
}
