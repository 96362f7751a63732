#include "qconv/lab/commands.hpp"

#include <chrono>

#include "qconv/error.hpp"
#include "qconv/graphlim.hpp"
#include "qconv/lab/families.hpp"
#include "qconv/lab/formats.hpp"
#include "qconv/lab/report.hpp"
#include "qconv/lab/suites.hpp"
#include "qconv/metric.hpp"
#include "qconv/profiles.hpp"

namespace qconv::lab {
namespace {

class Timer {
 public:
  explicit Timer(bool enabled) : enabled_(enabled) {}
  template <typename F>
  auto run(const std::string& step, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    auto result = f();
    if (enabled_) {
      const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      timings_[step] = ms;
    }
    return result;
  }
  void attach(ordered_json& report) const {
    if (enabled_) report["timings_ms"] = timings_;
  }

 private:
  bool enabled_;
  ordered_json timings_ = ordered_json::object();
};

std::string csv_quote(const std::string& field) {
  std::string q = "\"";
  for (char ch : field) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

ordered_json envelope(const std::string& command, ordered_json config, ordered_json seeds) {
  ordered_json r;
  r["tool"] = "qconv";
  r["version"] = kToolVersion;
  r["command"] = command;
  r["config"] = std::move(config);
  r["seeds"] = std::move(seeds);
  return r;
}

EnumStrategy strategy_of(const Options& o) {
  const auto kind = parse_strategy_kind(o.strategy);
  switch (kind) {
    case EnumStrategy::Kind::Exact: return EnumStrategy::exact();
    case EnumStrategy::Kind::FlatsOnly: return EnumStrategy::flats_only();
    case EnumStrategy::Kind::Sampled:
      if (!o.seed) throw InvalidArgumentError("the sampled strategy needs an explicit --seed");
      if (o.samples == 0) throw InvalidArgumentError("--samples must be positive");
      return EnumStrategy::sampled(*o.seed, o.samples);
  }
  return EnumStrategy::exact();
}

ordered_json seeds_of(const Options& o, const EnumStrategy& s) {
  ordered_json seeds = ordered_json::array();
  if (s.kind == EnumStrategy::Kind::Sampled) seeds.push_back(*o.seed);
  return seeds;
}

SequenceSpec spec_of(const Options& o) {
  SequenceSpec spec;
  spec.family = o.family;
  spec.q = o.q;
  if (!o.base.empty()) {
    spec.base = graph_argument(o.base);
    spec.base_name = o.base;
  }
  spec.pattern = graph_argument(o.pattern);
  spec.pattern_name = o.pattern;
  for (const auto& g : o.graphs) spec.graphs.push_back(read_edge_list(g));
  for (const auto& m : o.matrices) spec.matrices.push_back(read_gf_matrix(m));
  spec.norm = parse_normalization(o.norm);
  return spec;
}

ordered_json sequence_config(const Options& o) {
  ordered_json c;
  c["family"] = o.family;
  if (o.family == "gf_space") c["q"] = o.q;
  if (o.family == "blowup" || o.family == "tau") c["base"] = o.base;
  if (o.family == "tau") c["pattern"] = o.pattern;
  if (o.family == "cutcap") c["graphs"] = o.graphs;
  if (o.family == "gf_matrix") c["matrices"] = o.matrices;
  if (o.family == "blowup" || o.family == "cutcap") c["norm"] = o.norm;
  return c;
}

ordered_json profile_config(const Options& o, const EnumStrategy& s) {
  ordered_json c;
  c["k"] = o.k;
  c["mode"] = std::string(mode_name(parse_mode(o.mode)));
  c["strategy"] = std::string(strategy_name(s.kind));
  if (s.kind == EnumStrategy::Kind::Sampled) {
    c["seed"] = s.seed;
    c["samples"] = s.samples;
  }
  return c;
}

std::string profile_csv(const ProfileSet& s) {
  std::string out = "point,index,exact,float\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& p = s.points()[i];
    for (std::size_t c = 0; c < p.coords.size(); ++c) {
      out += std::to_string(i) + "," + std::to_string(c) + "," + p.coords[c].to_string() + "," +
             csv_double(p.coords[c].to_double()) + "\n";
    }
  }
  return out;
}

std::string sampled_note(const EnumStrategy& s) {
  return s.kind == EnumStrategy::Kind::Sampled
             ? "sampled profile: an inner approximation of the exact point set"
             : "complete point set";
}

ordered_json diagnostic_json(const ConvergenceDiagnostic& d, const std::vector<int>& indices,
                             const EnumStrategy& s) {
  ordered_json r;
  r["indices"] = indices;
  r["pairwise"] = matrix_json(d.pairwise);
  ordered_json tail = ordered_json::array();
  for (const auto& t : d.tail_sup) tail.push_back(rational_json(t));
  r["tail_sup"] = std::move(tail);
  r["decrease_factor"] = d.decrease_factor.to_string();
  r["verdict"] = verdict_name(d.verdict);
  if (d.witness) r["witness"] = {indices[d.witness->first], indices[d.witness->second]};
  r["note"] = s.kind == EnumStrategy::Kind::Sampled
                  ? "distances between sampled inner approximations are heuristic; the verdict summarizes a finite prefix only"
                  : "the verdict summarizes a finite prefix only";
  return r;
}

}  // namespace

CommandOutput cmd_profile(const Options& o) {
  const EnumStrategy strategy = strategy_of(o);
  const ProfileMode mode = parse_mode(o.mode);
  const SequenceSpec spec = spec_of(o);
  ordered_json config = sequence_config(o);
  config["n"] = o.n;
  config.update(profile_config(o, strategy));
  CommandOutput out;
  out.report = envelope("profile", std::move(config), seeds_of(o, strategy));
  Timer timer(o.timings);
  const FamilyMember member = timer.run("generate", [&] { return make_member(spec, o.n); });
  const ProfileSet ps = timer.run("profile", [&] { return profile(member.oracle, o.k, mode, strategy); });
  ordered_json results;
  results["member"] = member.info;
  results["ground_size"] = member.oracle.size();
  results["normalization"] = member.oracle.normalization();
  results["note"] = sampled_note(strategy);
  results["summary"] = profile_summary(ps);
  if (o.include_points) results["profile"] = profile_set_json(ps);
  out.report["results"] = std::move(results);
  timer.attach(out.report);
  out.csv = profile_csv(ps);
  return out;
}

CommandOutput cmd_converge(const Options& o) {
  if (o.from < 1 || o.to < o.from) throw InvalidArgumentError("--from/--to must satisfy 1 <= from <= to");
  const EnumStrategy strategy = strategy_of(o);
  const ProfileMode mode = parse_mode(o.mode);
  const SequenceSpec spec = spec_of(o);
  const Rational factor = Rational::parse(o.decrease_factor);
  ordered_json config = sequence_config(o);
  config["from"] = o.from;
  config["to"] = o.to;
  config.update(profile_config(o, strategy));
  config["decrease_factor"] = factor.to_string();
  CommandOutput out;
  out.report = envelope("converge", std::move(config), seeds_of(o, strategy));
  Timer timer(o.timings);

  std::vector<ProfileSet> sets;
  std::vector<int> indices;
  ordered_json members = ordered_json::array();
  for (int n = o.from; n <= o.to; ++n) {
    const FamilyMember member = make_member(spec, n);
    sets.push_back(timer.run("profile_n" + std::to_string(n), [&] { return profile(member.oracle, o.k, mode, strategy); }));
    indices.push_back(n);
    ordered_json m = member.info;
    m["points"] = sets.back().size();
    members.push_back(std::move(m));
  }
  const auto diag = timer.run("diagnostic", [&] { return cauchy_diagnostic(sets, factor); });
  ordered_json results;
  results["members"] = std::move(members);
  results["diagnostic"] = diagnostic_json(diag, indices, strategy);
  out.report["results"] = std::move(results);
  timer.attach(out.report);
  out.csv = distance_csv(diag.pairwise, indices);
  return out;
}

CommandOutput cmd_verify(const Options& o) {
  if (o.suite.empty()) {
    std::string names;
    for (const auto& s : suite_names()) names += (names.empty() ? "" : ", ") + s;
    throw InvalidArgumentError("verify needs a suite name (available: " + names + ")");
  }
  const std::uint64_t seed = o.seed.value_or(1);
  Timer timer(o.timings);
  const auto suites = timer.run("suites", [&] { return run_suite(o.suite, seed); });
  CommandOutput out = verify_output(o.suite, seed, suites);
  timer.attach(out.report);
  return out;
}

CommandOutput verify_output(const std::string& suite, std::uint64_t seed, const std::vector<SuiteResult>& suites) {
  CommandOutput out;
  out.report = envelope("verify", {{"suite", suite}}, ordered_json::array({seed}));
  ordered_json arr = ordered_json::array();
  bool all = true;
  out.csv = "suite,check,pass\n";
  for (const auto& s : suites) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : s.checks) {
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      out.csv += s.suite + "," + csv_quote(c.name) + "," + (c.pass ? "pass" : "FAIL") + "\n";
    }
    all = all && s.all_pass();
    arr.push_back({{"suite", s.suite}, {"pass", s.all_pass()}, {"checks", std::move(checks)}});
  }
  out.report["results"] = {{"pass", all}, {"suites", std::move(arr)}};
  out.exit_code = all ? 0 : 1;
  return out;
}

CommandOutput cmd_cutdist(const Options& o) {
  if (o.graph_a.empty() || o.graph_b.empty()) throw InvalidArgumentError("cutdist needs --a and --b");
  const SimpleGraph a = graph_argument(o.graph_a);
  const SimpleGraph b = graph_argument(o.graph_b);
  const std::uint64_t seed = o.seed.value_or(0);
  const bool labeled = a.node_count() == b.node_count();
  const bool unlabeled = o.unlabeled || !labeled;
  ordered_json config = {{"a", o.graph_a}, {"b", o.graph_b}, {"unlabeled", unlabeled}};
  if (unlabeled) {
    config["t_max"] = o.t_max;
    config["trials"] = o.trials;
  }
  CommandOutput out;
  out.report = envelope("cutdist", std::move(config),
                        unlabeled ? ordered_json::array({seed}) : ordered_json::array());
  Timer timer(o.timings);
  ordered_json results;
  results["normalization"] = "nodes-squared, e(S,T) counting ordered pairs";
  out.csv = "quantity,exact,float\n";
  if (labeled) {
    const Rational d = timer.run("labeled", [&] { return cut_dist_labeled(a, b); });
    results["labeled"] = rational_json(d);
    out.csv += "labeled," + d.to_string() + "," + csv_double(d.to_double()) + "\n";
  }
  if (unlabeled) {
    const auto u = timer.run("unlabeled", [&] { return cut_dist_unlabeled_upper(a, b, o.t_max, o.trials, seed); });
    results["unlabeled"] = {{"kind", "upper bound"},
                            {"upper_bound", rational_json(u.upper_bound)},
                            {"t", u.t},
                            {"nodes", u.nodes},
                            {"bijection", u.bijection},
                            {"all_bijections_tried", u.exhaustive},
                            {"evaluations", u.evaluations}};
    out.csv += "unlabeled_upper_bound," + u.upper_bound.to_string() + "," + csv_double(u.upper_bound.to_double()) + "\n";
  }
  out.report["results"] = std::move(results);
  timer.attach(out.report);
  return out;
}

CommandOutput cmd_hom(const Options& o) {
  if (o.f_graph.empty()) throw InvalidArgumentError("hom needs --F");
  if (o.g_graph.empty() && o.graphon.empty()) throw InvalidArgumentError("hom needs --G and/or --graphon");
  const SimpleGraph f = graph_argument(o.f_graph);
  ordered_json config = {{"F", o.f_graph}};
  if (!o.g_graph.empty()) config["G"] = o.g_graph;
  if (!o.graphon.empty()) config["graphon"] = o.graphon;
  CommandOutput out;
  out.report = envelope("hom", std::move(config), ordered_json::array());
  ordered_json results;
  out.csv = "quantity,exact,float\n";
  if (!o.g_graph.empty()) {
    const SimpleGraph g = graph_argument(o.g_graph);
    const Rational t = hom_density(f, g);
    const Rational tw = hom_density_step(f, StepGraphon::from_graph(g));
    results["hom_count"] = hom_count(f, g);
    results["density_graph"] = rational_json(t);
    results["density_graph_as_graphon"] = rational_json(tw);
    results["consistent"] = t == tw;
    out.csv += "density_graph," + t.to_string() + "," + csv_double(t.to_double()) + "\n";
    if (t != tw) out.exit_code = 1;
  }
  if (!o.graphon.empty()) {
    const Rational t = hom_density_step(f, read_step_graphon(o.graphon));
    results["density_graphon"] = rational_json(t);
    out.csv += "density_graphon," + t.to_string() + "," + csv_double(t.to_double()) + "\n";
  }
  out.report["results"] = std::move(results);
  return out;
}

CommandOutput cmd_cutcap(const Options& o) {
  if (o.graphs.empty()) throw InvalidArgumentError("cutcap needs at least one graph file");
  const EnumStrategy strategy = strategy_of(o);
  const ProfileMode mode = parse_mode(o.mode);
  const CutNormalization norm = parse_normalization(o.norm);
  ordered_json config = {{"graphs", o.graphs}, {"norm", std::string(normalization_name(norm))}};
  config.update(profile_config(o, strategy));
  CommandOutput out;
  out.report = envelope("cutcap", std::move(config), seeds_of(o, strategy));
  Timer timer(o.timings);
  const Limits& limits = default_limits();

  std::vector<ProfileSet> sets;
  ordered_json graphs = ordered_json::array();
  for (std::size_t i = 0; i < o.graphs.size(); ++i) {
    const SimpleGraph g = read_edge_list(o.graphs[i]);
    const SetFunctionOracle kappa = cut_capacity_oracle(g, norm);
    ordered_json entry;
    entry["file"] = o.graphs[i];
    entry["nodes"] = g.node_count();
    entry["edges"] = g.edge_count();
    const bool exhaustive = g.node_count() <= limits.submodular_exhaustive_cap;
    const auto violations = exhaustive ? check_submodular(kappa)
                                       : check_submodular_sampled(kappa, o.seed.value_or(0), 100000);
    entry["submodular"] = {{"method", exhaustive ? "exhaustive" : "sampled"}, {"violations", violations.size()}};
    const ProfileSet ps = timer.run("profile_" + std::to_string(i), [&] { return profile(kappa, o.k, mode, strategy); });
    entry["summary"] = profile_summary(ps);
    if (o.include_points) entry["profile"] = profile_set_json(ps);
    graphs.push_back(std::move(entry));
    sets.push_back(ps);
  }
  ordered_json results;
  results["graphs"] = std::move(graphs);
  std::vector<int> indices;
  for (std::size_t i = 0; i < sets.size(); ++i) indices.push_back(static_cast<int>(i + 1));
  if (sets.size() >= 2) {
    const auto diag = timer.run("diagnostic", [&] { return cauchy_diagnostic(sets); });
    results["diagnostic"] = diagnostic_json(diag, indices, strategy);
    out.csv = distance_csv(diag.pairwise, indices);
  } else {
    out.csv = profile_csv(sets.front());
  }
  out.report["results"] = std::move(results);
  timer.attach(out.report);
  return out;
}

}  // namespace qconv::lab
