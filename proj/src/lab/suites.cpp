#include "qconv/lab/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "qconv/error.hpp"
#include "qconv/graphlim.hpp"
#include "qconv/lab/families.hpp"
#include "qconv/lab/report.hpp"
#include "qconv/matroid.hpp"
#include "qconv/metric.hpp"
#include "qconv/profiles.hpp"
#include "qconv/random.hpp"

namespace qconv::lab {
namespace {

using Checks = std::vector<CheckResult>;

void add(Checks& out, std::string name, bool pass, ordered_json detail = ordered_json::object()) {
  out.push_back({std::move(name), pass, std::move(detail)});
}

MatroidPtr graphic(const SimpleGraph& g) { return std::make_shared<GraphicMatroid>(g); }
MatroidPtr space(int q, int n) { return std::make_shared<LinearMatroid>(LinearMatroid::full_space(q, n)); }

SequenceSpec alternating_trees_spec() {
  SequenceSpec spec;
  spec.family = "alternating_trees";
  return spec;
}

struct NamedOracle {
  std::string name;
  SetFunctionOracle oracle;
};

/// Small oracles (ground <= 8) shared by the inclusion and composition suites.
std::vector<NamedOracle> corpus() {
  std::vector<NamedOracle> c;
  c.push_back({"K3 cycle matroid", normalized_rank_oracle(graphic(SimpleGraph::complete(3)))});
  c.push_back({"K4 cycle matroid", normalized_rank_oracle(graphic(SimpleGraph::complete(4)))});
  c.push_back({"C5 cycle matroid", normalized_rank_oracle(graphic(SimpleGraph::cycle(5)))});
  c.push_back({"GF(2)^2", normalized_rank_oracle(space(2, 2))});
  c.push_back({"GF(2)^3", normalized_rank_oracle(space(2, 3))});
  c.push_back({"GF(3)^1", normalized_rank_oracle(space(3, 1))});
  c.push_back({"alternating_trees n=5", make_member(alternating_trees_spec(), 5).oracle});
  c.push_back({"cut capacity C4", cut_capacity_oracle(SimpleGraph::cycle(4), CutNormalization::Edges)});
  c.push_back({"cut capacity P5", cut_capacity_oracle(SimpleGraph::path(5), CutNormalization::NodesSquared)});
  c.push_back({"tau K2 in K3", tau_oracle(SimpleGraph::complete(2), SimpleGraph::complete(3)).grounded});
  c.push_back({"|X|^2 on 4", SetFunctionOracle(GroundSet(4), 16, [](std::uint64_t x) {
                 const std::int64_t s = __builtin_popcountll(x);
                 return s * s;
               }, "|X|^2")});
  return c;
}

/// Restricted growth strings: every set partition of n elements.
void for_each_set_partition(int n, const std::function<void(const std::vector<int>&, int)>& f) {
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      f(a, std::max(blocks, 1));
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      a[static_cast<std::size_t>(i)] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
}

SimpleGraph graph_from_code(int n, std::uint64_t code) {
  std::vector<Edge> e;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((code >> bit) & 1u) e.emplace_back(u, v);
  return SimpleGraph(n, std::move(e));
}

SimpleGraph random_graph(Rng& rng, int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.coin()) e.emplace_back(u, v);
  return SimpleGraph(n, std::move(e));
}

// ---------------------------------------------------------------------------

Checks suite_core(std::uint64_t) {
  Checks out;
  const auto k4 = normalized_rank_oracle(graphic(SimpleGraph::complete(4)));
  // (phi/A)/X = phi/B with B_j the union of the A_i, i in X_j
  bool composition = true;
  ordered_json witness;
  const int n = k4.size();
  for (int code = 0; code < 729 && composition; ++code) {  // 3^6 labeled 3-partitions
    std::vector<SubsetMask> a(3, SubsetMask::empty(n));
    for (int e = 0, c = code; e < n; ++e, c /= 3) a[static_cast<std::size_t>(c % 3)] = a[static_cast<std::size_t>(c % 3)].with(e);
    const QuotientPoint pa = quotient_point(k4, a);
    const SetFunctionOracle pf = point_oracle(pa);
    for (int x = 0; x < 8; ++x) {  // 2-partitions of [3]
      std::vector<SubsetMask> xs(2, SubsetMask::empty(3));
      std::vector<SubsetMask> b(2, SubsetMask::empty(n));
      for (int i = 0; i < 3; ++i) {
        const int part = (x >> i) & 1;
        xs[static_cast<std::size_t>(part)] = xs[static_cast<std::size_t>(part)].with(i);
        b[static_cast<std::size_t>(part)] = b[static_cast<std::size_t>(part)] | a[static_cast<std::size_t>(i)];
      }
      if (quotient_point(pf, xs) != quotient_point(k4, b)) {
        composition = false;
        witness = {{"partition_code", code}, {"outer", x}};
        break;
      }
    }
  }
  add(out, "quotient of a quotient is a quotient (K4, k=3 then 2)", composition, witness);

  const auto full = SubsetMask::full(n);
  const QuotientPoint whole = quotient_point(k4, std::vector<SubsetMask>{full});
  add(out, "k=1 quotient of the whole ground set is (0, phi(J))",
      whole.coords[1] == k4.evaluate(full), {{"point", point_json(whole)}});

  add(out, "matroid ranks are submodular (K4, C5)",
      check_submodular(k4).empty() &&
          check_submodular(normalized_rank_oracle(graphic(SimpleGraph::cycle(5)))).empty());
  const SetFunctionOracle square(GroundSet(3), 1, [](std::uint64_t x) {
    const std::int64_t s = __builtin_popcountll(x);
    return s * s;
  }, "|X|^2");
  add(out, "|X|^2 is reported as non-submodular", !check_submodular(square).empty());
  const SetFunctionOracle neg(GroundSet(3), 1, [](std::uint64_t x) { return -static_cast<std::int64_t>(__builtin_popcountll(x)); }, "-|X|");
  add(out, "-|X| is reported as non-monotone", !check_monotone(neg).empty());
  add(out, "cut capacity of C4 is submodular",
      check_submodular(cut_capacity_oracle(SimpleGraph::cycle(4), CutNormalization::Edges)).empty());
  return out;
}

Checks suite_matroid(std::uint64_t) {
  Checks out;
  const std::vector<std::pair<std::string, MatroidPtr>> ms = {
      {"K4", graphic(SimpleGraph::complete(4))},
      {"K3,2", graphic(SimpleGraph::complete_bipartite(3, 2))},
      {"GF(2)^3", space(2, 3)},
      {"GF(3)^2", space(3, 2)},
      {"GF(4)^1", space(4, 1)},
      {"K3 + K3", std::make_shared<DirectSumMatroid>(std::vector<MatroidPtr>{graphic(SimpleGraph::complete(3)), graphic(SimpleGraph::complete(3))})},
  };
  for (const auto& [name, m] : ms) {
    const int n = m->ground_size();
    const std::uint64_t full = SubsetMask::full(n).bits;
    bool axioms = true, closure_ok = true;
    for (std::uint64_t x = 0; x <= full && axioms && closure_ok; ++x) {
      const int r = m->rank_bits(x);
      if (r < 0 || r > __builtin_popcountll(x)) axioms = false;
      for (int e = 0; e < n; ++e)
        if (!((x >> e) & 1u) && m->rank_bits(x | (std::uint64_t{1} << e)) < r) axioms = false;
      const SubsetMask c = closure(*m, {x, n});
      if (!SubsetMask{x, n}.is_subset_of(c) || m->rank(c) != r || closure(*m, c) != c) closure_ok = false;
    }
    const auto rho = rank_oracle(m, 1);
    add(out, name + ": rank axioms", axioms && (n > 12 || check_submodular(rho).empty()));
    add(out, name + ": closure extensive, idempotent, rank preserving", closure_ok);
  }
  add(out, "GF(2)^2 has 5 flats", enumerate_flats(*space(2, 2)).size() == 5);
  add(out, "K3 has 5 flats", enumerate_flats(*graphic(SimpleGraph::complete(3))).size() == 5);
  add(out, "GF(2)^4 has 67 flats", enumerate_flats(*space(2, 4)).size() == 67);
  const int k5_rank = graphic(SimpleGraph::complete(5))->total_rank();
  add(out, "K5 cycle matroid has rank 4", k5_rank == 4, {{"rank", k5_rank}});
  return out;
}

Checks suite_composition(std::uint64_t) {
  Checks out;
  const std::vector<NamedOracle> oracles = {
      {"K4 cycle matroid", normalized_rank_oracle(graphic(SimpleGraph::complete(4)))},
      {"GF(2)^2", normalized_rank_oracle(space(2, 2))},
  };
  using M = ProfileMode;
  for (const auto& [name, f] : oracles) {
    const ProfileSet t2 = profile(f, 2, M::T, EnumStrategy::exact());
    const ProfileSet q2t3 = compose(f, 2, 3, M::Q, M::T);
    const ProfileSet t2t3 = compose(f, 2, 3, M::T, M::T);
    const ProfileSet t2q4 = compose(f, 2, 4, M::T, M::Q);
    ordered_json sizes = {{"T2", t2.size()}, {"Q2oT3", q2t3.size()}, {"T2oT3", t2t3.size()}, {"T2oQ4", t2q4.size()}};
    add(out, name + ": T2 = Q2 o T3", t2.same_points(q2t3), sizes);
    add(out, name + ": T2 = T2 o T3", t2.same_points(t2t3), sizes);
    add(out, name + ": T2 = T2 o Q4", t2.same_points(t2q4), sizes);
  }
  // quotient-of-quotient closure on Q
  const auto f = normalized_rank_oracle(space(2, 2));
  const ProfileSet q2 = profile(f, 2, M::Q, EnumStrategy::exact());
  const ProfileSet q3 = profile(f, 3, M::Q, EnumStrategy::exact());
  bool closed = true;
  for (const auto& psi : q3.points()) closed = closed && derived_profile(psi, 2, M::Q).is_subset_of(q2);
  add(out, "GF(2)^2: Q2 of every Q3 point lies in Q2", closed);
  return out;
}

Checks suite_inclusions(std::uint64_t) {
  Checks out;
  for (const auto& [name, f] : corpus()) {
    const InclusionReport r = verify_inclusions(f, 2);
    ordered_json detail = {{"Q", r.q_size}, {"TDelta", r.tdelta_size}, {"TNabla", r.tnabla_size}, {"T", r.t_size}};
    for (const auto& l : r.links)
      if (!l.holds) detail["witness " + l.relation] = point_json(*l.witness);
    add(out, name + ": both chains at k=2", r.all_hold(), detail);
  }
  const auto f = normalized_rank_oracle(space(2, 2));
  const ProfileSet t2 = profile(f, 2, ProfileMode::T, EnumStrategy::exact());
  const ProfileSet q2 = profile(f, 2, ProfileMode::Q, EnumStrategy::exact());
  add(out, "GF(2)^2: the zero point is in T2 but not in Q2",
      t2.contains(QuotientPoint::zero(2)) && !q2.contains(QuotientPoint::zero(2)));
  const ProfileSet t1 = profile(f, 1, ProfileMode::T, EnumStrategy::exact());
  add(out, "k=1 chains", verify_inclusions(f, 1).all_hold(), {{"T1", t1.size()}});
  return out;
}

Checks suite_delta_bounds(std::uint64_t) {
  Checks out;
  for (int n : {3, 4}) {
    const auto r = delta_approx_bound_check(space(2, n), 2, 4);
    ordered_json d = {{"precondition_met", r.precondition_met}, {"bound", r.bound.to_string()}};
    if (r.t_vs_tdelta) d["T_vs_TDelta"] = r.t_vs_tdelta->to_string();
    if (r.tnabla_vs_q) d["TNabla_vs_Q"] = r.tnabla_vs_q->to_string();
    add(out, "GF(2)^" + std::to_string(n) + ", k=2, m=4", r.precondition_met && r.holds, d);
  }
  const auto k3 = delta_approx_bound_check(graphic(SimpleGraph::complete(3)), 2, 1);
  add(out, "K3, k=2, m=1: precondition unmet, no claim", !k3.precondition_met && !k3.holds);
  return out;
}

Checks suite_richness(std::uint64_t) {
  Checks out;
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 3; ++k) {
      const auto r = check_richness(*space(2, n), k, 2 * k);
      add(out, "GF(2)^" + std::to_string(n) + " satisfies R(" + std::to_string(k) + "," + std::to_string(2 * k) + ")", r.holds);
    }
  const auto k3 = check_richness(*graphic(SimpleGraph::complete(3)), 2, 1);
  add(out, "K3 fails R(2,1)", !k3.holds,
      k3.holds ? ordered_json::object()
               : ordered_json{{"inner", k3.inner->mask.bits}, {"outer", k3.outer->mask.bits}});
  return out;
}

std::vector<MatroidPtr> random_union_instance(Rng& rng) {
  const int n = 3 + static_cast<int>(rng.below(10));  // ground 3..12
  const int parts = 2 + static_cast<int>(rng.below(2));
  std::vector<MatroidPtr> ms;
  for (int i = 0; i < parts; ++i) {
    switch (rng.below(3)) {
      case 0: {
        const int dim = 1 + static_cast<int>(rng.below(4));
        const int q = rng.coin() ? 2 : 3;
        std::vector<std::vector<int>> cols(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(dim)));
        for (auto& c : cols)
          for (auto& x : c) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(q)));
        ms.push_back(std::make_shared<LinearMatroid>(q, dim, std::move(cols)));
        break;
      }
      case 1: {
        // n edges of a random graph on up to 6 nodes
        std::vector<Edge> all;
        const int nodes = 2 + static_cast<int>(rng.below(5));
        for (int u = 0; u < nodes; ++u)
          for (int v = u + 1; v < nodes; ++v) all.emplace_back(u, v);
        rng.shuffle(all);
        if (static_cast<int>(all.size()) < n) {
          // pad with loops through a direct sum with a rank-0 part
          const int extra = n - static_cast<int>(all.size());
          ms.push_back(std::make_shared<DirectSumMatroid>(std::vector<MatroidPtr>{
              graphic(SimpleGraph(nodes, all)),
              std::make_shared<LinearMatroid>(2, 1, std::vector<std::vector<int>>(static_cast<std::size_t>(extra), std::vector<int>{0}))}));
        } else {
          all.resize(static_cast<std::size_t>(n));
          ms.push_back(graphic(SimpleGraph(nodes, all)));
        }
        break;
      }
      default: {
        std::vector<std::vector<int>> cols;
        for (int e = 0; e < n; ++e) cols.push_back(LinearMatroid::vector_of_index(2, 3, rng.below(8)));
        const std::uint64_t keep = rng.next() & SubsetMask::full(n).bits;
        ms.push_back(std::make_shared<RestrictedMatroid>(std::make_shared<LinearMatroid>(2, 3, std::move(cols)), SubsetMask{keep, n}));
        break;
      }
    }
  }
  return ms;
}

Checks suite_union(std::uint64_t seed) {
  Checks out;
  Rng rng(seed);
  int agree = 0;
  const int instances = 60;
  ordered_json first_failure;
  for (int i = 0; i < instances; ++i) {
    const auto ms = random_union_instance(rng);
    const UnionPartition u = matroid_union(ms);
    const int brute = matroid_union_rank_min_formula(ms);
    // certificate attains the min formula
    const int n = ms.front()->ground_size();
    int cert = u.certificate.count();
    for (const auto& m : ms) cert += m->rank(u.certificate.complement());
    if (u.rank == brute && cert == brute) {
      ++agree;
    } else if (first_failure.is_null()) {
      first_failure = {{"instance", i}, {"ground", n}, {"algorithm", u.rank}, {"min_formula", brute}, {"certificate_value", cert}};
    }
  }
  add(out, "union rank equals the min formula on random instances", agree == instances,
      first_failure.is_null() ? ordered_json{{"instances", instances}} : first_failure);

  const auto gf23 = space(2, 3);
  const SubsetMask whole = SubsetMask::full(8);
  const std::vector<SubsetMask> two{whole, whole};
  const DisjointBases db = disjoint_bases(gf23, two);
  bool valid = db.bases.has_value();
  if (valid) {
    const auto& b = *db.bases;
    valid = (b[0].bits & b[1].bits) == 0 && b[0].count() == 3 && b[1].count() == 3 && gf23->rank(b[0]) == 3 &&
            gf23->rank(b[1]) == 3;
  }
  add(out, "GF(2)^3 holds two disjoint bases", valid);

  const MatroidPtr k3 = graphic(SimpleGraph::complete(3));
  const std::vector<SubsetMask> tri{SubsetMask::full(3), SubsetMask::full(3)};
  const DisjointBases none = disjoint_bases(k3, tri);
  int value = none.deficiency.count();
  for (const auto& a : tri) value += k3->rank(a.minus(none.deficiency));
  add(out, "K3 has no two disjoint spanning trees (certificate below 4)", !none.bases && value < 4,
      {{"certificate", none.deficiency.bits}, {"value", value}});

  const std::vector<MatroidPtr> k4x2{graphic(SimpleGraph::complete(4)), graphic(SimpleGraph::complete(4))};
  add(out, "two copies of K4 have union rank 6", matroid_union_rank(k4x2) == 6);
  return out;
}

Checks suite_cut_quotients(std::uint64_t) {
  Checks out;
  bool round_trip = true, edge2cut = true;
  ordered_json witness;
  for (int n = 1; n <= 5 && round_trip && edge2cut; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs) && round_trip && edge2cut; ++code) {
      const SimpleGraph g = graph_from_code(n, code);
      const SetFunctionOracle kappa = cut_capacity_oracle(g, CutNormalization::NodesSquared);
      for_each_set_partition(n, [&](const std::vector<int>& cls, int k) {
        if (!round_trip || !edge2cut) return;
        const WeightedQuotient wq = weighted_quotient(g, cls, k);
        const QuotientPoint from_gamma = kappa_from_gamma(wq);
        const QuotientPoint direct = quotient_point(kappa, partition_masks(n, cls, k));
        if (from_gamma != direct) {
          edge2cut = false;
          witness = {{"n", n}, {"graph", code}};
        }
        const auto gamma = gamma_from_kappa(direct);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j)
            if (i != j && gamma[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != wq.gamma[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
              round_trip = false;
              witness = {{"n", n}, {"graph", code}};
            }
      });
    }
  }
  add(out, "kappa from gamma equals the cut-capacity quotient (all graphs, n <= 5)", edge2cut, witness);
  add(out, "gamma from kappa recovers gamma off the diagonal (all graphs, n <= 5)", round_trip, witness);

  bool symmetric = true, submodular = true;
  for (const auto& g : {SimpleGraph::cycle(6), SimpleGraph::complete(5), SimpleGraph::complete_bipartite(3, 4), SimpleGraph::path(7)}) {
    const auto kappa = cut_capacity_oracle(g, CutNormalization::Edges);
    const std::uint64_t full = SubsetMask::full(g.node_count()).bits;
    for (std::uint64_t x = 0; x <= full; ++x) symmetric = symmetric && kappa.raw_bits(x) == kappa.raw_bits(full & ~x);
    submodular = submodular && check_submodular(kappa).empty();
  }
  add(out, "cut capacities are symmetric", symmetric);
  add(out, "cut capacities are submodular", submodular);

  const StepGraphon half = StepGraphon::constant(Rational(1)).refine({Rational(1, 2)});
  add(out, "constant graphon, half measure: 1/4", graphon_cut_capacity(half, 1) == Rational(1, 4));
  bool graphon_match = true;
  for (const auto& g : {SimpleGraph::complete(2), SimpleGraph::cycle(5), SimpleGraph::path(4)}) {
    const auto kappa = cut_capacity_oracle(g, CutNormalization::TwiceEdges);
    const auto wg = StepGraphon::from_graph(g);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << g.node_count()); ++x)
      graphon_match = graphon_match && graphon_cut_capacity(wg, x) == kappa.evaluate({x, g.node_count()});
  }
  add(out, "graphon cut capacity of W_G equals the twice-edges graph cut capacity", graphon_match);
  return out;
}

Checks suite_cut_bound(std::uint64_t seed) {
  Checks out;
  Rng rng(seed);
  int ok = 0;
  const int pairs = 20;
  ordered_json first_failure;
  for (int i = 0; i < pairs; ++i) {
    const int n = 2 + static_cast<int>(rng.below(6));
    const SimpleGraph a = random_graph(rng, n);
    const SimpleGraph b = random_graph(rng, n);
    const auto ka = cut_capacity_oracle(a, CutNormalization::NodesSquared);
    const auto kb = cut_capacity_oracle(b, CutNormalization::NodesSquared);
    const Rational h = hausdorff(profile(ka, 2, ProfileMode::Q, EnumStrategy::exact()),
                                 profile(kb, 2, ProfileMode::Q, EnumStrategy::exact())).distance;
    const Rational d = cut_dist_labeled(a, b);
    if (h <= d) ++ok;
    else if (first_failure.is_null()) first_failure = {{"pair", i}, {"hausdorff", h.to_string()}, {"cut_distance", d.to_string()}};
  }
  add(out, "Q2 Hausdorff distance of cut capacities is at most the cut distance", ok == pairs,
      first_failure.is_null() ? ordered_json{{"pairs", pairs}} : first_failure);
  add(out, "d(K2, empty) = 1/2", cut_dist_labeled(SimpleGraph::complete(2), SimpleGraph::empty(2)) == Rational(1, 2));
  const auto u = cut_dist_unlabeled_upper(SimpleGraph::complete(2), SimpleGraph::cycle(4), 2, 4, seed);
  add(out, "K2 against C4 aligns to 0", u.upper_bound.is_zero(), {{"t", u.t}, {"nodes", u.nodes}});
  return out;
}

Checks suite_blowup_density(std::uint64_t) {
  Checks out;
  const std::vector<std::pair<std::string, SimpleGraph>> patterns = {
      {"K2", SimpleGraph::complete(2)}, {"P3", SimpleGraph::path(3)}, {"K3", SimpleGraph::complete(3)}, {"C4", SimpleGraph::cycle(4)}};
  const std::vector<SimpleGraph> targets = {SimpleGraph::complete(3), SimpleGraph::cycle(5), SimpleGraph::path(4),
                                            SimpleGraph::complete_bipartite(2, 3), SimpleGraph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}})};
  for (const auto& [name, f] : patterns) {
    bool ok = true, step_ok = true;
    for (const auto& g : targets) {
      const Rational base = hom_density(f, g);
      for (int t = 1; t <= 3; ++t) ok = ok && hom_density(f, blow_up(g, t).graph) == base;
      step_ok = step_ok && hom_density_step(f, StepGraphon::from_graph(g)) == base;
    }
    add(out, "t(" + name + ", G(t)) = t(" + name + ", G) for t <= 3", ok);
    add(out, "t(" + name + ", W_G) = t(" + name + ", G)", step_ok);
  }
  add(out, "t(K2, K3) = 2/3", hom_density(SimpleGraph::complete(2), SimpleGraph::complete(3)) == Rational(2, 3));
  add(out, "t(K3, 1/2) = 1/8", hom_density_step(SimpleGraph::complete(3), StepGraphon::constant(Rational(1, 2))) == Rational(1, 8));
  return out;
}

Checks suite_tau(std::uint64_t) {
  Checks out;
  const std::vector<std::pair<std::string, SimpleGraph>> fs = {{"K2", SimpleGraph::complete(2)}, {"K3", SimpleGraph::complete(3)}, {"P3", SimpleGraph::path(3)}};
  const std::vector<std::pair<std::string, SimpleGraph>> gs = {
      {"K4", SimpleGraph::complete(4)}, {"C5", SimpleGraph::cycle(5)}, {"K3,2", SimpleGraph::complete_bipartite(3, 2)}};
  for (const auto& [fn, f] : fs)
    for (const auto& [gn, g] : gs) {
      const TauFunction tau = tau_oracle(f, g);
      const int m = g.edge_count();
      const bool sub = check_submodular(tau.grounded).empty();
      const bool mono = check_monotone(tau.grounded).empty();
      const bool empty_ok = tau.value(SubsetMask::empty(m)) == Rational(1) - hom_density(f, g);
      const bool full_ok = tau.value(SubsetMask::full(m)) == Rational(1);
      add(out, "tau(" + fn + ", " + gn + ") submodular, increasing, tau(empty) = 1 - t, tau(E) = 1",
          sub && mono && empty_ok && full_ok,
          {{"submodular", sub}, {"monotone", mono}, {"tau_empty", tau.at_empty.to_string()}});
    }
  return out;
}

Checks suite_limit_filter(std::uint64_t) {
  Checks out;
  for (int n : {2, 3}) {
    const auto f = normalized_rank_oracle(space(2, n));
    const ProfileSet q2 = profile(f, 2, ProfileMode::Q, EnumStrategy::exact());
    const ProfileSet kept = limit_set_filter(q2, 2, n);
    add(out, "every Q2 point of GF(2)^" + std::to_string(n) + " passes 1 - 1/" + std::to_string(n),
        kept.same_points(q2), {{"points", q2.size()}, {"kept", kept.size()}});
  }
  return out;
}

Checks suite_metric(std::uint64_t seed) {
  Checks out;
  Rng rng(seed);
  auto cloud = [&](std::size_t size) {
    std::vector<QuotientPoint> pts;
    for (std::size_t i = 0; i < size; ++i) {
      std::vector<Rational> c{Rational(0)};
      for (int j = 1; j < 4; ++j) c.emplace_back(static_cast<std::int64_t>(rng.below(25)), 1 + static_cast<std::int64_t>(rng.below(12)));
      pts.emplace_back(2, std::move(c));
    }
    return pts;
  };
  bool sym = true, ident = true, tri = true;
  for (int i = 0; i < 200; ++i) {
    const auto a = cloud(1 + rng.below(20)), b = cloud(1 + rng.below(20)), c = cloud(1 + rng.below(20));
    const Rational ab = hausdorff(a, b).distance, ba = hausdorff(b, a).distance;
    sym = sym && ab == ba;
    ident = ident && hausdorff(a, a).distance.is_zero();
    tri = tri && hausdorff(a, c).distance <= ab + hausdorff(b, c).distance;
  }
  add(out, "symmetry", sym);
  add(out, "identity", ident);
  add(out, "triangle inequality", tri);
  const std::vector<QuotientPoint> p{QuotientPoint(2, {0, Rational(7, 8), Rational(7, 8), Rational(7, 8)})};
  const std::vector<QuotientPoint> q{QuotientPoint(2, {0, Rational(4, 9), Rational(4, 9), Rational(8, 9)})};
  add(out, "linf((7/8,7/8,7/8), (4/9,4/9,8/9)) = 31/72", linf_distance(p[0], q[0]) == Rational(31, 72));
  return out;
}

Checks suite_embeddings(std::uint64_t) {
  Checks out;
  for (int m = 1; m <= 3; ++m) {
    const auto sm = LinearMatroid::full_space(2, m);
    const auto flats = enumerate_flats(sm);
    for (int n = m; n <= std::min(4, 2 * m); ++n) {
      const auto sn = LinearMatroid::full_space(2, n);
      bool lattice = true, ranks = true;
      for (const auto& a : flats)
        for (const auto& b : flats) {
          const auto ea = gfqn_rank_preserving_embed(2, m, n, a.mask);
          const auto eb = gfqn_rank_preserving_embed(2, m, n, b.mask);
          const auto join = gfqn_rank_preserving_embed(2, m, n, closure(sm, a.mask | b.mask));
          const auto meet = gfqn_rank_preserving_embed(2, m, n, a.mask & b.mask);
          lattice = lattice && join == closure(sn, ea | eb) && meet == (ea & eb);
          ranks = ranks && sn.rank(ea) == a.rank;
        }
      add(out, "rank-preserving GF(2)^" + std::to_string(m) + " -> GF(2)^" + std::to_string(n), lattice && ranks);
      if (n % m != 0) continue;
      bool stretch = true;
      for (const auto& a : flats)
        for (const auto& b : flats) {
          const auto ea = gfqn_stretch_embed(2, m, n, a.mask);
          const auto eb = gfqn_stretch_embed(2, m, n, b.mask);
          stretch = stretch && sn.rank(ea) == (n / m) * a.rank &&
                    gfqn_stretch_embed(2, m, n, closure(sm, a.mask | b.mask)) == closure(sn, ea | eb) &&
                    gfqn_stretch_embed(2, m, n, a.mask & b.mask) == (ea & eb);
        }
      add(out, "stretch GF(2)^" + std::to_string(m) + " -> GF(2)^" + std::to_string(n), stretch);
    }
  }
  for (auto [m, n] : {std::pair{1, 2}, std::pair{2, 4}}) {
    const auto tm = profile(normalized_rank_oracle(space(2, m)), 2, ProfileMode::T, EnumStrategy::flats_only());
    const auto tn = profile(normalized_rank_oracle(space(2, n)), 2, ProfileMode::T, EnumStrategy::flats_only());
    add(out, "T2(GF(2)^" + std::to_string(m) + ") inside T2(GF(2)^" + std::to_string(n) + ")", tm.is_subset_of(tn),
        {{"sizes", {tm.size(), tn.size()}}});
  }
  return out;
}

Checks suite_alternating_trees(std::uint64_t) {
  Checks out;
  bool generators = true;
  for (int n = 1; n <= 14; ++n) {
    const SimpleGraph g = alternating_trees_graph(n);
    const std::uint64_t all = SubsetMask::full(g.edge_count()).bits;
    if (n % 2 == 1 || n <= 2) {
      generators = generators && g.edge_count() == n - 1 && g.components(all) == 1;
    } else {
      const auto [a, b] = spanning_tree_pair(g);
      generators = generators && g.edge_count() == 2 * (n - 1) && (a & b) == 0 && g.components(a) == 1 &&
                   g.components(b) == 1 && __builtin_popcountll(a) == n - 1 && __builtin_popcountll(b) == n - 1;
    }
  }
  add(out, "generator: odd members are trees, even members two edge-disjoint spanning trees", generators);
  const SequenceSpec spec = alternating_trees_spec();
  const ProfileSet q8 = profile(make_member(spec, 8).oracle, 2, ProfileMode::Q, EnumStrategy::exact());
  const ProfileSet q9 = profile(make_member(spec, 9).oracle, 2, ProfileMode::Q, EnumStrategy::exact());
  const QuotientPoint two_tree(2, {0, Rational(7, 8), Rational(7, 8), Rational(7, 8)});
  const std::vector<QuotientPoint> one{two_tree};
  const Rational directed = directed_distance(one, q9.points()).distance;
  const Rational d = hausdorff(q8, q9).distance;
  add(out, "(7/8,7/8,7/8) is a Q2 point of G8", q8.contains(two_tree));
  add(out, "directed distance from (7/8,7/8,7/8) to Q2(G9) is 31/72", directed == Rational(31, 72),
      {{"value", directed.to_string()}});
  add(out, "Q2(G8) and Q2(G9) at distance >= 31/72", d >= Rational(31, 72), {{"value", d.to_string()}});
  return out;
}

using SuiteFn = Checks (*)(std::uint64_t);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"core", suite_core},
      {"matroid", suite_matroid},
      {"composition", suite_composition},
      {"inclusion-chains", suite_inclusions},
      {"delta-bounds", suite_delta_bounds},
      {"richness", suite_richness},
      {"matroid-union", suite_union},
      {"cut-quotients", suite_cut_quotients},
      {"cut-distance-bound", suite_cut_bound},
      {"blowup-density", suite_blowup_density},
      {"tau", suite_tau},
      {"limit-filter", suite_limit_filter},
      {"metric", suite_metric},
      {"embeddings", suite_embeddings},
      {"alternating_trees", suite_alternating_trees},
  };
  return r;
}

}  // namespace

bool SuiteResult::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  names.push_back("all");
  return names;
}

std::vector<SuiteResult> run_suite(const std::string& name, std::uint64_t seed) {
  std::vector<SuiteResult> out;
  for (const auto& [n, fn] : registry()) {
    if (name == "all" || name == n) out.push_back({n, fn(seed)});
  }
  if (out.empty()) {
    std::string names;
    for (const auto& s : suite_names()) names += (names.empty() ? "" : ", ") + s;
    throw InvalidArgumentError("unknown suite '" + name + "' (available: " + names + ")");
  }
  return out;
}

}  // namespace qconv::lab
