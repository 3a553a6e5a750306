#include "preclusion/suites.hpp"

#include <algorithm>

#include "parallel.hpp"
#include "preclusion/hypercube.hpp"
#include "random.hpp"

namespace preclusion::suites {
namespace {

constexpr std::size_t kMaxListed = 10;

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index, std::uint64_t salt) {
  std::uint64_t z = seed * 0x9e3779b97f4a7c15ULL + (index + 1) * 0xbf58476d1ce4e5b9ULL + salt;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void add_stats(SolveStats& into, const SolveStats& from) {
  into.nodes += from.nodes;
  into.prunes += from.prunes;
  into.depth_limits += from.depth_limits;
}

EdgeSet random_subset(const Graph& g, std::size_t size, std::size_t universe, detail::Rng& rng) {
  std::vector<EdgeId> pool(universe);
  for (std::size_t i = 0; i < universe; ++i) pool[i] = static_cast<EdgeId>(i);
  for (std::size_t i = 0; i < size; ++i) std::swap(pool[i], pool[i + rng.below(universe - i)]);
  pool.resize(size);
  return EdgeSet(g, pool);
}

}  // namespace

bool value_le(const Value& a, const Value& b) {
  if (!b) return true;
  if (!a) return false;
  return *a <= *b;
}

Graph random_even_graph(std::uint64_t seed, std::uint64_t index, std::size_t max_edges) {
  detail::Rng rng(stream_seed(seed, index, 1));
  for (;;) {
    const std::size_t n = 4 + 2 * rng.below(3);
    const double p = 0.25 + 0.5 * rng.unit();
    Graph g = generate::random_gnp(n, p, rng.below(UINT64_MAX));
    if (g.size() >= 1 && g.size() <= max_edges) return g;
  }
}

Graph random_min_degree3_graph(std::uint64_t seed, std::uint64_t index) {
  detail::Rng rng(stream_seed(seed, index, 2));
  for (;;) {
    const std::size_t n = 6 + 2 * rng.below(3);
    const double p = 0.45 + 0.4 * rng.unit();
    Graph g = generate::random_gnp(n, p, rng.below(UINT64_MAX));
    if (g.min_degree() >= 3) return g;
  }
}

Graph random_reduction_source(std::uint64_t seed, std::uint64_t index, std::size_t max_t) {
  detail::Rng rng(stream_seed(seed, index, 3));
  const std::size_t t = 1 + rng.below(max_t);
  const double p = 0.6 * rng.unit();
  return generate::random_bipartite_with_pm(t, p, rng.below(UINT64_MAX));
}

ChainReport run_chain(const ChainOptions& options) {
  std::vector<ChainInstance> results(options.count);
  std::vector<SolveStats> stats(options.count);
  detail::parallel_for(options.count, options.jobs, [&](std::size_t i, std::size_t) {
    const Graph g = random_even_graph(options.seed, i);
    ChainInstance& inst = results[i];
    inst.index = i;
    inst.n = g.order();
    inst.m = g.size();
    inst.agree = true;
    for (unsigned s = 0; s <= options.max_s; ++s) {
      const ProblemKind kind = s == 0 ? ProblemKind::mp() : ProblemKind::mps(s);
      const auto oracle = brute_force_solve(g, kind);
      const auto exact = solve(g, kind);
      add_stats(stats[i], exact.stats);
      inst.brute.push_back(oracle.value);
      inst.solved.push_back(exact.value);
      inst.agree = inst.agree && oracle.value == exact.value && oracle.status == exact.status;
    }
    inst.monotone = true;
    for (std::size_t s = 1; s < inst.brute.size(); ++s) {
      inst.monotone = inst.monotone && value_le(inst.brute[s - 1], inst.brute[s]);
    }
  });

  ChainReport report;
  report.instances = results.size();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& inst = results[i];
    add_stats(report.stats, stats[i]);
    if (!inst.monotone) ++report.monotone_failures;
    if (!inst.agree) ++report.disagreements;
    if ((!inst.monotone || !inst.agree) && report.failures.size() < kMaxListed) {
      report.failures.push_back(inst);
    }
    if (report.samples.size() < 5) report.samples.push_back(inst);
  }
  return report;
}

Lemma3Report run_lemma3(const Lemma3Options& options) {
  std::vector<Lemma3Instance> results(options.count);
  std::vector<SolveStats> stats(options.count);
  detail::parallel_for(options.count, options.jobs, [&](std::size_t i, std::size_t) {
    const Graph g = random_min_degree3_graph(options.seed, i);
    Lemma3Instance& inst = results[i];
    inst.index = i;
    inst.n = g.order();
    inst.m = g.size();
    inst.v_e = *compute_v_e(g);
    const auto cert = solve(g, ProblemKind::mps(1));
    add_stats(stats[i], cert.stats);
    inst.mp1 = cert.value;
    inst.holds = cert.witness && is_s_restricted_set(g, *cert.witness, 1) &&
                 value_le(inst.mp1, inst.v_e);
  });

  Lemma3Report report;
  report.instances = results.size();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& inst = results[i];
    add_stats(report.stats, stats[i]);
    if (!inst.holds) {
      ++report.violations;
      if (report.failures.size() < kMaxListed) report.failures.push_back(inst);
    }
    if (inst.mp1 && *inst.mp1 == inst.v_e) ++report.tight;
    if (report.samples.size() < 5) report.samples.push_back(inst);
  }
  return report;
}

ReductionFuzzReport run_reduction_fuzz(const ReductionFuzzOptions& options) {
  struct Partial {
    ReductionFuzzInstance inst;
    std::array<std::size_t, 4> cases{};
  };
  std::vector<Partial> results(options.count);
  detail::parallel_for(options.count, options.jobs, [&](std::size_t i, std::size_t) {
    const Graph g = random_reduction_source(options.seed, i, options.max_t);
    const ReductionInstance r = build_reduction(g);
    Partial& part = results[i];
    ReductionFuzzInstance& inst = part.inst;
    inst.index = i;
    inst.t = r.t;
    inst.source_edges = r.source.size();
    inst.profile = equivalence_profile(g, options.s_values, options.edge_limit);
    inst.agree = inst.profile.agrees_for_all_k();

    BruteForceOptions oracle;
    oracle.edge_limit = options.edge_limit;
    std::vector<ProblemKind> gadget_kinds = {ProblemKind::ak()};
    for (unsigned s : options.s_values) gadget_kinds.push_back(ProblemKind::mps(s));

    // Forward: an optimal source witness maps to a witness of every gadget kind.
    const auto source_cert = brute_force_solve(r.source, ProblemKind::mp(), oracle);
    inst.forward_ok = source_cert.witness.has_value();
    if (source_cert.witness) {
      const EdgeSet b_prime = forward_witness(r, *source_cert.witness);
      inst.forward_ok = b_prime.size() == source_cert.witness->size() + 1;
      for (const auto& kind : gadget_kinds) {
        inst.forward_ok = inst.forward_ok && satisfies(r.gadget, b_prime, kind);
      }
    }

    // Backward: optimal gadget witnesses plus random valid ones.
    inst.backward_ok = true;
    auto try_backward = [&](const EdgeSet& b_prime, std::size_t k, const ProblemKind& kind) {
      part.cases[static_cast<std::size_t>(classify_extraction(r, b_prime, k))]++;
      try {
        const EdgeSet b = backward_extract(r, b_prime, k, kind);
        inst.backward_ok = inst.backward_ok && b.size() <= k && is_matching_preclusion_set(r.source, b);
      } catch (const Error&) {
        inst.backward_ok = false;
      }
    };
    for (const auto& kind : gadget_kinds) {
      const auto cert = brute_force_solve(r.gadget, kind, oracle);
      if (cert.witness) try_backward(*cert.witness, cert.witness->size() - 1, kind);
    }
    detail::Rng rng(stream_seed(options.seed, i, 4));
    const std::size_t max_size = std::min<std::size_t>(r.gadget.size(), r.t + 3);
    for (int attempt = 0; attempt < 40; ++attempt) {
      const bool source_only = attempt % 2 == 0;
      const std::size_t universe = source_only ? r.source.size() : r.gadget.size();
      const std::size_t size = 1 + rng.below(std::min(max_size, universe));
      const EdgeSet b_prime = random_subset(r.gadget, size, universe, rng);
      const ProblemKind& kind = gadget_kinds[rng.below(gadget_kinds.size())];
      if (!satisfies(r.gadget, b_prime, kind)) continue;
      try_backward(b_prime, size - 1, kind);
      try_backward(b_prime, size, kind);
    }
  });

  ReductionFuzzReport report;
  report.instances = results.size();
  for (const auto& part : results) {
    const auto& inst = part.inst;
    report.k_checks += inst.source_edges + 1;
    if (inst.agree) ++report.agreements;
    if (!inst.forward_ok) ++report.forward_failures;
    if (!inst.backward_ok) ++report.backward_failures;
    for (std::size_t c = 0; c < 4; ++c) report.extraction_cases[c] += part.cases[c];
    if ((!inst.agree || !inst.forward_ok || !inst.backward_ok) && report.failures.size() < kMaxListed) {
      report.failures.push_back(inst);
    }
    if (report.samples.size() < 5) report.samples.push_back(inst);
  }
  return report;
}

}  // namespace preclusion::suites
