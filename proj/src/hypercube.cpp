#include "preclusion/hypercube.hpp"

#include <algorithm>
#include <set>

#include "combinations.hpp"
#include "parallel.hpp"
#include "preclusion/error.hpp"
#include "preclusion/matching.hpp"
#include "random.hpp"

namespace preclusion {

EdgeSet incident_set(const Graph& g, VertexId x) { return incident_edges(g, x); }

EdgeSet incident_pair_set(const Graph& g, EdgeId uv) {
  if (uv >= g.size()) throw ParameterError("edge " + std::to_string(uv) + " out of range");
  const Edge& e = g.edge(uv);
  EdgeSet out = incident_edges(g, e.u);
  out |= incident_edges(g, e.v);
  out.erase(uv);
  return out;
}

std::vector<TwoPath> two_paths(const Graph& g) {
  std::vector<TwoPath> out;
  for (VertexId w = 0; w < g.order(); ++w) {
    const auto nbrs = g.neighbors(w);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        out.push_back({nbrs[i].to, w, nbrs[j].to});
      }
    }
  }
  return out;
}

EdgeSet trivial_conditional_set(const Graph& g, const TwoPath& p) {
  const auto uw = g.find_edge(p.u, p.w);
  const auto wv = g.find_edge(p.w, p.v);
  if (!uw || !wv || p.u == p.v) {
    throw PreconditionError("(" + std::to_string(p.u) + ", " + std::to_string(p.w) + ", " +
                            std::to_string(p.v) + ") is not a 2-path");
  }
  EdgeSet out = incident_edges(g, p.u);
  out |= incident_edges(g, p.v);
  out.erase(*uw);
  out.erase(*wv);
  return out;
}

std::optional<std::size_t> compute_v_e(const Graph& g) {
  std::optional<std::size_t> best;
  for (const TwoPath& p : two_paths(g)) {
    const std::size_t y = g.has_edge(p.u, p.v) ? 1 : 0;
    // d(u), d(v) >= 1 here, so the sum is at least 2.
    const std::size_t value = g.degree(p.u) + g.degree(p.v) - 2 - y;
    if (!best || value < *best) best = value;
  }
  return best;
}

bool check_connected_after(const Graph& g, const EdgeSet& f) { return components(g, f).connected; }

namespace {

void append_capped(std::vector<EdgeList>& into, const std::vector<EdgeList>& from) {
  for (const auto& item : from) {
    if (into.size() >= kMaxReportedCounterexamples) return;
    into.push_back(item);
  }
}

std::set<EdgeList> trivial_conditional_family(const Graph& g) {
  std::set<EdgeList> out;
  for (const TwoPath& p : two_paths(g)) out.insert(trivial_conditional_set(g, p).members());
  return out;
}

bool contains_full_star(const Graph& g, const EdgeSet& f) {
  for (VertexId w = 0; w < g.order(); ++w) {
    bool all = g.degree(w) > 0;
    for (const Incidence& inc : g.neighbors(w)) {
      if (!f.contains(inc.edge)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Lemma4Report verify_optimal_conditional_sets_trivial(unsigned n, const Lemma4Options& options) {
  if (n < 3) throw ParameterError("conditional matching preclusion of Q_n needs n >= 3");
  if (n > 4 || (n == 4 && !options.allow_long)) {
    throw BudgetError("exhaustive enumeration for Q_" + std::to_string(n) +
                      (n == 4 ? " needs the long-running flag" : " is out of budget"));
  }
  const Graph q = generate::hypercube(n);
  const std::size_t m = q.size();
  const std::set<EdgeList> trivial = trivial_conditional_family(q);

  Lemma4Report report;
  report.n = n;
  report.set_size = 2 * n - 2;
  report.trivial_sets = trivial.size();
  report.trivial_sets_all_conditional = std::all_of(trivial.begin(), trivial.end(), [&](const EdgeList& s) {
    return is_s_restricted_set(q, EdgeSet(q, s), 1);
  });

  struct Partial {
    std::uint64_t checked = 0;
    std::uint64_t conditional = 0;
    std::uint64_t nontrivial = 0;
    std::vector<EdgeList> counterexamples;
  };
  auto scan = [&](std::size_t size, bool classify) {
    std::vector<Partial> parts(m);
    detail::parallel_for(m, options.jobs, [&](std::size_t first, std::size_t) {
      Partial& part = parts[first];
      detail::for_each_combination_starting_at(m, size, first, [&](const std::vector<EdgeId>& pick) {
        ++part.checked;
        if (!is_s_restricted_set(q, EdgeSet(q, pick), 1)) return;
        ++part.conditional;
        if (classify && !trivial.contains(pick)) {
          ++part.nontrivial;
          if (part.counterexamples.size() < kMaxReportedCounterexamples) {
            part.counterexamples.push_back(pick);
          }
        }
      });
    });
    Partial total;
    for (const auto& p : parts) {
      total.checked += p.checked;
      total.conditional += p.conditional;
      total.nontrivial += p.nontrivial;
      append_capped(total.counterexamples, p.counterexamples);
    }
    return total;
  };

  const Partial main = scan(report.set_size, true);
  report.subsets_checked = main.checked;
  report.conditional_sets = main.conditional;
  report.nontrivial_sets = main.nontrivial;
  report.counterexamples = main.counterexamples;

  const Partial smaller = scan(report.set_size - 1, false);
  report.smaller_subsets_checked = smaller.checked;
  report.smaller_conditional_sets = smaller.conditional;

  report.pass = report.nontrivial_sets == 0 && report.trivial_sets_all_conditional &&
                report.conditional_sets > 0 && report.smaller_conditional_sets == 0;
  return report;
}

TrivialSetCheck check_trivial_conditional_sets(unsigned n) {
  const Graph q = generate::hypercube(n);
  TrivialSetCheck out;
  for (const TwoPath& p : two_paths(q)) {
    ++out.two_paths;
    const EdgeSet f = trivial_conditional_set(q, p);
    if (f.size() != 2 * std::size_t{n} - 2) ++out.wrong_size;
    if (!check_connected_after(q, f)) ++out.disconnected;
    if (2 * matching_number(q, f) == q.order()) ++out.with_perfect_matching;
  }
  return out;
}

Lemma5Report verify_super_connectivity(unsigned n, const Lemma5Options& options) {
  if (n < 2 || n > 10) throw ParameterError("super-connectivity check supports 2 <= n <= 10");
  const Graph q = generate::hypercube(n);
  const std::size_t m = q.size();
  const std::size_t size = 2 * std::size_t{n} - 2;

  std::set<EdgeList> pair_sets;
  for (EdgeId e = 0; e < m; ++e) pair_sets.insert(incident_pair_set(q, e).members());

  Lemma5Report report;
  report.n = n;
  report.set_size = size;

  // Literal form: star of vertex 0 padded with the lowest-index edges away from it.
  {
    EdgeSet f = incident_edges(q, 0);
    for (EdgeId e = 0; e < m && f.size() < size; ++e) {
      if (q.edge(e).u != 0 && q.edge(e).v != 0) f.insert(e);
    }
    report.literal_counterexample = f.members();
    report.literal_counterexample_disconnects = !check_connected_after(q, f);
    report.literal_counterexample_differs_from_every_pair_set =
        f.size() == size && !pair_sets.contains(report.literal_counterexample);
  }

  struct Partial {
    std::uint64_t checked = 0;
    std::uint64_t excluded = 0;
    std::uint64_t failures = 0;
    std::vector<EdgeList> counterexamples;
  };
  auto examine = [&](const EdgeList& pick, Partial& part) {
    ++part.checked;
    const EdgeSet f(q, pick);
    if (pair_sets.contains(pick) || contains_full_star(q, f)) {
      ++part.excluded;
      return;
    }
    if (!check_connected_after(q, f)) {
      ++part.failures;
      if (part.counterexamples.size() < kMaxReportedCounterexamples) part.counterexamples.push_back(pick);
    }
  };

  const std::uint64_t total = detail::binomial(m, size);
  report.exhaustive = total <= options.exhaustive_limit;
  std::vector<Partial> parts;
  if (report.exhaustive) {
    parts.resize(m);
    detail::parallel_for(m, options.jobs, [&](std::size_t first, std::size_t) {
      detail::for_each_combination_starting_at(m, size, first, [&](const std::vector<EdgeId>& pick) {
        examine(pick, parts[first]);
      });
    });
  } else {
    // Fixed chunking keeps the samples independent of the thread count.
    constexpr std::size_t kChunks = 64;
    parts.resize(kChunks);
    detail::parallel_for(kChunks, options.jobs, [&](std::size_t chunk, std::size_t) {
      detail::Rng rng(mix_seed(options.seed, chunk));
      const std::uint64_t count =
          options.samples / kChunks + (chunk < options.samples % kChunks ? 1 : 0);
      std::vector<EdgeId> all(m);
      for (std::size_t i = 0; i < m; ++i) all[i] = static_cast<EdgeId>(i);
      for (std::uint64_t s = 0; s < count; ++s) {
        for (std::size_t i = 0; i < size; ++i) {
          std::swap(all[i], all[i + rng.below(m - i)]);
        }
        EdgeList pick(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
        std::sort(pick.begin(), pick.end());
        examine(pick, parts[chunk]);
      }
    });
  }
  for (const auto& p : parts) {
    report.corrected_checked += p.checked;
    report.corrected_excluded += p.excluded;
    report.corrected_failures += p.failures;
    append_capped(report.corrected_counterexamples, p.counterexamples);
  }
  report.corrected_pass = report.corrected_failures == 0;

  if (n >= 3) {
    const TrivialSetCheck trivial = check_trivial_conditional_sets(n);
    report.trivial_sets_checked = trivial.two_paths;
    report.trivial_sets_connected = trivial.disconnected == 0;
  } else {
    report.trivial_sets_connected = true;
  }
  return report;
}

MpsHypercubeReport verify_mps_hypercube(unsigned n, unsigned s, const MpsHypercubeOptions& options) {
  if (n < 3 || n > 16) throw ParameterError("verify_mps_hypercube supports 3 <= n <= 16");
  const std::uint64_t order = std::uint64_t{1} << n;
  if (s < 2 || s > order - 1) {
    throw ParameterError("s must satisfy 2 <= s <= 2^n - 1 = " + std::to_string(order - 1));
  }
  const Graph q = generate::hypercube(n);
  const ProblemKind kind = ProblemKind::mps(s);

  MpsHypercubeReport report;
  report.n = n;
  report.s = s;
  report.claimed_value = 2 * std::size_t{n} - 2;
  report.path = two_paths(q).front();
  const EdgeSet witness = trivial_conditional_set(q, report.path);
  report.upper_witness = witness.members();
  report.upper_bound_verified =
      witness.size() == report.claimed_value && is_s_restricted_set(q, witness, s);

  if (n <= options.exact_up_to) {
    report.lower_bound_method = LowerBoundMethod::Exhaustive;
    SolveOptions solve_options;
    solve_options.budget = report.claimed_value - 1;
    solve_options.jobs = options.jobs;
    const PreclusionCertificate below = solve(q, kind, solve_options);
    report.lower_bound_stats = below.stats;
    report.lower_bound_verified = below.status == CertificateStatus::OverBudget;
  }

  PreclusionCertificate& cert = report.certificate;
  cert.kind = kind;
  cert.budget = std::nullopt;
  if (report.pass()) {
    cert.status = CertificateStatus::Optimal;
    cert.value = report.claimed_value;
    cert.witness = witness;
  } else {
    cert.status = CertificateStatus::OverBudget;
  }
  cert.evidence.nu_after = matching_number(q, witness);
  const ComponentReport comps = components(q, witness);
  cert.evidence.component_count = comps.components.size();
  cert.evidence.component_min_size = comps.min_size;
  cert.evidence.connected = comps.connected;
  cert.stats = report.lower_bound_stats;
  return report;
}

}  // namespace preclusion
