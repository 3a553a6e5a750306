#include "preclusion/solver.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <utility>
#include <vector>

#include "parallel.hpp"
#include "preclusion/error.hpp"
#include "preclusion/matching.hpp"

namespace preclusion {

std::string ProblemKind::to_string() const {
  switch (tag_) {
    case Tag::MP:
      return "mp";
    case Tag::MPS:
      return "mps(" + std::to_string(s_) + ")";
    case Tag::AK:
      return "ak";
  }
  return "unknown";
}

std::string_view to_string(CertificateStatus status) {
  switch (status) {
    case CertificateStatus::Optimal:
      return "optimal";
    case CertificateStatus::Infinite:
      return "infinite";
    case CertificateStatus::OverBudget:
      return "over_budget";
  }
  return "unknown";
}

std::string_view to_string(InfinityReason reason) {
  switch (reason) {
    case InfinityReason::None:
      return "none";
    case InfinityReason::NoPerfectOrAlmostPerfectMatching:
      return "no_perfect_or_almost_perfect_matching";
    case InfinityReason::NoPerfectMatching:
      return "no_perfect_matching";
    case InfinityReason::SideConditionsUnsatisfiable:
      return "side_conditions_unsatisfiable";
  }
  return "unknown";
}

bool is_matching_preclusion_set(const Graph& g, const EdgeSet& f) {
  f.check_tag(g);
  return is_precluded(g, f);
}

bool is_s_restricted_set(const Graph& g, const EdgeSet& f, unsigned s) {
  f.check_tag(g);
  if (!is_precluded(g, f)) return false;
  return components(g, f).min_size >= std::size_t{s} + 1;
}

bool is_anti_kekule_set(const Graph& g, const EdgeSet& f) {
  f.check_tag(g);
  if (g.order() % 2 != 0) {
    throw PreconditionError("anti-Kekule sets are defined for even-order graphs only");
  }
  if (!components(g, f).connected) return false;
  return 2 * matching_number(g, f) < g.order();
}

bool satisfies(const Graph& g, const EdgeSet& f, const ProblemKind& kind) {
  switch (kind.tag()) {
    case ProblemKind::Tag::MP:
      return is_matching_preclusion_set(g, f);
    case ProblemKind::Tag::MPS:
      return is_s_restricted_set(g, f, kind.s());
    case ProblemKind::Tag::AK:
      return is_anti_kekule_set(g, f);
  }
  return false;
}

EdgeSet trivial_mp_set(const Graph& g, VertexId v) { return incident_edges(g, v); }

namespace {

void check_kind(const Graph& g, const ProblemKind& kind) {
  if (kind.tag() == ProblemKind::Tag::AK && g.order() % 2 != 0) {
    throw PreconditionError("anti-Kekule problem requires an even-order graph");
  }
}

// The +infinity conventions that hold before any edge is deleted.
std::optional<InfinityReason> infinite_from_start(const Graph& g, const ProblemKind& kind) {
  const EdgeSet none(g);
  if (kind.tag() == ProblemKind::Tag::AK) {
    if (2 * matching_number(g) < g.order()) return InfinityReason::NoPerfectMatching;
    return std::nullopt;
  }
  if (is_precluded(g, none)) return InfinityReason::NoPerfectOrAlmostPerfectMatching;
  return std::nullopt;
}

Evidence evidence_for(const Graph& g, const EdgeSet& removed) {
  Evidence ev;
  ev.nu_after = matching_number(g, removed);
  const ComponentReport comps = components(g, removed);
  ev.component_count = comps.components.size();
  ev.component_min_size = comps.min_size;
  ev.connected = comps.connected;
  return ev;
}

PreclusionCertificate infinite_certificate(const Graph& g, const ProblemKind& kind,
                                           InfinityReason reason) {
  PreclusionCertificate cert;
  cert.kind = kind;
  cert.status = CertificateStatus::Infinite;
  cert.reason = reason;
  cert.evidence = evidence_for(g, EdgeSet(g));
  return cert;
}

PreclusionCertificate optimal_certificate(const Graph& g, const ProblemKind& kind,
                                          EdgeSet witness) {
  PreclusionCertificate cert;
  cert.kind = kind;
  cert.status = CertificateStatus::Optimal;
  cert.value = witness.size();
  cert.evidence = evidence_for(g, witness);
  cert.witness = std::move(witness);
  return cert;
}

// One depth-limited pass of the branch-and-bound.
class DepthLimitedSearch {
 public:
  struct Outcome {
    std::optional<EdgeSet> best;
    bool cutoff = false;
    std::uint64_t nodes = 0;
    std::uint64_t prunes = 0;
  };

  DepthLimitedSearch(const Graph& g, const ProblemKind& kind, bool deterministic,
                     std::atomic<bool>& stop)
      : g_(g), kind_(kind), deterministic_(deterministic), stop_(stop) {}

  // Candidate edges to branch on at the root, or empty when the root is a
  // leaf (feasible, dead, or out of depth). Root outcome goes to `out`.
  std::vector<EdgeId> root_candidates(std::size_t depth, Outcome& out) {
    EdgeSet removed(g_);
    EdgeSet forbidden(g_);
    std::vector<EdgeId> candidates;
    expand(removed, forbidden, depth, out, &candidates);
    return candidates;
  }

  // Explores the i-th child of the root: candidate i deleted, earlier
  // candidates kept forever.
  void child(const std::vector<EdgeId>& candidates, std::size_t i, std::size_t depth,
             Outcome& out) {
    EdgeSet removed(g_);
    EdgeSet forbidden(g_);
    for (std::size_t j = 0; j < i; ++j) forbidden.insert(candidates[j]);
    removed.insert(candidates[i]);
    expand(removed, forbidden, depth - 1, out, nullptr);
  }

 private:
  bool side_conditions_dead(const EdgeSet& removed) const {
    switch (kind_.tag()) {
      case ProblemKind::Tag::MP:
        return false;
      case ProblemKind::Tag::MPS:
        return kind_.s() > 0 && components(g_, removed).min_size < std::size_t{kind_.s()} + 1;
      case ProblemKind::Tag::AK:
        return !components(g_, removed).connected;
    }
    return false;
  }

  void record(const EdgeSet& removed, Outcome& out) {
    if (!out.best || (deterministic_ && EdgeSet::lex_less(removed, *out.best))) {
      out.best = removed;
    }
    if (!deterministic_) stop_.store(true, std::memory_order_relaxed);
  }

  // When root_out is non-null the children are not explored; their branch
  // edges are returned through it instead.
  void expand(EdgeSet& removed, EdgeSet& forbidden, std::size_t remaining, Outcome& out,
              std::vector<EdgeId>* root_out) {
    ++out.nodes;
    if (side_conditions_dead(removed)) {
      ++out.prunes;
      return;
    }
    const Matching m = max_matching(g_, removed);
    if (m.size() + 1 <= g_.order() / 2) {
      record(removed, out);
      return;
    }
    if (remaining == 0) {
      out.cutoff = true;
      return;
    }
    std::vector<EdgeId> candidates;
    for (EdgeId e : m.edges().members()) {
      if (!forbidden.contains(e)) candidates.push_back(e);
    }
    if (candidates.empty()) {
      ++out.prunes;
      return;
    }
    if (root_out) {
      *root_out = std::move(candidates);
      return;
    }
    std::size_t explored = 0;
    for (; explored < candidates.size(); ++explored) {
      if (stop_.load(std::memory_order_relaxed)) break;
      const EdgeId e = candidates[explored];
      removed.insert(e);
      expand(removed, forbidden, remaining - 1, out, nullptr);
      removed.erase(e);
      forbidden.insert(e);
    }
    for (std::size_t j = 0; j < explored; ++j) forbidden.erase(candidates[j]);
  }

  const Graph& g_;
  const ProblemKind& kind_;
  bool deterministic_;
  std::atomic<bool>& stop_;
};

}  // namespace

PreclusionCertificate solve(const Graph& g, const ProblemKind& kind,
                            const SolveOptions& options) {
  check_kind(g, kind);
  if (auto reason = infinite_from_start(g, kind)) {
    auto cert = infinite_certificate(g, kind, *reason);
    cert.budget = options.budget;
    return cert;
  }

  SolveStats stats;
  const std::size_t max_depth =
      options.budget ? std::min(*options.budget, g.size()) : g.size();
  for (std::size_t depth = 1; depth <= max_depth; ++depth) {
    ++stats.depth_limits;
    std::atomic<bool> stop{false};
    DepthLimitedSearch search(g, kind, options.deterministic, stop);
    DepthLimitedSearch::Outcome root;
    const std::vector<EdgeId> candidates = search.root_candidates(depth, root);

    std::vector<DepthLimitedSearch::Outcome> branches(candidates.size());
    detail::parallel_for(candidates.size(), options.jobs, [&](std::size_t i, std::size_t) {
      search.child(candidates, i, depth, branches[i]);
    });

    // Reduce in branch order so the result does not depend on scheduling.
    std::optional<EdgeSet> best = root.best;
    bool cutoff = root.cutoff;
    stats.nodes += root.nodes;
    stats.prunes += root.prunes;
    for (auto& b : branches) {
      stats.nodes += b.nodes;
      stats.prunes += b.prunes;
      cutoff = cutoff || b.cutoff;
      if (b.best && (!best || (options.deterministic && EdgeSet::lex_less(*b.best, *best)))) {
        best = std::move(b.best);
      }
    }
    if (best) {
      auto cert = optimal_certificate(g, kind, std::move(*best));
      cert.budget = options.budget;
      cert.stats = stats;
      return cert;
    }
    if (!cutoff) {
      auto cert = infinite_certificate(g, kind, InfinityReason::SideConditionsUnsatisfiable);
      cert.budget = options.budget;
      cert.stats = stats;
      return cert;
    }
  }

  PreclusionCertificate cert;
  if (options.budget && *options.budget < g.size()) {
    cert.kind = kind;
    cert.status = CertificateStatus::OverBudget;
    cert.evidence = evidence_for(g, EdgeSet(g));
  } else {
    cert = infinite_certificate(g, kind, InfinityReason::SideConditionsUnsatisfiable);
  }
  cert.budget = options.budget;
  cert.stats = stats;
  return cert;
}

PreclusionCertificate brute_force_solve(const Graph& g, const ProblemKind& kind,
                                        const BruteForceOptions& options) {
  check_kind(g, kind);
  if (auto reason = infinite_from_start(g, kind)) {
    auto cert = infinite_certificate(g, kind, *reason);
    cert.budget = options.budget;
    return cert;
  }

  const std::uint64_t subset_limit = options.edge_limit >= 63
                                         ? std::numeric_limits<std::uint64_t>::max()
                                         : std::uint64_t{1} << options.edge_limit;
  const std::size_t m = g.size();
  const std::size_t max_size = options.budget ? std::min(*options.budget, m) : m;
  std::uint64_t examined = 1;  // the empty set, checked above
  SolveStats stats;

  std::vector<EdgeId> pick;
  for (std::size_t size = 1; size <= max_size; ++size) {
    ++stats.depth_limits;
    pick.resize(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = static_cast<EdgeId>(i);
    for (;;) {
      if (++examined > subset_limit) {
        throw OracleLimitError("brute-force oracle exceeded 2^" +
                               std::to_string(options.edge_limit) + " subsets on a graph with " +
                               std::to_string(m) + " edges");
      }
      ++stats.nodes;
      EdgeSet candidate(g, pick);
      if (satisfies(g, candidate, kind)) {
        auto cert = optimal_certificate(g, kind, std::move(candidate));
        cert.budget = options.budget;
        cert.stats = stats;
        return cert;
      }
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == m - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }

  PreclusionCertificate cert;
  if (max_size < m) {
    cert.kind = kind;
    cert.status = CertificateStatus::OverBudget;
    cert.evidence = evidence_for(g, EdgeSet(g));
  } else {
    cert = infinite_certificate(g, kind, InfinityReason::SideConditionsUnsatisfiable);
  }
  cert.budget = options.budget;
  cert.stats = stats;
  return cert;
}

}  // namespace preclusion
