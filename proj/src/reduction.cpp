#include "preclusion/reduction.hpp"

#include <algorithm>

#include "preclusion/matching.hpp"

namespace preclusion {

ReductionInstance build_reduction(const Graph& g) {
  const Graph source = with_bipartition(g);
  const auto& side = *source.bipartition();
  std::vector<VertexId> left;
  std::vector<VertexId> right;
  for (VertexId v = 0; v < source.order(); ++v) (side[v] == 0 ? left : right).push_back(v);
  if (left.size() != right.size()) {
    throw PreconditionError("reduction needs equal sides, got " + std::to_string(left.size()) +
                            " and " + std::to_string(right.size()));
  }
  if (left.empty()) throw PreconditionError("reduction needs a nonempty source graph");
  if (!has_perfect_matching(source)) {
    throw PreconditionError("reduction source has no perfect matching");
  }

  ReductionInstance r;
  r.t = left.size();
  const auto n = static_cast<VertexId>(source.order());
  r.u_prime = n;
  r.u_dprime = n + 1;
  r.v_prime = n + 2;
  r.v_dprime = n + 3;

  std::vector<Edge> edges = source.edges();
  edges.reserve(source.size() + 2 * r.t + 4);
  for (VertexId v : right) edges.push_back({r.u_prime, v});
  for (VertexId u : left) edges.push_back({u, r.v_prime});
  r.e_prime = static_cast<EdgeId>(edges.size());
  edges.push_back({r.u_prime, r.v_prime});
  edges.push_back({r.u_prime, r.v_dprime});
  edges.push_back({r.u_dprime, r.v_prime});
  r.e = static_cast<EdgeId>(edges.size());
  edges.push_back({r.u_dprime, r.v_dprime});

  std::vector<std::uint8_t> gadget_side = side;
  gadget_side.insert(gadget_side.end(), {0, 0, 1, 1});
  r.gadget = Graph(source.order() + 4, std::move(edges), std::move(gadget_side));
  r.source = source;
  return r;
}

EdgeSet forward_witness(const ReductionInstance& r, const EdgeSet& b) {
  b.check_tag(r.source);
  if (!is_matching_preclusion_set(r.source, b)) {
    throw PreconditionError("forward_witness needs a matching preclusion set of the source");
  }
  EdgeSet out(r.gadget, b.members());
  out.insert(r.e);
  return out;
}

namespace {

EdgeSet source_part(const ReductionInstance& r, const EdgeSet& b_prime) {
  EdgeSet out(r.source);
  for (EdgeId e : b_prime.members()) {
    if (r.is_source_edge(e)) out.insert(e);
  }
  return out;
}

VertexId max_degree_vertex(const Graph& g) {
  VertexId best = 0;
  for (VertexId v = 1; v < g.order(); ++v) {
    if (g.degree(v) > g.degree(best)) best = v;
  }
  return best;
}

}  // namespace

ExtractionCase classify_extraction(const ReductionInstance& r, const EdgeSet& b_prime,
                                   std::size_t k) {
  b_prime.check_tag(r.gadget);
  if (b_prime.contains(r.e)) return ExtractionCase::ContainsE;
  const EdgeSet b = source_part(r, b_prime);
  if (is_matching_preclusion_set(r.source, b)) {
    return b.size() <= k ? ExtractionCase::IntersectionPrecludes
                         : ExtractionCase::IntersectionShrunk;
  }
  return ExtractionCase::TrivialSet;
}

EdgeSet backward_extract(const ReductionInstance& r, const EdgeSet& b_prime, std::size_t k,
                         const ProblemKind& gadget_kind) {
  b_prime.check_tag(r.gadget);
  const bool supported = gadget_kind.tag() == ProblemKind::Tag::AK ||
                         (gadget_kind.tag() == ProblemKind::Tag::MPS && gadget_kind.s() >= 1);
  if (!supported) {
    throw PreconditionError("backward_extract supports ak and mps(s >= 1) witnesses");
  }
  if (b_prime.size() > ReductionInstance::gadget_budget(k)) {
    throw PreconditionError("gadget witness has " + std::to_string(b_prime.size()) +
                            " edges, more than k + 1 = " + std::to_string(k + 1));
  }
  if (!satisfies(r.gadget, b_prime, gadget_kind)) {
    throw PreconditionError("gadget witness is not a " + gadget_kind.to_string() + " set");
  }

  EdgeSet b = source_part(r, b_prime);
  switch (classify_extraction(r, b_prime, k)) {
    case ExtractionCase::ContainsE:
    case ExtractionCase::IntersectionPrecludes:
      break;
    case ExtractionCase::IntersectionShrunk:
      b.erase(b.members().front());
      break;
    case ExtractionCase::TrivialSet:
      b = incident_edges(r.source, max_degree_vertex(r.source));
      break;
  }
  if (b.size() > k || !is_matching_preclusion_set(r.source, b)) {
    throw ReductionDiscrepancy("extracted set of size " + std::to_string(b.size()) +
                               " is not a matching preclusion set of size <= " +
                               std::to_string(k));
  }
  return b;
}

EquivalenceCheck verify_equivalence(const Graph& g, std::size_t k, unsigned s,
                                    std::size_t edge_limit) {
  const ReductionInstance r = build_reduction(g);
  auto feasible = [&](const Graph& graph, const ProblemKind& kind, std::size_t budget) {
    BruteForceOptions options;
    options.edge_limit = edge_limit;
    options.budget = budget;
    return brute_force_solve(graph, kind, options).status == CertificateStatus::Optimal;
  };
  EquivalenceCheck out;
  out.left = feasible(r.source, ProblemKind::mp(), k);
  out.right_ak = feasible(r.gadget, ProblemKind::ak(), k + 1);
  out.right_mps = feasible(r.gadget, ProblemKind::mps(s), k + 1);
  out.agree = out.left == out.right_ak && out.left == out.right_mps;
  return out;
}

std::optional<std::size_t> EquivalenceProfile::first_disagreement() const {
  for (std::size_t k = 0; k <= source_edges; ++k) {
    const bool left = at_most(mp_source, k);
    if (at_most(ak_gadget, k + 1) != left) return k;
    for (const auto& [s, value] : mps_gadget) {
      if (at_most(value, k + 1) != left) return k;
    }
  }
  return std::nullopt;
}

bool EquivalenceProfile::agrees_for_all_k() const { return !first_disagreement().has_value(); }

EquivalenceProfile equivalence_profile(const Graph& g, const std::vector<unsigned>& s_values,
                                       std::size_t edge_limit) {
  const ReductionInstance r = build_reduction(g);
  BruteForceOptions options;
  options.edge_limit = edge_limit;
  auto value_of = [&](const Graph& graph, const ProblemKind& kind) {
    return brute_force_solve(graph, kind, options).value;
  };
  EquivalenceProfile p;
  p.source_edges = r.source.size();
  p.t = r.t;
  p.mp_source = value_of(r.source, ProblemKind::mp());
  p.ak_gadget = value_of(r.gadget, ProblemKind::ak());
  for (unsigned s : s_values) p.mps_gadget[s] = value_of(r.gadget, ProblemKind::mps(s));
  return p;
}

}  // namespace preclusion
