#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "preclusion/error.hpp"
#include "preclusion/graph.hpp"
#include "preclusion/solver.hpp"

namespace preclusion {

// Gadget G' built from a balanced bipartite source G = (U u V, E) with a
// perfect matching: four new vertices u', u'', v', v'' forming the 4-cycle
// u'v', v'u'', u''v'', v''u'; u' joined to every vertex of V and v' to every
// vertex of U. Source vertices keep their ids; source edges keep their
// indices, so B' n E(G) is the set of gadget edges with index < |E(G)|.
struct ReductionInstance {
  Graph source;  // carries the bipartition used for U and V
  Graph gadget;
  std::size_t t = 0;  // |U| = |V|
  VertexId u_prime = 0;
  VertexId u_dprime = 0;
  VertexId v_prime = 0;
  VertexId v_dprime = 0;
  EdgeId e = 0;        // u''v''
  EdgeId e_prime = 0;  // u'v'

  // A source budget k corresponds to gadget budget k + 1.
  static std::size_t gadget_budget(std::size_t k) { return k + 1; }

  bool is_source_edge(EdgeId gadget_edge) const { return gadget_edge < source.size(); }
};

// Throws PreconditionError unless g is bipartite with equal sides and has a
// perfect matching. A bipartition attached to g is used as given; otherwise
// one is computed.
ReductionInstance build_reduction(const Graph& g);

// B' = B u {e}. Throws PreconditionError unless b precludes the source.
EdgeSet forward_witness(const ReductionInstance& r, const EdgeSet& b);

// Thrown when a witness violates what the constructive argument promises.
class ReductionDiscrepancy : public Error {
 public:
  using Error::Error;
};

// Maps a gadget witness B' with |B'| <= k+1 (anti-Kekule, or s-restricted
// for kind MP_S(s)) to a matching preclusion set of the source of size <= k:
//   e in B'                          -> B' n E(G)
//   e not in B', B' n E(G) precludes -> it, minus its smallest edge if size k+1
//   otherwise                        -> I(v) for a maximum-degree vertex v
// Throws PreconditionError if b_prime fails its predicate or is too large,
// ReductionDiscrepancy if the extracted set breaks the promised bound.
EdgeSet backward_extract(const ReductionInstance& r, const EdgeSet& b_prime, std::size_t k,
                         const ProblemKind& gadget_kind = ProblemKind::ak());

// Which branch of backward_extract applies; exposed for tests and reports.
enum class ExtractionCase { ContainsE, IntersectionPrecludes, IntersectionShrunk, TrivialSet };
ExtractionCase classify_extraction(const ReductionInstance& r, const EdgeSet& b_prime,
                                   std::size_t k);

struct EquivalenceCheck {
  bool left = false;      // mp(G) <= k
  bool right_ak = false;  // ak(G') <= k + 1
  bool right_mps = false; // mp_s(G') <= k + 1
  bool agree = false;
};

// Decides all three questions with brute_force_solve only.
EquivalenceCheck verify_equivalence(const Graph& g, std::size_t k, unsigned s = 1,
                                    std::size_t edge_limit = 24);

// Exact optimal values behind verify_equivalence, computed once per source
// (nullopt = +infinity). left(k) etc. follow from these for every k.
struct EquivalenceProfile {
  std::size_t source_edges = 0;
  std::size_t t = 0;
  std::optional<std::size_t> mp_source;
  std::optional<std::size_t> ak_gadget;
  std::map<unsigned, std::optional<std::size_t>> mps_gadget;

  static bool at_most(const std::optional<std::size_t>& value, std::size_t bound) {
    return value && *value <= bound;
  }
  // True when the three decisions agree for every k in 0..source_edges.
  bool agrees_for_all_k() const;
  // First k where they disagree.
  std::optional<std::size_t> first_disagreement() const;
};

EquivalenceProfile equivalence_profile(const Graph& g, const std::vector<unsigned>& s_values,
                                       std::size_t edge_limit = 24);

}  // namespace preclusion
