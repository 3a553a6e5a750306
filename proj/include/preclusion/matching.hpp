#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "preclusion/graph.hpp"

namespace preclusion {

// A set of pairwise non-adjacent edges together with the saturated vertices.
class Matching {
 public:
  Matching() = default;
  // Builds from a mate array (kNone for unsaturated vertices); the mate
  // relation must be symmetric and use edges of g.
  Matching(const Graph& g, const std::vector<VertexId>& mate);

  static constexpr VertexId kNone = static_cast<VertexId>(-1);

  const EdgeSet& edges() const { return edges_; }
  std::size_t size() const { return size_; }
  bool saturates(VertexId v) const { return mate_[v] != kNone; }
  std::optional<VertexId> mate(VertexId v) const {
    return mate_[v] == kNone ? std::nullopt : std::optional<VertexId>(mate_[v]);
  }
  std::vector<VertexId> saturated() const;

 private:
  EdgeSet edges_;
  std::vector<VertexId> mate_;
  std::size_t size_ = 0;
};

enum class TieBreak {
  // Whatever maximum matching the augmenting-path search ends with.
  Any,
  // The maximum matching whose sorted edge-index list is lexicographically
  // smallest. Costs O(|E|) maximum-matching computations.
  LexMin,
};

// Hopcroft-Karp when g carries a bipartition, Edmonds blossom search otherwise.
Matching max_matching(const Graph& g, TieBreak tie_break = TieBreak::Any);

// Maximum matching of g - removed, expressed in g's edge indices.
Matching max_matching(const Graph& g, const EdgeSet& removed);

std::size_t matching_number(const Graph& g);
std::size_t matching_number(const Graph& g, const EdgeSet& removed);

bool has_perfect_matching(const Graph& g);
// False for every even-order graph.
bool has_almost_perfect_matching(const Graph& g);

// True when the matching number of g - removed is at most floor(n/2) - 1,
// i.e. g - removed has neither a perfect nor an almost perfect matching.
bool is_precluded(const Graph& g, const EdgeSet& removed);

inline constexpr std::size_t kDefaultMatchingOracleEdgeLimit = 24;

// Exhaustive search over matchings. Throws OracleLimitError when
// g.size() exceeds edge_limit.
std::size_t brute_force_matching_number(
    const Graph& g, std::size_t edge_limit = kDefaultMatchingOracleEdgeLimit);

}  // namespace preclusion
