#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "preclusion/graph.hpp"

namespace preclusion {

// Which edge-deletion problem to solve.
//   MP   : destroy every perfect and almost perfect matching.
//   MP_S : as MP, and every remaining component keeps at least s+1 vertices.
//          MP_S(0) is MP; MP_S(1) is conditional matching preclusion.
//   AK   : destroy every perfect matching while staying connected
//          (anti-Kekule); defined for even order only.
class ProblemKind {
 public:
  enum class Tag { MP, MPS, AK };

  static ProblemKind mp() { return ProblemKind(Tag::MP, 0); }
  static ProblemKind mps(unsigned s) { return ProblemKind(Tag::MPS, s); }
  static ProblemKind ak() { return ProblemKind(Tag::AK, 0); }

  Tag tag() const { return tag_; }
  // Component-size parameter; 0 for MP and AK.
  unsigned s() const { return s_; }

  // "mp", "mps(2)", "ak".
  std::string to_string() const;

  friend bool operator==(const ProblemKind&, const ProblemKind&) = default;

 private:
  ProblemKind(Tag tag, unsigned s) : tag_(tag), s_(s) {}
  Tag tag_;
  unsigned s_;
};

bool is_matching_preclusion_set(const Graph& g, const EdgeSet& f);
bool is_s_restricted_set(const Graph& g, const EdgeSet& f, unsigned s);
// Throws PreconditionError for odd-order g.
bool is_anti_kekule_set(const Graph& g, const EdgeSet& f);
// Dispatches on kind.
bool satisfies(const Graph& g, const EdgeSet& f, const ProblemKind& kind);

// I(v): every edge incident to v.
EdgeSet trivial_mp_set(const Graph& g, VertexId v);

enum class CertificateStatus {
  Optimal,     // value and witness are set
  Infinite,    // no set of any size satisfies the kind
  OverBudget,  // no set within the decision budget
};

enum class InfinityReason {
  None,
  // G already has no perfect/almost perfect matching (mp = +inf convention).
  NoPerfectOrAlmostPerfectMatching,
  // AK on a graph without a perfect matching.
  NoPerfectMatching,
  // Matchings can be destroyed, but never while meeting the side conditions.
  SideConditionsUnsatisfiable,
};

std::string_view to_string(CertificateStatus status);
std::string_view to_string(InfinityReason reason);

// Properties of G - witness (or of G itself when there is no witness).
struct Evidence {
  std::size_t nu_after = 0;
  std::size_t component_count = 0;
  std::size_t component_min_size = 0;
  bool connected = false;
};

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
  std::uint64_t depth_limits = 0;  // iterative-deepening rounds run
};

struct PreclusionCertificate {
  ProblemKind kind = ProblemKind::mp();
  CertificateStatus status = CertificateStatus::Infinite;
  std::optional<std::size_t> value;  // set iff status == Optimal
  std::optional<EdgeSet> witness;    // set iff status == Optimal
  InfinityReason reason = InfinityReason::None;
  std::optional<std::size_t> budget;
  Evidence evidence;
  SolveStats stats;

  bool is_infinite() const { return status == CertificateStatus::Infinite; }
};

struct SolveOptions {
  // Decision mode: stop after budget (the k of "is there a set of size <= k").
  std::optional<std::size_t> budget;
  // Return the lexicographically smallest optimal witness. Otherwise the
  // first witness found is returned.
  bool deterministic = true;
  // Threads used for the sibling branches of each search root.
  unsigned jobs = 1;
};

// Exact minimum via iterative deepening over the budget with matching-based
// branching: a residual graph that still has a maximum matching of size
// floor(n/2) forces any feasible superset to delete one of its edges.
PreclusionCertificate solve(const Graph& g, const ProblemKind& kind,
                            const SolveOptions& options = {});

inline constexpr std::size_t kDefaultSolveOracleEdgeLimit = 16;

struct BruteForceOptions {
  // At most 2^edge_limit subsets are enumerated before OracleLimitError.
  std::size_t edge_limit = kDefaultSolveOracleEdgeLimit;
  // Decision mode: subsets larger than this are never examined.
  std::optional<std::size_t> budget;
};

// Enumerates edge subsets by increasing size, lexicographically within a
// size, and returns the first one satisfying the kind's predicate.
PreclusionCertificate brute_force_solve(const Graph& g, const ProblemKind& kind,
                                        const BruteForceOptions& options = {});

}  // namespace preclusion
