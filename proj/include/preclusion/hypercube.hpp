#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "preclusion/graph.hpp"
#include "preclusion/solver.hpp"

namespace preclusion {

// Path u - w - v with u != v.
struct TwoPath {
  VertexId u;
  VertexId w;
  VertexId v;
  friend bool operator==(const TwoPath&, const TwoPath&) = default;
};

// I(x).
EdgeSet incident_set(const Graph& g, VertexId x);
// I(uv) = I(u) u I(v) minus uv itself.
EdgeSet incident_pair_set(const Graph& g, EdgeId uv);

// All 2-paths, by middle vertex w and then by unordered neighbor pair u < v.
std::vector<TwoPath> two_paths(const Graph& g);

// (I(u) u I(v)) minus {uw, wv}. Throws PreconditionError if p is not a
// 2-path of g.
EdgeSet trivial_conditional_set(const Graph& g, const TwoPath& p);

// min over 2-paths uwv of d(u) + d(v) - 2 - [u ~ v]; nullopt without 2-paths.
std::optional<std::size_t> compute_v_e(const Graph& g);

bool check_connected_after(const Graph& g, const EdgeSet& f);

// Sorted edge-index lists, capped so reports stay small.
using EdgeList = std::vector<EdgeId>;
inline constexpr std::size_t kMaxReportedCounterexamples = 10;

struct Lemma4Report {
  unsigned n = 0;
  std::size_t set_size = 0;                 // 2n - 2
  std::uint64_t subsets_checked = 0;        // all subsets of size 2n - 2
  std::uint64_t conditional_sets = 0;       // of those, mp_1 sets
  std::uint64_t nontrivial_sets = 0;
  std::vector<EdgeList> counterexamples;
  std::size_t trivial_sets = 0;             // distinct trivial conditional sets
  bool trivial_sets_all_conditional = false;
  std::uint64_t smaller_subsets_checked = 0;  // all subsets of size 2n - 3
  std::uint64_t smaller_conditional_sets = 0;
  bool pass = false;
};

struct Lemma4Options {
  // n = 4 enumerates ~1.1 million subsets and must be requested explicitly.
  bool allow_long = false;
  unsigned jobs = 1;
};

// Exhaustively checks, on Q_n, that every conditional (s = 1) matching
// preclusion set of size 2n-2 is a trivial conditional set, that every
// trivial conditional set is one, and that no smaller set is.
// n = 3 always; n = 4 with allow_long; BudgetError beyond.
Lemma4Report verify_optimal_conditional_sets_trivial(unsigned n, const Lemma4Options& options = {});

struct Lemma5Report {
  unsigned n = 0;
  std::size_t set_size = 0;  // 2n - 2

  // Literal statement: |F| = 2n-2 and F != I(uv) for all uv => connected.
  EdgeList literal_counterexample;  // I(0) padded with non-incident edges
  bool literal_counterexample_disconnects = false;
  bool literal_counterexample_differs_from_every_pair_set = false;

  // Corrected statement: additionally F contains no full star I(w).
  bool exhaustive = false;
  std::uint64_t corrected_checked = 0;   // subsets examined
  std::uint64_t corrected_excluded = 0;  // equal to some I(uv) or containing some I(w)
  std::uint64_t corrected_failures = 0;
  std::vector<EdgeList> corrected_counterexamples;
  bool corrected_pass = false;

  // Every trivial conditional set leaves Q_n connected.
  std::uint64_t trivial_sets_checked = 0;
  bool trivial_sets_connected = false;

  bool literal_counterexample_reproduced() const {
    return literal_counterexample_disconnects && literal_counterexample_differs_from_every_pair_set;
  }
  bool pass() const {
    return literal_counterexample_reproduced() && corrected_pass && trivial_sets_connected;
  }
};

struct Lemma5Options {
  // Used when the subset count exceeds exhaustive_limit.
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  std::uint64_t exhaustive_limit = 100000;
  unsigned jobs = 1;
};

// 2 <= n <= 10.
Lemma5Report verify_super_connectivity(unsigned n, const Lemma5Options& options = {});

// Every trivial conditional set of Q_n should have size 2n-2 and leave Q_n
// connected and without a perfect matching.
struct TrivialSetCheck {
  std::uint64_t two_paths = 0;
  std::uint64_t wrong_size = 0;
  std::uint64_t disconnected = 0;
  std::uint64_t with_perfect_matching = 0;
  bool pass() const { return wrong_size == 0 && disconnected == 0 && with_perfect_matching == 0; }
};
TrivialSetCheck check_trivial_conditional_sets(unsigned n);

enum class LowerBoundMethod { Exhaustive, Cited };

struct MpsHypercubeReport {
  unsigned n = 0;
  unsigned s = 0;
  std::size_t claimed_value = 0;  // 2n - 2
  TwoPath path{};
  EdgeList upper_witness;
  bool upper_bound_verified = false;
  LowerBoundMethod lower_bound_method = LowerBoundMethod::Cited;
  // Exhaustive: no s-restricted set of size <= 2n-3 exists.
  // Cited: mp_s >= mp_1 = 2n - 2 taken as an assumed baseline.
  bool lower_bound_verified = false;
  SolveStats lower_bound_stats;
  PreclusionCertificate certificate;

  bool pass() const {
    return upper_bound_verified &&
           (lower_bound_method == LowerBoundMethod::Cited || lower_bound_verified);
  }
};

struct MpsHypercubeOptions {
  // Exhaustive lower bound for n <= this.
  unsigned exact_up_to = 4;
  unsigned jobs = 1;
};

// 3 <= n <= 16 and 2 <= s <= 2^n - 1, else ParameterError.
MpsHypercubeReport verify_mps_hypercube(unsigned n, unsigned s,
                                        const MpsHypercubeOptions& options = {});

}  // namespace preclusion
