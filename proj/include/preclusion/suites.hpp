#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "preclusion/graph.hpp"
#include "preclusion/reduction.hpp"
#include "preclusion/solver.hpp"

namespace preclusion::suites {

using Value = std::optional<std::size_t>;  // nullopt = +infinity

// Orders values with +infinity on top.
bool value_le(const Value& a, const Value& b);

// Seeded instance generators; instance i depends only on (seed, i).
// Even order in {4, 6, 8}, at most max_edges edges.
Graph random_even_graph(std::uint64_t seed, std::uint64_t index, std::size_t max_edges = 14);
// Even order in {6, 8, 10}, minimum degree >= 3.
Graph random_min_degree3_graph(std::uint64_t seed, std::uint64_t index);
// Balanced bipartite with a planted perfect matching, 1 <= t <= max_t.
Graph random_reduction_source(std::uint64_t seed, std::uint64_t index, std::size_t max_t = 5);

struct ChainOptions {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  unsigned max_s = 3;
  unsigned jobs = 1;
};

struct ChainInstance {
  std::uint64_t index = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Value> brute;   // s = 0..max_s, brute_force_solve
  std::vector<Value> solved;  // s = 0..max_s, solve
  bool monotone = false;
  bool agree = false;
};

struct ChainReport {
  std::size_t instances = 0;
  std::size_t monotone_failures = 0;
  std::size_t disagreements = 0;
  std::vector<ChainInstance> failures;  // capped
  std::vector<ChainInstance> samples;   // first few, for the report
  SolveStats stats;
  bool pass() const { return instances > 0 && monotone_failures == 0 && disagreements == 0; }
};

// mp = mp_0 <= mp_1 <= ... <= mp_max_s on random even-order graphs, with
// every value computed by both the oracle and the branch-and-bound.
ChainReport run_chain(const ChainOptions& options);

struct Lemma3Options {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  unsigned jobs = 1;
};

struct Lemma3Instance {
  std::uint64_t index = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t v_e = 0;
  Value mp1;
  bool holds = false;
};

struct Lemma3Report {
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::size_t tight = 0;  // mp_1 == v_e
  std::vector<Lemma3Instance> failures;
  std::vector<Lemma3Instance> samples;
  SolveStats stats;
  bool pass() const { return instances > 0 && violations == 0; }
};

// mp_1(G) <= v_e(G) on random even-order graphs of minimum degree >= 3.
Lemma3Report run_lemma3(const Lemma3Options& options);

struct ReductionFuzzOptions {
  std::uint64_t seed = 42;
  std::size_t count = 200;
  std::size_t max_t = 5;
  std::vector<unsigned> s_values = {1, 2};
  std::size_t edge_limit = 24;
  unsigned jobs = 1;
};

struct ReductionFuzzInstance {
  std::uint64_t index = 0;
  std::size_t t = 0;
  std::size_t source_edges = 0;
  EquivalenceProfile profile;
  bool agree = false;
  bool forward_ok = false;
  bool backward_ok = false;
};

struct ReductionFuzzReport {
  std::size_t instances = 0;
  std::size_t k_checks = 0;  // (source, k) pairs compared
  std::size_t agreements = 0;
  std::size_t forward_failures = 0;
  std::size_t backward_failures = 0;
  // Hits per ExtractionCase across all backward extractions.
  std::array<std::size_t, 4> extraction_cases{};
  std::vector<ReductionFuzzInstance> failures;
  std::vector<ReductionFuzzInstance> samples;
  bool pass() const {
    return instances > 0 && agreements == instances && forward_failures == 0 &&
           backward_failures == 0;
  }
};

// For each random source: mp(G) <= k <=> ak(G') <= k+1 <=> mp_s(G') <= k+1
// for every k in 0..|E| (brute-force oracle only), plus forward/backward
// witness round trips.
ReductionFuzzReport run_reduction_fuzz(const ReductionFuzzOptions& options);

}  // namespace preclusion::suites
