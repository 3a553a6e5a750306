#include <doctest.h>

#include <random>

#include "preclusion/error.hpp"
#include "preclusion/matching.hpp"
#include "preclusion/reduction.hpp"
#include "preclusion/suites.hpp"

using namespace preclusion;

namespace {

void check_gadget_structure(const ReductionInstance& r) {
  const Graph& g = r.gadget;
  CHECK(g.order() == 2 * r.t + 4);
  CHECK(g.size() == r.source.size() + 2 * r.t + 4);
  for (EdgeId e = 0; e < r.source.size(); ++e) CHECK(g.edge(e) == r.source.edge(e));

  const std::vector<VertexId> added = {r.u_prime, r.u_dprime, r.v_prime, r.v_dprime};
  std::size_t induced = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) induced += g.has_edge(added[i], added[j]) ? 1 : 0;
  }
  CHECK(induced == 4);
  CHECK(g.has_edge(r.u_prime, r.v_prime));
  CHECK(g.has_edge(r.u_prime, r.v_dprime));
  CHECK(g.has_edge(r.u_dprime, r.v_prime));
  CHECK(g.has_edge(r.u_dprime, r.v_dprime));
  CHECK(g.degree(r.u_dprime) == 2);
  CHECK(g.degree(r.v_dprime) == 2);
  CHECK(g.edge(r.e) == Edge{r.u_dprime, r.v_dprime});
  CHECK(g.edge(r.e_prime) == Edge{r.u_prime, r.v_prime});

  const auto& side = *r.source.bipartition();
  for (VertexId x = 0; x < 2 * r.t; ++x) {
    CHECK(g.has_edge(x, side[x] == 0 ? r.v_prime : r.u_prime));
    CHECK_FALSE(g.has_edge(x, side[x] == 0 ? r.u_prime : r.v_prime));
  }
  CHECK(g.bipartition());
}

}  // namespace

TEST_CASE("build_reduction examples") {
  const ReductionInstance k2 = build_reduction(generate::complete(2));
  CHECK(k2.gadget.order() == 6);
  CHECK(k2.gadget.size() == 7);
  check_gadget_structure(k2);

  const ReductionInstance k33 = build_reduction(generate::complete_bipartite(3, 3));
  CHECK(k33.gadget.order() == 10);
  CHECK(k33.gadget.size() == 19);

  const ReductionInstance r = build_reduction(generate::random_bipartite_with_pm(4, 0.3, 17));
  CHECK(r.gadget.order() == 12);
  CHECK(has_perfect_matching(r.gadget));
  CHECK(ReductionInstance::gadget_budget(3) == 4);
}

TEST_CASE("build_reduction preconditions") {
  CHECK_THROWS_AS(build_reduction(generate::complete_bipartite(2, 3)), PreconditionError);
  CHECK_THROWS_AS(build_reduction(generate::petersen()), PreconditionError);
  CHECK_THROWS_AS(build_reduction(Graph(4, {{0, 2}, {1, 2}},
                                        std::vector<std::uint8_t>{0, 0, 1, 1})),
                  PreconditionError);
  // Uncolored bipartite input is colored on the fly.
  CHECK(build_reduction(Graph(4, {{0, 1}, {2, 3}})).t == 2);
}

TEST_CASE("forward_witness") {
  const ReductionInstance r = build_reduction(generate::complete(2));
  const EdgeSet b(r.source, {0});
  const EdgeSet bp = forward_witness(r, b);
  CHECK(bp.members() == std::vector<EdgeId>{0, r.e});
  CHECK(components(r.gadget, bp).connected);
  CHECK_FALSE(has_perfect_matching(delete_edges(r.gadget, bp).graph));
  CHECK(is_anti_kekule_set(r.gadget, bp));
  CHECK_THROWS_AS(forward_witness(r, EdgeSet(r.source)), PreconditionError);
}

TEST_CASE("backward_extract cases") {
  const ReductionInstance r = build_reduction(generate::complete(2));
  const EdgeSet with_e(r.gadget, {0, r.e});
  CHECK(classify_extraction(r, with_e, 1) == ExtractionCase::ContainsE);
  CHECK(backward_extract(r, with_e, 1).members() == std::vector<EdgeId>{0});

  CHECK_THROWS_AS(backward_extract(r, EdgeSet(r.gadget, {0}), 1), PreconditionError);
  CHECK_THROWS_AS(backward_extract(r, with_e, 0), PreconditionError);

  // On the C4 gadget, every anti-Kekule set avoiding e whose source part
  // already precludes is returned as that source part.
  const ReductionInstance c4 = build_reduction(generate::complete_bipartite(2, 2));
  std::size_t seen = 0;
  for (std::uint32_t mask = 0; mask < (1U << c4.gadget.size()); ++mask) {
    if ((mask >> c4.e) & 1U) continue;
    EdgeSet bp(c4.gadget);
    EdgeSet source_part(c4.source);
    for (EdgeId e = 0; e < c4.gadget.size(); ++e) {
      if (!((mask >> e) & 1U)) continue;
      bp.insert(e);
      if (c4.is_source_edge(e)) source_part.insert(e);
    }
    if (!is_anti_kekule_set(c4.gadget, bp) || !is_matching_preclusion_set(c4.source, source_part)) continue;
    const std::size_t k = bp.size();
    if (source_part.size() > k) continue;
    ++seen;
    CHECK(classify_extraction(c4, bp, k) == ExtractionCase::IntersectionPrecludes);
    CHECK(backward_extract(c4, bp, k).members() == source_part.members());
  }
  CHECK(seen > 0);
}

TEST_CASE("verify_equivalence examples") {
  const auto k2_1 = verify_equivalence(generate::complete(2), 1);
  CHECK(k2_1.left);
  CHECK(k2_1.right_ak);
  CHECK(k2_1.right_mps);
  CHECK(k2_1.agree);
  const auto k2_0 = verify_equivalence(generate::complete(2), 0);
  CHECK_FALSE(k2_0.left);
  CHECK_FALSE(k2_0.right_ak);
  CHECK_FALSE(k2_0.right_mps);
  CHECK(k2_0.agree);
  const auto k33 = verify_equivalence(generate::complete_bipartite(3, 3), 2);
  CHECK_FALSE(k33.left);
  CHECK_FALSE(k33.right_ak);
  CHECK(k33.agree);
}

TEST_CASE("property: gadget structure and profiles on random sources") {
  for (std::uint64_t i = 0; i < 30; ++i) {
    const Graph g = suites::random_reduction_source(9, i, 4);
    const ReductionInstance r = build_reduction(g);
    check_gadget_structure(r);
    const auto profile = equivalence_profile(g, {1, 2});
    CHECK(profile.agrees_for_all_k());
    CHECK_FALSE(profile.first_disagreement());
  }
}

TEST_CASE("property: forward and backward witnesses round trip") {
  std::mt19937_64 rng(31);
  for (std::uint64_t i = 0; i < 25; ++i) {
    const Graph g = suites::random_reduction_source(5, i, 3);
    const ReductionInstance r = build_reduction(g);
    const auto source = brute_force_solve(r.source, ProblemKind::mp());
    REQUIRE(source.witness);
    const EdgeSet bp = forward_witness(r, *source.witness);
    CHECK(is_anti_kekule_set(r.gadget, bp));
    CHECK(is_s_restricted_set(r.gadget, bp, 1));

    for (int attempt = 0; attempt < 200; ++attempt) {
      EdgeSet candidate(r.gadget);
      for (EdgeId e = 0; e < r.gadget.size(); ++e) {
        if (rng() % 4 == 0) candidate.insert(e);
      }
      for (const auto& kind : {ProblemKind::ak(), ProblemKind::mps(1), ProblemKind::mps(2)}) {
        if (!satisfies(r.gadget, candidate, kind)) continue;
        const std::size_t k = candidate.size() - 1;
        const EdgeSet b = backward_extract(r, candidate, k, kind);
        CHECK(b.size() <= k);
        CHECK(is_matching_preclusion_set(r.source, b));
      }
    }
  }
}
