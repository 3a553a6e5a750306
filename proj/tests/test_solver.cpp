#include <doctest.h>

#include <random>

#include "preclusion/error.hpp"
#include "preclusion/hypercube.hpp"
#include "preclusion/matching.hpp"
#include "preclusion/reduction.hpp"
#include "preclusion/solver.hpp"

using namespace preclusion;

namespace {

const std::vector<ProblemKind>& all_kinds() {
  static const std::vector<ProblemKind> kinds = {ProblemKind::mp(), ProblemKind::mps(1),
                                                 ProblemKind::mps(2), ProblemKind::mps(3),
                                                 ProblemKind::ak()};
  return kinds;
}

Graph random_instance(std::mt19937_64& rng, bool even_only) {
  for (;;) {
    std::size_t n = 2 + rng() % 7;
    if (even_only && n % 2) ++n;
    const double p = 0.3 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
    Graph g = generate::random_gnp(n, p, rng());
    if (g.size() <= 14) return g;
  }
}

}  // namespace

TEST_CASE("problem kinds") {
  CHECK(ProblemKind::mp().to_string() == "mp");
  CHECK(ProblemKind::mps(2).to_string() == "mps(2)");
  CHECK(ProblemKind::ak().to_string() == "ak");
  CHECK(ProblemKind::mps(1).s() == 1);
}

TEST_CASE("predicates") {
  const Graph k2 = generate::complete(2);
  const Graph q3 = generate::hypercube(3);
  const Graph c4 = generate::cycle(4);
  const Graph c6 = generate::cycle(6);

  CHECK(is_matching_preclusion_set(k2, EdgeSet(k2, {0})));
  for (EdgeId a = 0; a < q3.size(); ++a) {
    for (EdgeId b = a + 1; b < q3.size(); ++b) CHECK_FALSE(is_matching_preclusion_set(q3, EdgeSet(q3, {a, b})));
  }
  // C4 edges: 0-1, 1-2, 2-3, 0-3.
  CHECK_FALSE(is_matching_preclusion_set(c4, EdgeSet(c4, {0, 2})));
  CHECK(is_matching_preclusion_set(c4, EdgeSet(c4, {0, 1})));

  CHECK_FALSE(is_s_restricted_set(q3, trivial_mp_set(q3, 0), 1));
  const EdgeSet tc = trivial_conditional_set(q3, two_paths(q3).front());
  CHECK(is_s_restricted_set(q3, tc, 2));
  CHECK_FALSE(is_s_restricted_set(c4, EdgeSet(c4, {0, 2}), 1));

  for (EdgeId e = 0; e < c6.size(); ++e) CHECK_FALSE(is_anti_kekule_set(c6, EdgeSet(c6, {e})));
  const ReductionInstance r = build_reduction(k2);
  CHECK(is_anti_kekule_set(r.gadget, EdgeSet(r.gadget, {0, r.e})));
  CHECK_FALSE(is_anti_kekule_set(k2, EdgeSet(k2, {0})));
  const Graph p3 = generate::path(3);
  CHECK_THROWS_AS(is_anti_kekule_set(p3, EdgeSet(p3)), PreconditionError);

  CHECK_THROWS_AS(is_matching_preclusion_set(q3, EdgeSet(c4)), TagMismatchError);
  CHECK(satisfies(q3, tc, ProblemKind::mps(2)));
}

TEST_CASE("mps(0) is mp") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_instance(rng, false);
    EdgeSet f(g);
    for (EdgeId e = 0; e < g.size(); ++e) {
      if (rng() % 2) f.insert(e);
    }
    CHECK(is_s_restricted_set(g, f, 0) == is_matching_preclusion_set(g, f));
  }
}

TEST_CASE("trivial_mp_set") {
  CHECK(trivial_mp_set(generate::hypercube(3), 5).size() == 3);
  CHECK(trivial_mp_set(generate::petersen(), 7).size() == 3);
  CHECK(trivial_mp_set(generate::complete(2), 0).members() == std::vector<EdgeId>{0});
}

TEST_CASE("solve examples") {
  const Graph q3 = generate::hypercube(3);
  const auto mp = solve(q3, ProblemKind::mp());
  CHECK(mp.status == CertificateStatus::Optimal);
  CHECK(mp.value == 3);
  REQUIRE(mp.witness);
  bool is_star = false;
  for (VertexId v = 0; v < q3.order(); ++v) is_star = is_star || *mp.witness == trivial_mp_set(q3, v);
  CHECK(is_star);
  CHECK(mp.evidence.nu_after == 3);

  CHECK(solve(q3, ProblemKind::mps(1)).value == 4);
  CHECK(solve(generate::cycle(4), ProblemKind::mp()).value == 2);

  const auto c4 = solve(generate::cycle(4), ProblemKind::mps(1));
  CHECK(c4.status == CertificateStatus::Infinite);
  CHECK(c4.reason == InfinityReason::SideConditionsUnsatisfiable);
  CHECK_FALSE(c4.witness);

  const auto c6 = solve(generate::cycle(6), ProblemKind::ak());
  CHECK(c6.is_infinite());
  CHECK_FALSE(c6.value);
}

TEST_CASE("infinity conventions") {
  const auto no_pm = solve(Graph(4, {{0, 1}}), ProblemKind::mp());
  CHECK(no_pm.is_infinite());
  CHECK(no_pm.reason == InfinityReason::NoPerfectOrAlmostPerfectMatching);
  const auto ak = solve(Graph(4, {{0, 1}}), ProblemKind::ak());
  CHECK(ak.reason == InfinityReason::NoPerfectMatching);
  // Deleting one edge of P3 still leaves an almost perfect matching.
  CHECK(solve(generate::path(3), ProblemKind::mp()).value == 2);
  CHECK_THROWS_AS(solve(generate::path(3), ProblemKind::ak()), PreconditionError);
  CHECK(solve(generate::hypercube(3), ProblemKind::mps(8)).is_infinite());
}

TEST_CASE("decision mode") {
  const Graph q3 = generate::hypercube(3);
  SolveOptions opt;
  opt.budget = 2;
  const auto over = solve(q3, ProblemKind::mp(), opt);
  CHECK(over.status == CertificateStatus::OverBudget);
  CHECK(over.budget == 2);
  opt.budget = 3;
  CHECK(solve(q3, ProblemKind::mp(), opt).value == 3);
  BruteForceOptions bopt;
  bopt.budget = 2;
  CHECK(brute_force_solve(q3, ProblemKind::mp(), bopt).status == CertificateStatus::OverBudget);
}

TEST_CASE("brute_force_solve examples") {
  CHECK(brute_force_solve(generate::complete(2), ProblemKind::mp()).value == 1);
  const Graph q3 = generate::hypercube(3);
  CHECK(brute_force_solve(q3, ProblemKind::mp()).value == 3);
  CHECK(brute_force_solve(generate::cycle(6), ProblemKind::ak()).is_infinite());
  CHECK_THROWS_AS(brute_force_solve(generate::hypercube(4), ProblemKind::mps(1)), OracleLimitError);
}

TEST_CASE("witness is the lexicographically smallest optimum and independent of jobs") {
  const Graph q3 = generate::hypercube(3);
  const auto oracle = brute_force_solve(q3, ProblemKind::mps(1));
  for (unsigned jobs : {1U, 2U, 4U}) {
    SolveOptions opt;
    opt.jobs = jobs;
    const auto cert = solve(q3, ProblemKind::mps(1), opt);
    REQUIRE(cert.witness);
    CHECK(cert.witness->members() == oracle.witness->members());
  }
  SolveOptions fast;
  fast.deterministic = false;
  const auto any = solve(q3, ProblemKind::mps(1), fast);
  CHECK(any.value == 4);
  CHECK(is_s_restricted_set(q3, *any.witness, 1));
}

TEST_CASE("property: solve matches the oracle and certificates are sound") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 150; ++i) {
    const Graph g = random_instance(rng, false);
    for (const auto& kind : all_kinds()) {
      if (kind.tag() == ProblemKind::Tag::AK && g.order() % 2) continue;
      const auto oracle = brute_force_solve(g, kind);
      const auto exact = solve(g, kind);
      CHECK(exact.status == oracle.status);
      CHECK(exact.value == oracle.value);
      if (exact.witness) {
        CHECK(exact.witness->size() == *exact.value);
        CHECK(satisfies(g, *exact.witness, kind));
        // Brute force scans lexicographically, so both report the same optimum.
        CHECK(exact.witness->members() == oracle.witness->members());
      }
    }
  }
}

TEST_CASE("property: mp <= ak and mp <= min degree on even order") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 150; ++i) {
    const Graph g = random_instance(rng, true);
    const auto mp = solve(g, ProblemKind::mp());
    const auto ak = solve(g, ProblemKind::ak());
    if (ak.value) {
      REQUIRE(mp.value);
      CHECK(*mp.value <= *ak.value);
    }
    if (mp.value) CHECK(*mp.value <= g.min_degree());
    if (has_perfect_matching(g)) {
      for (VertexId v = 0; v < g.order(); ++v) CHECK(is_matching_preclusion_set(g, trivial_mp_set(g, v)));
    }
  }
}

TEST_CASE("chain on Q3") {
  const Graph q3 = generate::hypercube(3);
  CHECK(solve(q3, ProblemKind::mp()).value == 3);
  CHECK(solve(q3, ProblemKind::mps(1)).value == 4);
  CHECK(solve(q3, ProblemKind::mps(2)).value == 4);
  CHECK(solve(q3, ProblemKind::mps(3)).value == 4);
}
