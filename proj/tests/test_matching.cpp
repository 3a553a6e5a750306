#include <doctest.h>

#include <random>

#include "preclusion/error.hpp"
#include "preclusion/matching.hpp"

using namespace preclusion;

namespace {

bool is_valid_matching(const Graph& g, const Matching& m) {
  std::vector<int> used(g.order(), 0);
  for (EdgeId e : m.edges().members()) {
    if (used[g.edge(e).u]++ || used[g.edge(e).v]++) return false;
  }
  return m.edges().size() == m.size() && m.saturated().size() == 2 * m.size();
}

std::size_t brute_force_vertex_cover(const Graph& g) {
  std::size_t best = g.order();
  for (std::uint32_t mask = 0; mask < (1U << g.order()); ++mask) {
    bool covers = true;
    for (const Edge& e : g.edges()) {
      if (!((mask >> e.u) & 1U) && !((mask >> e.v) & 1U)) {
        covers = false;
        break;
      }
    }
    if (covers) best = std::min<std::size_t>(best, std::popcount(mask));
  }
  return best;
}

// Random graph on <= 12 vertices with at most 24 edges, odd cycles likely.
Graph random_small_graph(std::mt19937_64& rng) {
  for (;;) {
    const std::size_t n = 2 + rng() % 11;
    const double p = 0.15 + 0.5 * static_cast<double>(rng() % 1000) / 1000.0;
    Graph g = generate::random_gnp(n, p, rng());
    if (g.size() <= 24) return g;
  }
}

}  // namespace

TEST_CASE("max_matching examples") {
  CHECK(max_matching(generate::hypercube(3)).size() == 4);
  CHECK(max_matching(generate::path(3)).size() == 1);
  CHECK(max_matching(generate::petersen()).size() == 5);
  CHECK(is_valid_matching(generate::petersen(), max_matching(generate::petersen())));
}

TEST_CASE("matching_number examples") {
  CHECK(matching_number(generate::complete(2)) == 1);
  CHECK(matching_number(generate::cycle(6)) == 3);
  const Graph k33 = generate::complete_bipartite(3, 3);
  EdgeSet star(k33);
  for (const auto& inc : k33.neighbors(0)) star.insert(inc.edge);
  CHECK(matching_number(k33, star) == 2);
  CHECK(brute_force_matching_number(delete_edges(k33, star).graph) == 2);
}

TEST_CASE("perfect and almost perfect matchings") {
  CHECK(has_perfect_matching(generate::hypercube(3)));
  CHECK(has_almost_perfect_matching(generate::path(3)));
  CHECK_FALSE(has_perfect_matching(generate::path(3)));
  CHECK_FALSE(has_almost_perfect_matching(generate::hypercube(3)));
  const Graph c4 = generate::cycle(4);
  CHECK_FALSE(has_perfect_matching(delete_edges(c4, EdgeSet(c4, {0, 1})).graph));
  CHECK_FALSE(has_almost_perfect_matching(Graph(3, {})));
}

TEST_CASE("brute_force_matching_number") {
  CHECK(brute_force_matching_number(generate::cycle(4)) == 2);
  CHECK(brute_force_matching_number(generate::petersen()) == 5);
  CHECK(brute_force_matching_number(generate::complete(2)) == 1);
  CHECK_THROWS_AS(brute_force_matching_number(generate::hypercube(4)), OracleLimitError);
  CHECK(brute_force_matching_number(generate::hypercube(4), 32) == 8);
}

TEST_CASE("blossoms: odd cycles and flowers") {
  for (std::size_t n = 3; n <= 11; ++n) CHECK(matching_number(generate::cycle(n)) == n / 2);
  // Two triangles joined by a path; the stem forces contraction.
  const Graph flower(8, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 5}});
  CHECK(matching_number(flower) == 4);
  CHECK(matching_number(generate::complete(7)) == 3);
}

TEST_CASE("lexicographically smallest maximum matching") {
  const Graph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  const Matching m = max_matching(c6, TieBreak::LexMin);
  CHECK(m.edges().members() == std::vector<EdgeId>{0, 2, 4});
  const Graph q3 = generate::hypercube(3);
  const Matching lex = max_matching(q3, TieBreak::LexMin);
  CHECK(lex.size() == 4);
  CHECK(lex.edges().members().front() == 0);
}

TEST_CASE("property: engine agrees with the oracle on 600 random graphs") {
  std::mt19937_64 rng(2024);
  std::size_t non_bipartite = 0;
  for (int i = 0; i < 600; ++i) {
    const Graph g = random_small_graph(rng);
    if (!two_coloring(g)) ++non_bipartite;
    const Matching m = max_matching(g);
    CHECK(is_valid_matching(g, m));
    CHECK(m.size() == brute_force_matching_number(g));
    CHECK(max_matching(g, TieBreak::LexMin).size() == m.size());
  }
  CHECK(non_bipartite > 200);
}

TEST_CASE("property: Hopcroft-Karp path and Koenig duality") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 200; ++i) {
    const std::size_t t = 1 + rng() % 6;
    const Graph g = generate::random_bipartite_with_pm(t, 0.3, rng());
    const Graph h = delete_edges(g, EdgeSet(g, {static_cast<EdgeId>(rng() % g.size())})).graph;
    const Graph colored = with_bipartition(h);
    const std::size_t nu = matching_number(colored);
    CHECK(nu == brute_force_matching_number(h, 40));
    CHECK(nu == matching_number(Graph(h.order(), h.edges())));
    CHECK(nu == brute_force_vertex_cover(h));
  }
}

TEST_CASE("property: deleting edges never increases the matching number") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_small_graph(rng);
    EdgeSet f(g);
    for (EdgeId e = 0; e < g.size(); ++e) {
      if (rng() % 3 == 0) f.insert(e);
    }
    CHECK(matching_number(g, f) <= matching_number(g));
    CHECK(matching_number(g, f) == matching_number(delete_edges(g, f).graph));
    CHECK(is_precluded(g, f) == (matching_number(g, f) + 1 <= g.order() / 2));
  }
}
