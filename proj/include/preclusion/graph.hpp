#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace preclusion {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// Identifies the graph an EdgeSet belongs to. Copies of a Graph share it.
using GraphTag = std::uint64_t;

struct Edge {
  VertexId u;
  VertexId v;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  VertexId to;
  EdgeId edge;
};

// Immutable undirected simple graph. Vertices are 0..n-1, edges keep the
// index they were given at construction and are stored with u < v.
class Graph {
 public:
  Graph();

  // Throws ParameterError on self-loops, duplicate edges, out-of-range
  // endpoints, or a bipartition that some edge does not respect.
  Graph(std::size_t order, std::vector<Edge> edges,
        std::optional<std::vector<std::uint8_t>> bipartition = std::nullopt);

  std::size_t order() const { return data_->adjacency.size(); }
  std::size_t size() const { return data_->edges.size(); }

  const std::vector<Edge>& edges() const { return data_->edges; }
  const Edge& edge(EdgeId e) const { return data_->edges[e]; }

  // Neighbors sorted by vertex id.
  std::span<const Incidence> neighbors(VertexId v) const {
    return data_->adjacency[v];
  }
  std::size_t degree(VertexId v) const { return data_->adjacency[v].size(); }
  std::size_t min_degree() const;
  std::size_t max_degree() const;

  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const { return find_edge(u, v).has_value(); }

  // Side (0 or 1) of each vertex, when the graph carries a two-coloring.
  const std::optional<std::vector<std::uint8_t>>& bipartition() const {
    return data_->bipartition;
  }

  GraphTag tag() const { return data_->tag; }

  // Same vertex count, same edge set (ignoring edge order), same bipartition.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  struct Data {
    GraphTag tag;
    std::vector<Edge> edges;
    std::vector<std::vector<Incidence>> adjacency;
    std::optional<std::vector<std::uint8_t>> bipartition;
  };
  std::shared_ptr<const Data> data_;
};

// Subset of a graph's edges, stored as a bit vector over edge indices.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(const Graph& g);
  EdgeSet(const Graph& g, std::span<const EdgeId> members);
  EdgeSet(const Graph& g, std::initializer_list<EdgeId> members);

  GraphTag tag() const { return tag_; }
  std::size_t universe() const { return universe_; }

  bool contains(EdgeId e) const {
    return e < universe_ && ((words_[e >> 6] >> (e & 63)) & 1U);
  }
  void insert(EdgeId e);
  void erase(EdgeId e);

  std::size_t size() const;
  bool empty() const { return size() == 0; }

  // Members in increasing index order.
  std::vector<EdgeId> members() const;

  bool is_subset_of(const EdgeSet& other) const;
  EdgeSet& operator|=(const EdgeSet& other);

  // Throws TagMismatchError unless this set was built for g.
  void check_tag(const Graph& g) const;

  // Lexicographic comparison of the sorted member lists.
  static bool lex_less(const EdgeSet& a, const EdgeSet& b);

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  GraphTag tag_ = 0;
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ComponentReport {
  std::vector<std::vector<VertexId>> components;
  std::size_t min_size = 0;
  bool connected = false;
};

// Result of delete_edges: the residual graph and, for each of its edges, the
// index of the same edge in the original graph.
struct EdgeDeletion {
  Graph graph;
  std::vector<EdgeId> original_edge;
};

EdgeDeletion delete_edges(const Graph& g, const EdgeSet& removed);

ComponentReport components(const Graph& g);
// Components of g - removed without materializing the residual graph.
ComponentReport components(const Graph& g, const EdgeSet& removed);

// A proper two-coloring (BFS order, smallest vertex of each component gets 0),
// or nullopt if g has an odd cycle.
std::optional<std::vector<std::uint8_t>> two_coloring(const Graph& g);

// g with a bipartition attached (its own if present, otherwise computed).
// Throws PreconditionError when g is not bipartite.
Graph with_bipartition(const Graph& g);

// Edges incident to v.
EdgeSet incident_edges(const Graph& g, VertexId v);

namespace generate {

// Vertex i is the n-bit string of i; i ~ i XOR 2^k. Bipartition by bit parity.
Graph hypercube(unsigned n);
Graph complete(std::size_t n);
// Side 0 is vertices 0..a-1.
Graph complete_bipartite(std::size_t a, std::size_t b);
// Outer cycle 0..4, spokes i ~ i+5, inner pentagram 5+i ~ 5+(i+2)%5.
Graph petersen();
Graph cycle(std::size_t n);
Graph path(std::size_t n);

// Balanced bipartite graph on sides {0..t-1} and {t..2t-1} containing the
// planted matching i ~ t+i; every other cross pair is kept with probability
// extra_edge_prob. Deterministic for a fixed seed.
Graph random_bipartite_with_pm(std::size_t t, double extra_edge_prob,
                               std::uint64_t seed);

// Erdos-Renyi G(n, p). Deterministic for a fixed seed.
Graph random_gnp(std::size_t n, double p, std::uint64_t seed);

}  // namespace generate

}  // namespace preclusion
