#include "preclusion/graph.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <queue>
#include <utility>

#include "preclusion/error.hpp"
#include "random.hpp"

namespace preclusion {
namespace {

GraphTag next_tag() {
  static std::atomic<GraphTag> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ParameterError(message);
}

}  // namespace

Graph::Graph() : Graph(0, {}) {}

Graph::Graph(std::size_t order, std::vector<Edge> edges,
             std::optional<std::vector<std::uint8_t>> bipartition) {
  auto data = std::make_shared<Data>();
  data->tag = next_tag();
  data->adjacency.resize(order);
  data->edges.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u >= order || e.v >= order) {
      throw ParameterError("edge (" + std::to_string(e.u) + ", " +
                           std::to_string(e.v) + ") out of range for " +
                           std::to_string(order) + " vertices");
    }
    if (e.u == e.v) {
      throw ParameterError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    const auto id = static_cast<EdgeId>(data->edges.size());
    data->edges.push_back(e);
    data->adjacency[e.u].push_back({e.v, id});
    data->adjacency[e.v].push_back({e.u, id});
  }
  for (VertexId v = 0; v < order; ++v) {
    auto& adj = data->adjacency[v];
    std::sort(adj.begin(), adj.end(),
              [](const Incidence& a, const Incidence& b) { return a.to < b.to; });
    for (std::size_t i = 1; i < adj.size(); ++i) {
      if (adj[i].to == adj[i - 1].to) {
        throw ParameterError("duplicate edge (" + std::to_string(v) + ", " +
                             std::to_string(adj[i].to) + ")");
      }
    }
  }
  if (bipartition) {
    require(bipartition->size() == order, "bipartition size does not match vertex count");
    for (auto side : *bipartition) require(side <= 1, "bipartition sides must be 0 or 1");
    for (const Edge& e : data->edges) {
      if ((*bipartition)[e.u] == (*bipartition)[e.v]) {
        throw ParameterError("edge (" + std::to_string(e.u) + ", " +
                             std::to_string(e.v) + ") lies inside one side of the bipartition");
      }
    }
  }
  data->bipartition = std::move(bipartition);
  data_ = std::move(data);
}

std::size_t Graph::min_degree() const {
  std::size_t best = order() == 0 ? 0 : SIZE_MAX;
  for (const auto& adj : data_->adjacency) best = std::min(best, adj.size());
  return best;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& adj : data_->adjacency) best = std::max(best, adj.size());
  return best;
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
  if (u >= order() || v >= order()) return std::nullopt;
  const auto& adj = data_->adjacency[u];
  auto it = std::lower_bound(adj.begin(), adj.end(), v,
                             [](const Incidence& a, VertexId x) { return a.to < x; });
  if (it == adj.end() || it->to != v) return std::nullopt;
  return it->edge;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.bipartition() != b.bipartition()) return false;
  auto sorted = [](const Graph& g) {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(g.size());
    for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
    std::sort(out.begin(), out.end());
    return out;
  };
  return sorted(a) == sorted(b);
}

// --- EdgeSet ---------------------------------------------------------------

EdgeSet::EdgeSet(const Graph& g)
    : tag_(g.tag()), universe_(g.size()), words_((g.size() + 63) / 64, 0) {}

EdgeSet::EdgeSet(const Graph& g, std::span<const EdgeId> members) : EdgeSet(g) {
  for (EdgeId e : members) insert(e);
}

EdgeSet::EdgeSet(const Graph& g, std::initializer_list<EdgeId> members)
    : EdgeSet(g, std::span<const EdgeId>(members.begin(), members.size())) {}

void EdgeSet::insert(EdgeId e) {
  if (e >= universe_) {
    throw ParameterError("edge index " + std::to_string(e) + " out of range");
  }
  words_[e >> 6] |= std::uint64_t{1} << (e & 63);
}

void EdgeSet::erase(EdgeId e) {
  if (e < universe_) words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
}

std::size_t EdgeSet::size() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<EdgeId> EdgeSet::members() const {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (auto w = words_[i]; w != 0; w &= w - 1) {
      out.push_back(static_cast<EdgeId>(i * 64 + std::countr_zero(w)));
    }
  }
  return out;
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
  if (tag_ != other.tag_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& other) {
  if (tag_ != other.tag_) throw TagMismatchError("union of edge sets from different graphs");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

void EdgeSet::check_tag(const Graph& g) const {
  if (tag_ != g.tag() || universe_ != g.size()) {
    throw TagMismatchError("edge set does not belong to this graph");
  }
}

bool EdgeSet::lex_less(const EdgeSet& a, const EdgeSet& b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

// --- queries -----------------------------------------------------------------

EdgeDeletion delete_edges(const Graph& g, const EdgeSet& removed) {
  removed.check_tag(g);
  EdgeDeletion out;
  std::vector<Edge> kept;
  kept.reserve(g.size());
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (removed.contains(e)) continue;
    kept.push_back(g.edge(e));
    out.original_edge.push_back(e);
  }
  out.graph = Graph(g.order(), std::move(kept), g.bipartition());
  return out;
}

namespace {

ComponentReport components_impl(const Graph& g, const EdgeSet* removed) {
  ComponentReport report;
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack;
  for (VertexId root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<VertexId> comp;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (const Incidence& inc : g.neighbors(x)) {
        if (seen[inc.to] || (removed && removed->contains(inc.edge))) continue;
        seen[inc.to] = 1;
        stack.push_back(inc.to);
      }
    }
    std::sort(comp.begin(), comp.end());
    report.components.push_back(std::move(comp));
  }
  report.min_size = n == 0 ? 0 : SIZE_MAX;
  for (const auto& c : report.components) report.min_size = std::min(report.min_size, c.size());
  report.connected = report.components.size() == 1;
  return report;
}

}  // namespace

ComponentReport components(const Graph& g) { return components_impl(g, nullptr); }

ComponentReport components(const Graph& g, const EdgeSet& removed) {
  removed.check_tag(g);
  return components_impl(g, &removed);
}

std::optional<std::vector<std::uint8_t>> two_coloring(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint8_t> side(n, 2);
  std::queue<VertexId> queue;
  for (VertexId root = 0; root < n; ++root) {
    if (side[root] != 2) continue;
    side[root] = 0;
    queue.push(root);
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop();
      for (const Incidence& inc : g.neighbors(x)) {
        if (side[inc.to] == 2) {
          side[inc.to] = static_cast<std::uint8_t>(1 - side[x]);
          queue.push(inc.to);
        } else if (side[inc.to] == side[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

Graph with_bipartition(const Graph& g) {
  if (g.bipartition()) return g;
  auto coloring = two_coloring(g);
  if (!coloring) throw PreconditionError("graph is not bipartite");
  return Graph(g.order(), g.edges(), std::move(coloring));
}

EdgeSet incident_edges(const Graph& g, VertexId v) {
  if (v >= g.order()) throw ParameterError("vertex " + std::to_string(v) + " out of range");
  EdgeSet out(g);
  for (const Incidence& inc : g.neighbors(v)) out.insert(inc.edge);
  return out;
}

// --- generators --------------------------------------------------------------

namespace generate {

Graph hypercube(unsigned n) {
  require(n >= 1, "hypercube dimension must be at least 1");
  require(n <= 20, "hypercube dimension must be at most 20");
  const std::size_t order = std::size_t{1} << n;
  std::vector<Edge> edges;
  edges.reserve(order * n / 2);
  std::vector<std::uint8_t> side(order);
  for (std::size_t i = 0; i < order; ++i) {
    side[i] = static_cast<std::uint8_t>(std::popcount(i) & 1);
    for (unsigned k = 0; k < n; ++k) {
      std::size_t j = i ^ (std::size_t{1} << k);
      if (i < j) edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
    }
  }
  return Graph(order, std::move(edges), std::move(side));
}

Graph complete(std::size_t n) {
  require(n >= 1, "complete graph needs at least 1 vertex");
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  require(a >= 1 && b >= 1, "complete bipartite sides must be positive");
  std::vector<Edge> edges;
  for (VertexId i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) edges.push_back({i, static_cast<VertexId>(a + j)});
  }
  std::vector<std::uint8_t> side(a + b, 0);
  std::fill(side.begin() + static_cast<std::ptrdiff_t>(a), side.end(), 1);
  return Graph(a + b, std::move(edges), std::move(side));
}

Graph petersen() {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
  for (VertexId i = 0; i < 5; ++i) edges.push_back({i, i + 5});
  for (VertexId i = 0; i < 5; ++i) edges.push_back({5 + i, 5 + (i + 2) % 5});
  return Graph(10, std::move(edges));
}

Graph cycle(std::size_t n) {
  require(n >= 3, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) {
    edges.push_back({i, static_cast<VertexId>((i + 1) % n)});
  }
  std::optional<std::vector<std::uint8_t>> side;
  if (n % 2 == 0) {
    side.emplace(n);
    for (std::size_t i = 0; i < n; ++i) (*side)[i] = static_cast<std::uint8_t>(i & 1);
  }
  return Graph(n, std::move(edges), std::move(side));
}

Graph path(std::size_t n) {
  require(n >= 1, "path needs at least 1 vertex");
  std::vector<Edge> edges;
  std::vector<std::uint8_t> side(n);
  for (VertexId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  for (std::size_t i = 0; i < n; ++i) side[i] = static_cast<std::uint8_t>(i & 1);
  return Graph(n, std::move(edges), std::move(side));
}

Graph random_bipartite_with_pm(std::size_t t, double extra_edge_prob, std::uint64_t seed) {
  require(t >= 1, "side size must be at least 1");
  require(extra_edge_prob >= 0.0 && extra_edge_prob <= 1.0,
          "edge probability must lie in [0, 1]");
  detail::Rng rng(seed);
  std::vector<Edge> edges;
  for (VertexId i = 0; i < t; ++i) {
    for (VertexId j = 0; j < t; ++j) {
      const bool planted = i == j;
      if (planted || rng.bernoulli(extra_edge_prob)) {
        edges.push_back({i, static_cast<VertexId>(t + j)});
      }
    }
  }
  std::vector<std::uint8_t> side(2 * t, 0);
  std::fill(side.begin() + static_cast<std::ptrdiff_t>(t), side.end(), 1);
  return Graph(2 * t, std::move(edges), std::move(side));
}

Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  require(n >= 1, "random graph needs at least 1 vertex");
  require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
  detail::Rng rng(seed);
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      if (rng.bernoulli(p)) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace generate
}  // namespace preclusion
