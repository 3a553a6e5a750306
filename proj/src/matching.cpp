#include "preclusion/matching.hpp"

#include <algorithm>
#include <queue>
#include <utility>

#include "preclusion/error.hpp"

namespace preclusion {
namespace {

constexpr VertexId kNone = Matching::kNone;

using Adjacency = std::vector<std::vector<VertexId>>;

Adjacency residual_adjacency(const Graph& g, const EdgeSet* removed) {
  Adjacency adj(g.order());
  for (VertexId v = 0; v < g.order(); ++v) {
    adj[v].reserve(g.degree(v));
    for (const Incidence& inc : g.neighbors(v)) {
      if (removed && removed->contains(inc.edge)) continue;
      adj[v].push_back(inc.to);
    }
  }
  return adj;
}

void greedy_seed(const Adjacency& adj, std::vector<VertexId>& mate) {
  for (VertexId v = 0; v < adj.size(); ++v) {
    if (mate[v] != kNone) continue;
    for (VertexId w : adj[v]) {
      if (mate[w] == kNone) {
        mate[v] = w;
        mate[w] = v;
        break;
      }
    }
  }
}

// Hopcroft-Karp over the left side (side 0) of the bipartition.
class HopcroftKarp {
 public:
  HopcroftKarp(const Adjacency& adj, const std::vector<std::uint8_t>& side)
      : adj_(adj), side_(side), mate_(adj.size(), kNone), dist_(adj.size(), 0) {
    for (VertexId v = 0; v < adj.size(); ++v) {
      if (side_[v] == 0) left_.push_back(v);
    }
  }

  std::vector<VertexId> run() {
    greedy_seed(adj_, mate_);
    while (bfs()) {
      for (VertexId u : left_) {
        if (mate_[u] == kNone) dfs(u);
      }
    }
    return std::move(mate_);
  }

 private:
  static constexpr std::size_t kInf = SIZE_MAX;

  bool bfs() {
    std::queue<VertexId> queue;
    bool found = false;
    for (VertexId u : left_) {
      if (mate_[u] == kNone) {
        dist_[u] = 0;
        queue.push(u);
      } else {
        dist_[u] = kInf;
      }
    }
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop();
      for (VertexId w : adj_[u]) {
        VertexId next = mate_[w];
        if (next == kNone) {
          found = true;
        } else if (dist_[next] == kInf) {
          dist_[next] = dist_[u] + 1;
          queue.push(next);
        }
      }
    }
    return found;
  }

  bool dfs(VertexId u) {
    for (VertexId w : adj_[u]) {
      VertexId next = mate_[w];
      if (next == kNone || (dist_[next] == dist_[u] + 1 && dfs(next))) {
        mate_[u] = w;
        mate_[w] = u;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  const Adjacency& adj_;
  const std::vector<std::uint8_t>& side_;
  std::vector<VertexId> mate_;
  std::vector<std::size_t> dist_;
  std::vector<VertexId> left_;
};

// Edmonds' blossom-contraction search, one BFS per exposed vertex: O(V^3).
class Blossom {
 public:
  explicit Blossom(const Adjacency& adj)
      : adj_(adj),
        n_(adj.size()),
        mate_(n_, kNone),
        parent_(n_),
        base_(n_),
        used_(n_),
        in_blossom_(n_),
        on_path_(n_) {}

  std::vector<VertexId> run() {
    greedy_seed(adj_, mate_);
    for (VertexId root = 0; root < n_; ++root) {
      if (mate_[root] != kNone) continue;
      VertexId end = find_augmenting_path(root);
      while (end != kNone) {
        VertexId pv = parent_[end];
        VertexId next = mate_[pv];
        mate_[end] = pv;
        mate_[pv] = end;
        end = next;
      }
    }
    return std::move(mate_);
  }

 private:
  VertexId lowest_common_base(VertexId a, VertexId b) {
    std::fill(on_path_.begin(), on_path_.end(), 0);
    for (;;) {
      a = base_[a];
      on_path_[a] = 1;
      if (mate_[a] == kNone) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (on_path_[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(VertexId v, VertexId b, VertexId child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  VertexId find_augmenting_path(VertexId root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (VertexId i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::queue<VertexId> queue;
    queue.push(root);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop();
      for (VertexId to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != kNone && parent_[mate_[to]] != kNone)) {
          VertexId b = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (VertexId i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = b;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push(i);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (mate_[to] == kNone) return to;
          used_[mate_[to]] = 1;
          queue.push(mate_[to]);
        }
      }
    }
    return kNone;
  }

  const Adjacency& adj_;
  std::size_t n_;
  std::vector<VertexId> mate_;
  std::vector<VertexId> parent_;
  std::vector<VertexId> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
  std::vector<char> on_path_;
};

std::vector<VertexId> maximum_mate(const Graph& g, const EdgeSet* removed) {
  const Adjacency adj = residual_adjacency(g, removed);
  if (g.bipartition()) return HopcroftKarp(adj, *g.bipartition()).run();
  return Blossom(adj).run();
}

std::size_t count_matched(const std::vector<VertexId>& mate) {
  return static_cast<std::size_t>(
             std::count_if(mate.begin(), mate.end(), [](VertexId m) { return m != kNone; })) /
         2;
}

Matching lex_min_matching(const Graph& g) {
  const std::size_t target = count_matched(maximum_mate(g, nullptr));
  std::vector<VertexId> mate(g.order(), kNone);
  EdgeSet blocked(g);
  std::size_t chosen = 0;
  for (EdgeId e = 0; e < g.size() && chosen < target; ++e) {
    const Edge& edge = g.edge(e);
    if (mate[edge.u] != kNone || mate[edge.v] != kNone) continue;
    EdgeSet trial = blocked;
    for (const Incidence& inc : g.neighbors(edge.u)) trial.insert(inc.edge);
    for (const Incidence& inc : g.neighbors(edge.v)) trial.insert(inc.edge);
    if (count_matched(maximum_mate(g, &trial)) + chosen + 1 == target) {
      blocked = std::move(trial);
      mate[edge.u] = edge.v;
      mate[edge.v] = edge.u;
      ++chosen;
    }
  }
  return Matching(g, mate);
}

}  // namespace

Matching::Matching(const Graph& g, const std::vector<VertexId>& mate)
    : edges_(g), mate_(mate) {
  if (mate_.size() != g.order()) throw ParameterError("mate array size mismatch");
  for (VertexId v = 0; v < mate_.size(); ++v) {
    const VertexId w = mate_[v];
    if (w == kNone) continue;
    if (w >= mate_.size() || mate_[w] != v) throw ParameterError("mate relation is not symmetric");
    if (v < w) {
      auto e = g.find_edge(v, w);
      if (!e) throw ParameterError("matched pair is not an edge");
      edges_.insert(*e);
      ++size_;
    }
  }
}

std::vector<VertexId> Matching::saturated() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < mate_.size(); ++v) {
    if (mate_[v] != kNone) out.push_back(v);
  }
  return out;
}

Matching max_matching(const Graph& g, TieBreak tie_break) {
  if (tie_break == TieBreak::LexMin) return lex_min_matching(g);
  return Matching(g, maximum_mate(g, nullptr));
}

Matching max_matching(const Graph& g, const EdgeSet& removed) {
  removed.check_tag(g);
  return Matching(g, maximum_mate(g, &removed));
}

std::size_t matching_number(const Graph& g) { return count_matched(maximum_mate(g, nullptr)); }

std::size_t matching_number(const Graph& g, const EdgeSet& removed) {
  removed.check_tag(g);
  return count_matched(maximum_mate(g, &removed));
}

bool has_perfect_matching(const Graph& g) {
  return g.order() % 2 == 0 && 2 * matching_number(g) == g.order();
}

bool has_almost_perfect_matching(const Graph& g) {
  return g.order() % 2 == 1 && 2 * matching_number(g) + 1 == g.order();
}

bool is_precluded(const Graph& g, const EdgeSet& removed) {
  // nu <= floor(n/2) - 1, written without underflow.
  return matching_number(g, removed) + 1 <= g.order() / 2;
}

std::size_t brute_force_matching_number(const Graph& g, std::size_t edge_limit) {
  if (g.size() > edge_limit) {
    throw OracleLimitError("matching oracle limited to " + std::to_string(edge_limit) +
                           " edges, graph has " + std::to_string(g.size()));
  }
  const auto& edges = g.edges();
  const std::size_t cap = g.order() / 2;
  std::vector<char> used(g.order(), 0);
  std::size_t best = 0;
  // Include/exclude each edge in index order.
  auto search = [&](auto&& self, std::size_t next, std::size_t current) -> void {
    best = std::max(best, current);
    if (best == cap || current + (edges.size() - next) <= best) return;
    for (std::size_t i = next; i < edges.size(); ++i) {
      const Edge& e = edges[i];
      if (used[e.u] || used[e.v]) continue;
      used[e.u] = used[e.v] = 1;
      self(self, i + 1, current + 1);
      used[e.u] = used[e.v] = 0;
      if (best == cap) return;
    }
  };
  search(search, 0, 0);
  return best;
}

}  // namespace preclusion
