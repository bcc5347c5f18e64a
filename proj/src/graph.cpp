#include "detail/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace coxwalls::detail {

namespace {

class HopcroftKarp {
 public:
  HopcroftKarp(const std::vector<std::vector<int>>& edges, std::size_t right_size)
      : edges_(edges), match_left_(edges.size(), -1), match_right_(right_size, -1), dist_(edges.size()) {}

  std::vector<int> run() {
    while (bfs()) {
      for (std::size_t u = 0; u < edges_.size(); ++u) {
        if (match_left_[u] == -1) dfs(static_cast<int>(u));
      }
    }
    return match_left_;
  }

 private:
  static constexpr int kUnreached = std::numeric_limits<int>::max();

  bool bfs() {
    std::queue<int> queue;
    for (std::size_t u = 0; u < edges_.size(); ++u) {
      if (match_left_[u] == -1) {
        dist_[u] = 0;
        queue.push(static_cast<int>(u));
      } else {
        dist_[u] = kUnreached;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int v : edges_[u]) {
        const int w = match_right_[v];
        if (w == -1) {
          found = true;
        } else if (dist_[w] == kUnreached) {
          dist_[w] = dist_[u] + 1;
          queue.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(int u) {
    for (int v : edges_[u]) {
      const int w = match_right_[v];
      if (w == -1 || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    dist_[u] = kUnreached;
    return false;
  }

  const std::vector<std::vector<int>>& edges_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
  std::vector<int> dist_;
};

class CliqueSearch {
 public:
  explicit CliqueSearch(const Adjacency& adj) : adj_(adj) {}

  std::vector<std::size_t> run() {
    std::vector<std::size_t> all(adj_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<std::size_t> current;
    expand(current, all, {});
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void expand(std::vector<std::size_t>& current, std::vector<std::size_t> candidates,
              std::vector<std::size_t> excluded) {
    if (candidates.empty()) {
      if (current.size() > best_.size()) best_ = current;
      return;
    }
    if (current.size() + candidates.size() <= best_.size()) return;

    // Pivot on the vertex with most neighbours among the candidates.
    std::size_t pivot = candidates.front();
    std::size_t pivot_degree = 0;
    for (const auto* pool : {&candidates, &excluded}) {
      for (std::size_t u : *pool) {
        std::size_t degree = 0;
        for (std::size_t v : candidates) degree += adj_[u][v] ? 1 : 0;
        if (degree >= pivot_degree) {
          pivot = u;
          pivot_degree = degree;
        }
      }
    }

    std::vector<std::size_t> branch;
    for (std::size_t v : candidates) {
      if (!adj_[pivot][v]) branch.push_back(v);
    }
    for (std::size_t v : branch) {
      std::vector<std::size_t> next_candidates;
      std::vector<std::size_t> next_excluded;
      for (std::size_t u : candidates) {
        if (adj_[v][u]) next_candidates.push_back(u);
      }
      for (std::size_t u : excluded) {
        if (adj_[v][u]) next_excluded.push_back(u);
      }
      current.push_back(v);
      expand(current, std::move(next_candidates), std::move(next_excluded));
      current.pop_back();
      candidates.erase(std::find(candidates.begin(), candidates.end(), v));
      excluded.push_back(v);
      if (current.size() + candidates.size() <= best_.size()) return;
    }
  }

  const Adjacency& adj_;
  std::vector<std::size_t> best_;
};

}  // namespace

std::vector<int> maximum_matching(const std::vector<std::vector<int>>& edges, std::size_t right_size) {
  return HopcroftKarp(edges, right_size).run();
}

std::vector<std::size_t> maximum_clique(const Adjacency& adj) { return CliqueSearch(adj).run(); }

}  // namespace coxwalls::detail
