#include "nilbij/joyal.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace nilbij {

namespace {

void require_vertex(const Tree& t, Vertex x) {
  if (x >= t.size()) {
    throw Error(Errc::invalid_vertex, "vertex " + std::to_string(x) + " not in a tree on " +
                                          std::to_string(t.size()) + " vertices");
  }
}

// BFS from the sources; parent[x] is x's neighbour one step closer to them.
std::vector<Vertex> bfs_parents(const std::vector<std::vector<Vertex>>& adj, const std::vector<Vertex>& sources) {
  const auto none = static_cast<Vertex>(adj.size());
  std::vector<Vertex> parent(adj.size(), none);
  std::vector<bool> seen(adj.size(), false);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    seen[s] = true;
    parent[s] = s;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : adj[x]) {
      if (seen[y]) continue;
      seen[y] = true;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  return parent;
}

}  // namespace

// ---------------------------------------------------------------- Tree

Tree::Tree(std::uint32_t n, std::vector<std::pair<Vertex, Vertex>> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ == 0) throw Error(Errc::invalid_tree, "a tree needs at least one vertex");
  if (edges_.size() != n_ - 1) {
    throw Error(Errc::invalid_tree, std::to_string(edges_.size()) + " edges on " + std::to_string(n_) + " vertices");
  }
  for (auto& [a, b] : edges_) {
    if (a >= n_ || b >= n_) throw Error(Errc::invalid_tree, "edge endpoint out of range");
    if (a == b) throw Error(Errc::invalid_tree, "self-loop");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  // n - 1 edges plus connectivity means no cycles.
  const auto parent = bfs_parents(adjacency(), {0});
  if (std::any_of(parent.begin(), parent.end(), [this](Vertex p) { return p == n_; })) {
    throw Error(Errc::invalid_tree, "graph is disconnected");
  }
}

std::vector<std::vector<Vertex>> Tree::adjacency() const {
  std::vector<std::vector<Vertex>> adj(n_);
  for (auto [a, b] : edges_) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::vector<Vertex> Tree::path(Vertex from, Vertex to) const {
  require_vertex(*this, from);
  require_vertex(*this, to);
  const auto parent = bfs_parents(adjacency(), {to});
  std::vector<Vertex> out{from};
  for (Vertex x = from; x != to;) {
    x = parent[x];
    out.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------- EndoFunction

EndoFunction::EndoFunction(std::vector<Vertex> table) : table_(std::move(table)) {
  if (table_.empty()) throw Error(Errc::invalid_function, "a function on the empty set is not allowed");
  for (Vertex y : table_) {
    if (y >= table_.size()) {
      throw Error(Errc::invalid_function, "value " + std::to_string(y) + " outside 0.." +
                                              std::to_string(table_.size() - 1));
    }
  }
}

std::vector<Vertex> periodic_points(const EndoFunction& f) {
  // f^n(X) is exactly the set of periodic points.
  const std::uint32_t n = f.size();
  std::vector<bool> periodic(n, false);
  for (Vertex x = 0; x < n; ++x) {
    Vertex y = x;
    for (std::uint32_t i = 0; i < n; ++i) y = f(y);
    periodic[y] = true;
  }
  std::vector<Vertex> out;
  for (Vertex x = 0; x < n; ++x) {
    if (periodic[x]) out.push_back(x);
  }
  return out;
}

bool is_eventually_constant(const EndoFunction& f) {
  const auto cyc = periodic_points(f);
  return cyc.size() == 1 && f(cyc.front()) == cyc.front();
}

EndoFunction joyal_forward(const Tree& t, Vertex v, Vertex v2) {
  require_vertex(t, v);
  require_vertex(t, v2);
  const std::vector<Vertex> path = t.path(v, v2);
  std::vector<Vertex> sorted = path;
  std::sort(sorted.begin(), sorted.end());

  std::vector<Vertex> table = bfs_parents(t.adjacency(), path);
  for (std::size_t i = 0; i < path.size(); ++i) table[sorted[i]] = path[i];
  return EndoFunction(std::move(table));
}

PointedTree joyal_inverse(const EndoFunction& f) {
  const auto cyc = periodic_points(f);
  std::vector<bool> periodic(f.size(), false);
  for (Vertex x : cyc) periodic[x] = true;

  std::vector<Vertex> path;
  path.reserve(cyc.size());
  for (Vertex a : cyc) path.push_back(f(a));

  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(f.size() - 1);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) edges.emplace_back(path[i], path[i + 1]);
  for (Vertex x = 0; x < f.size(); ++x) {
    if (!periodic[x]) edges.emplace_back(x, f(x));
  }
  return PointedTree{Tree(f.size(), std::move(edges)), path.front(), path.back()};
}

// ---------------------------------------------------------------- enumeration

std::uint64_t function_count(std::uint32_t n, std::uint64_t budget) {
  if (n == 0) throw Error(Errc::invalid_function, "n must be at least 1");
  return budgeted_power(n, n, budget);
}

EndoFunction function_at(std::uint32_t n, std::uint64_t idx) {
  if (n == 0) throw Error(Errc::invalid_function, "n must be at least 1");
  std::vector<Vertex> table(n);
  for (std::size_t i = n; i-- > 0;) {
    table[i] = static_cast<Vertex>(idx % n);
    idx /= n;
  }
  if (idx != 0) throw Error(Errc::invalid_function, "function index out of range");
  return EndoFunction(std::move(table));
}

std::vector<Tree> enumerate_trees(std::uint32_t n, std::uint64_t budget) {
  const std::uint64_t total = function_count(n, budget);
  std::set<Tree> trees;
  for (std::uint64_t idx = 0; idx < total; ++idx) trees.insert(joyal_inverse(function_at(n, idx)).tree);
  return {trees.begin(), trees.end()};
}

std::uint64_t count_trees(std::uint32_t n, std::uint64_t budget) { return enumerate_trees(n, budget).size(); }

std::uint64_t count_eventually_constant(std::uint32_t n, std::uint64_t budget) {
  const std::uint64_t total = function_count(n, budget);
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) count += is_eventually_constant(function_at(n, idx)) ? 1 : 0;
  return count;
}

}  // namespace nilbij
