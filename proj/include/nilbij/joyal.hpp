#pragma once

// Joyal's bijection {trees on X} x X x X <-> {functions X -> X}, X = {0..n-1}.
//
// The path from v to v2 is listed in path order b_1..b_m and in ascending
// order a_1..a_m; the function sends a_i to b_i on the path and every other
// vertex to its neighbour towards the path.

#include <cstdint>
#include <utility>
#include <vector>

#include "nilbij/budget.hpp"

namespace nilbij {

using Vertex = std::uint32_t;

class Tree {
 public:
  /// Throws InvalidTree unless the edges form a spanning tree on n >= 1 vertices.
  Tree(std::uint32_t n, std::vector<std::pair<Vertex, Vertex>> edges);

  std::uint32_t size() const noexcept { return n_; }
  /// Each edge as (smaller, larger), sorted ascending.
  const std::vector<std::pair<Vertex, Vertex>>& edges() const noexcept { return edges_; }
  std::vector<std::vector<Vertex>> adjacency() const;

  /// The vertices on the unique path from `from` to `to`, in order.
  std::vector<Vertex> path(Vertex from, Vertex to) const;

  bool operator==(const Tree&) const = default;
  auto operator<=>(const Tree&) const = default;

 private:
  std::uint32_t n_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

class EndoFunction {
 public:
  /// Throws InvalidFunction if n == 0 or a value is out of range.
  explicit EndoFunction(std::vector<Vertex> table);

  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(table_.size()); }
  Vertex operator()(Vertex x) const { return table_.at(x); }
  const std::vector<Vertex>& table() const noexcept { return table_; }

  bool operator==(const EndoFunction&) const = default;

 private:
  std::vector<Vertex> table_;
};

struct PointedTree {
  Tree tree;
  Vertex v;
  Vertex v2;

  bool operator==(const PointedTree&) const = default;
};

/// Points x with f^m(x) = x for some m >= 1, ascending.
std::vector<Vertex> periodic_points(const EndoFunction& f);

/// True iff f^n is constant.
bool is_eventually_constant(const EndoFunction& f);

/// Throws InvalidVertex.
EndoFunction joyal_forward(const Tree& t, Vertex v, Vertex v2);
inline EndoFunction joyal_forward(const PointedTree& p) { return joyal_forward(p.tree, p.v, p.v2); }

PointedTree joyal_inverse(const EndoFunction& f);

/// The idx-th function {0..n-1} -> {0..n-1} in lexicographic table order.
EndoFunction function_at(std::uint32_t n, std::uint64_t idx);
/// n^n, or throws BudgetExceeded when it exceeds `budget`.
std::uint64_t function_count(std::uint32_t n, std::uint64_t budget = kDefaultBudget);

/// All trees on n vertices, sorted, obtained as distinct joyal_inverse images.
std::vector<Tree> enumerate_trees(std::uint32_t n, std::uint64_t budget = kDefaultBudget);
std::uint64_t count_trees(std::uint32_t n, std::uint64_t budget = kDefaultBudget);
std::uint64_t count_eventually_constant(std::uint32_t n, std::uint64_t budget = kDefaultBudget);

}  // namespace nilbij
