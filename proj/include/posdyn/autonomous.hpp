#pragma once

#include <vector>

#include "posdyn/poset.hpp"

namespace posdyn {

class ComparabilityGraph {
 public:
  ComparabilityGraph() = default;
  explicit ComparabilityGraph(std::size_t n) : n_(n), adj_(n * n, false) {}

  std::size_t size() const { return n_; }
  bool adjacent(Element a, Element b) const { return adj_[a * n_ + b]; }
  void add_edge(Element a, Element b) { adj_[a * n_ + b] = adj_[b * n_ + a] = true; }
  std::size_t degree(Element a) const;
  std::vector<Cover> edges() const;  // each edge once, lower index first

  /// Moves vertex x to perm[x].
  ComparabilityGraph relabeled(std::span<const Element> perm) const;

  friend bool operator==(const ComparabilityGraph&, const ComparabilityGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<bool> adj_;
};

ComparabilityGraph comparability_graph(const Poset& p);

// Degree-guided backtracking; intended for small graphs.
bool are_isomorphic(const ComparabilityGraph& a, const ComparabilityGraph& b);

/// Every element outside `a` relates to all of `a` the same way. Singletons,
/// the empty set and the whole ground set are autonomous.
bool is_autonomous(const Poset& p, const ElementSet& a);

/// All autonomous subsets with 2 <= |A| < n, in increasing bitmask order.
/// Throws InvalidArgument when n exceeds `max_n`.
std::vector<ElementSet> autonomous_subsets(const Poset& p, std::size_t max_n = 16);

/// Reverses every relation inside `a` and keeps the rest. Throws
/// NotAutonomous when `a` is not autonomous.
Poset dualize_autonomous(const Poset& p, const ElementSet& a);

}  // namespace posdyn
