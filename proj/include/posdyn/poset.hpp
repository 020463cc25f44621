#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "posdyn/element_set.hpp"

namespace posdyn {

using Element = std::size_t;

// a ⋖ b when used as a cover; an arbitrary relation a < b when used as input.
struct Cover {
  Element lower = 0;
  Element upper = 0;
  friend auto operator<=>(const Cover&, const Cover&) = default;
};

struct RankData {
  bool is_graded = false;
  std::size_t rank = 0;
  // Length of the longest chain ending at each element.
  std::vector<std::size_t> elem_rank;
};

inline constexpr std::size_t kDefaultIdealCap = 10'000'000;

/// Finite poset on elements 0..n-1, stored as its cover relation plus the
/// dense reachability relation. Immutable; copies share the same storage.
class Poset {
 public:
  Poset();

  /// Builds a poset from any acyclic relation. The relation is closed
  /// transitively and then reduced to covers. Throws CycleError on a cycle
  /// (including self-loops) and InvalidArgument on out-of-range indices.
  static Poset from_relations(std::size_t n, std::span<const Cover> relations,
                              std::string name = {});

  std::size_t size() const;
  const std::string& name() const;
  Poset renamed(std::string name) const;

  // Sorted lexicographically by (lower, upper).
  std::span<const Cover> covers() const;
  std::span<const Element> lower_covers(Element x) const;
  std::span<const Element> upper_covers(Element x) const;

  bool leq(Element a, Element b) const;
  bool less(Element a, Element b) const { return a != b && leq(a, b); }
  bool comparable(Element a, Element b) const { return leq(a, b) || leq(b, a); }

  // Principal ideal / filter, each including x itself.
  const ElementSet& down_set(Element x) const;
  const ElementSet& up_set(Element x) const;

  const RankData& rank_data() const;
  std::size_t rank() const { return rank_data().rank; }
  bool is_graded() const { return rank_data().is_graded; }

  // Elements sorted by (elem_rank, index).
  std::span<const Element> linear_extension() const;

  std::vector<Element> minimal_elements() const;
  std::vector<Element> maximal_elements() const;
  bool is_bounded() const;

  // Labeled equality: same element count and cover relation. Names are ignored.
  friend bool operator==(const Poset& a, const Poset& b);

 private:
  struct Impl;
  explicit Poset(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

Poset chain(std::size_t n);
Poset antichain(std::size_t n);

/// Cartesian product; element (p, q) gets index p * |Q| + q.
Poset product(const Poset& p, const Poset& q);

/// Every element of p below every element of q; p keeps indices 0..|p|-1 and
/// q is shifted by |p|.
Poset ordinal_sum(const Poset& p, const Poset& q);

Poset dual(const Poset& p);

/// Moves element x to index perm[x].
Poset relabel(const Poset& p, std::span<const Element> perm);

RankData rank_data(const Poset& p);

/// The alternative grading convention: every maximal chain has the same length.
bool has_equal_maximal_chains(const Poset& p);

bool is_ideal(const Poset& p, const ElementSet& s);
bool is_filter(const Poset& p, const ElementSet& s);
ElementSet down_closure(const Poset& p, const ElementSet& s);
ElementSet up_closure(const Poset& p, const ElementSet& s);

class OrderIdeal {
 public:
  /// Throws InvalidArgument when `members` is not downward closed.
  OrderIdeal(Poset poset, ElementSet members);

  const Poset& poset() const { return poset_; }
  const ElementSet& members() const { return members_; }
  bool contains(Element x) const { return members_.contains(x); }
  std::size_t size() const { return members_.count(); }

  friend bool operator==(const OrderIdeal& a, const OrderIdeal& b) {
    return a.members_ == b.members_ && a.poset_ == b.poset_;
  }
  // Orders by membership word; only meaningful on a common poset.
  friend bool operator<(const OrderIdeal& a, const OrderIdeal& b) { return a.members_ < b.members_; }

 private:
  Poset poset_;
  ElementSet members_;
};

/// Visits every order ideal exactly once, by depth-first extension over the
/// poset's linear extension. The visitor returns false to stop early. Throws
/// CapExceeded when more than `cap` ideals would be visited.
void for_each_ideal(const Poset& p, const std::function<bool(const ElementSet&)>& visit,
                    std::size_t cap = kDefaultIdealCap);

std::vector<OrderIdeal> enumerate_ideals(const Poset& p, std::size_t cap = kDefaultIdealCap);

/// J(P): order ideals ordered by containment. Ideals are indexed by
/// (cardinality, sorted member list), so the empty ideal is element 0.
Poset ideal_lattice(const Poset& p, std::size_t cap = 1'000'000);

// Member lists of the ideals in the index order used by ideal_lattice.
std::vector<ElementSet> ideal_lattice_members(const Poset& p, std::size_t cap = 1'000'000);

}  // namespace posdyn
