#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "posdyn/poset.hpp"
#include "posdyn/tableau.hpp"

namespace posdyn {

enum class MinusculeFamily { rectangle, staircase, propeller, cayley_moufang, freudenthal };

/// A member of one of the five families. `a`, `b` are the rectangle sides,
/// `a` is the staircase size or propeller depth.
struct MinusculeSpec {
  MinusculeFamily family = MinusculeFamily::rectangle;
  std::size_t a = 1;
  std::size_t b = 1;

  /// Accepts `rect:AxB`, `staircase:N`, `propeller:K`, `cayley-moufang`,
  /// `freudenthal`. Returns nullopt for anything else.
  static std::optional<MinusculeSpec> parse(std::string_view text);
  std::string cli_name() const;
  friend bool operator==(const MinusculeSpec&, const MinusculeSpec&) = default;
};

// Element (x, y), 1-based, has index (x-1)*b + (y-1).
Poset rectangle(std::size_t a, std::size_t b);
// Pairs x <= y in [n], listed lexicographically.
Poset staircase(std::size_t n);
std::size_t staircase_index(std::size_t n, std::size_t x, std::size_t y);
// J^k(2x2).
Poset propeller(std::size_t k);
// J^2(3x2) and J^3(3x2); built once and cached.
Poset cayley_moufang();
Poset freudenthal();
Poset minuscule(const MinusculeSpec& spec);

/// Order-reversing involution of a poset.
class AntiAutomorphism {
 public:
  /// Throws InvalidArgument unless `image` is a bijection that reverses order
  /// and squares to the identity.
  AntiAutomorphism(Poset poset, std::vector<Element> image);

  const Poset& poset() const { return poset_; }
  Element operator()(Element x) const { return image_[x]; }
  std::span<const Element> image() const { return image_; }

 private:
  Poset poset_;
  std::vector<Element> image_;
};

/// All order-reversing involutions, lexicographically by image word, up to
/// `limit` of them.
std::vector<std::vector<Element>> order_reversing_involutions(const Poset& p,
                                                              std::size_t limit = SIZE_MAX);

struct PdChoice {
  AntiAutomorphism map;
  // Number of order-reversing involutions examined when the map came from
  // search; 1 when given by a closed formula.
  std::size_t candidates = 1;
};

/// The duality of a minuscule poset. Rectangles and staircases use their
/// closed formulas, propellers the reflection fixing the middle pair, and
/// everything else (including a missing hint) the least order-reversing
/// involution found by search. Throws NotSelfDual if none exists.
PdChoice pd_choice(const Poset& m, std::optional<MinusculeSpec> hint = std::nullopt);
AntiAutomorphism pd_map(const Poset& m, std::optional<MinusculeSpec> hint = std::nullopt);

struct TreeDecomposition {
  ElementSet bottom_tree;  // principal ideal is a chain
  ElementSet top_tree;     // principal filter is a chain
  ElementSet doubletree;
};

TreeDecomposition trees(const Poset& p);

/// Labels each element by its rank plus one, height rank+1. Throws NotGraded.
IncreasingTableau minimal_tableau(const Poset& p);

/// Symmetric k x k tableau agreeing with t on x <= y. Throws InvalidArgument
/// unless t lives on staircase(k).
IncreasingTableau doubling(const IncreasingTableau& t);

/// Restriction of a symmetric tableau on rectangle(k, k) to x <= y. Throws
/// InvalidArgument on a non-square shape or an asymmetric tableau.
IncreasingTableau radical(const IncreasingTableau& u);

}  // namespace posdyn
