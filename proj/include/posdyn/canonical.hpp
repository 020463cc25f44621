#pragma once

#include <compare>
#include <string>
#include <vector>

#include "posdyn/poset.hpp"

namespace posdyn {

struct CanonicalForm {
  std::size_t n = 0;
  std::vector<Cover> covers;  // sorted, in canonical labels

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  Poset to_poset() const;
  std::string to_string() const;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const;
};

struct Canonization {
  CanonicalForm form;
  std::vector<Element> relabeling;  // relabeling[x] = canonical index of x
};

/// Colour refinement on (rank, degrees, neighbour colours), then a
/// branch-and-bound search for the lexicographically least cover code among
/// colour-respecting labelings. Interchangeable twins are tried only once.
Canonization canonize(const Poset& p);
CanonicalForm canonical_form(const Poset& p);
bool is_isomorphic(const Poset& a, const Poset& b);

}  // namespace posdyn
