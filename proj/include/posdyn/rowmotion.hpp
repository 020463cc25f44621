#pragma once

#include <vector>

#include "posdyn/poset.hpp"
#include "posdyn/tableau.hpp"

namespace posdyn {

/// Rowmotion on raw membership sets. Cheap to copy; the poset is shared.
class RowmotionStep {
 public:
  explicit RowmotionStep(Poset p) : p_(std::move(p)) {}

  // Down-closure of the minimal elements of the complement.
  ElementSet operator()(const ElementSet& ideal) const;
  // Complement of the up-closure of the maximal elements.
  ElementSet inverse(const ElementSet& ideal) const;

  const Poset& poset() const { return p_; }

 private:
  Poset p_;
};

OrderIdeal rowmotion(const OrderIdeal& ideal);
OrderIdeal rowmotion_inverse(const OrderIdeal& ideal);

/// Ideals of P x c (element (p, j) at index p*c + j) as weakly
/// order-reversing maps f : P -> {0..c}, f(p) = #{ j : (p, j) in I }.
std::vector<std::size_t> ideal_to_weak_labeling(const Poset& p, std::size_t c,
                                                const OrderIdeal& ideal);
/// Throws InvalidArgument when f leaves {0..c} or is not weakly order-reversing.
OrderIdeal weak_labeling_to_ideal(const Poset& p, std::size_t c, std::span<const std::size_t> f);

/// T(x) = (c - f(x)) + r(x), where r(x) is one more than the rank of x; height
/// rank(P) + c + 1. Not equivariant. Throws NotGraded.
IncreasingTableau weak_labeling_to_tableau(const Poset& p, std::size_t c,
                                           std::span<const std::size_t> f);
/// Inverse of the above; throws InvalidArgument when T is not in its image.
std::vector<std::size_t> tableau_to_weak_labeling(const IncreasingTableau& t, std::size_t c);

}  // namespace posdyn
