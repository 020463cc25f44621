#pragma once

#include <span>
#include <vector>

#include "posdyn/minuscule.hpp"
#include "posdyn/poset.hpp"
#include "posdyn/tableau.hpp"

namespace posdyn {

/// In-place K-promotion on raw label vectors. Holds scratch buffers, so one
/// engine per thread.
///
/// Each stage i = 2..q swaps the labels 1 and i on every tile (connected
/// component of the Hasse diagram restricted to those two labels) that has
/// more than one element. Equal labels never share a cover edge, so a tile is
/// nontrivial exactly when it contains a 1-i cover edge; the swap therefore
/// reduces to flipping every endpoint of such an edge.
class PromotionEngine {
 public:
  explicit PromotionEngine(const Poset& p);

  void promote(std::span<Label> labels, std::size_t q);
  void unpromote(std::span<Label> labels, std::size_t q);
  // Forward promotion that also reports every cover inside a nontrivial tile.
  void promote_recording(std::span<Label> labels, std::size_t q, std::vector<Cover>& flow);

  std::size_t size() const { return n_; }

 private:
  // Returns the change in the number of 1-labels.
  long swap_stage(std::span<Label> labels, Label i, std::vector<Cover>* flow);
  void bucket(std::span<const Label> labels, std::size_t q);

  std::size_t n_;
  std::vector<std::size_t> nbr_begin_;
  std::vector<Element> nbr_;
  std::vector<bool> nbr_is_upper_;
  std::vector<std::size_t> bucket_begin_;
  std::vector<Element> bucket_;
  std::vector<Element> flip_;
  std::vector<unsigned> stamp_;
  unsigned epoch_ = 0;
};

IncreasingTableau k_promotion(const IncreasingTableau& t);
IncreasingTableau k_promotion_inverse(const IncreasingTableau& t);
// Negative powers apply the inverse.
IncreasingTableau k_promotion_power(const IncreasingTableau& t, long steps);

/// E(T)(p) = least k with psi^(q-k)(T)(p) <= k. Throws InternalError if the
/// supports are not nested or the result is not increasing.
IncreasingTableau k_evacuation(const IncreasingTableau& t);

/// x -> q + 1 - T(sigma(x)). Throws InvalidArgument when sigma belongs to a
/// different poset.
IncreasingTableau pd_tableau(const IncreasingTableau& t, const AntiAutomorphism& sigma);

struct FlowPath {
  std::vector<Cover> pairs;  // sorted, unique
  ElementSet streambed;
};

FlowPath flow_path(const IncreasingTableau& t);

/// Reverses the order of the labels used on the autonomous set `a`; the
/// result lives on dualize_autonomous(P, a). Throws NotAutonomous.
IncreasingTableau flip_map(const IncreasingTableau& t, const ElementSet& a);

bool agree_on(const IncreasingTableau& a, const IncreasingTableau& b, const ElementSet& where);

}  // namespace posdyn
