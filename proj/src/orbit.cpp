#include "posdyn/orbit.hpp"

#include "posdyn/promotion.hpp"
#include "posdyn/rowmotion.hpp"

namespace posdyn {

Orbit<IncreasingTableau> promotion_orbit(const IncreasingTableau& seed, bool keep_cycle,
                                         std::size_t cap) {
  PromotionEngine engine(seed.poset());
  const auto q = seed.height();
  const auto& p = seed.poset();
  return orbit(
      seed,
      [&](const IncreasingTableau& t) {
        std::vector<Label> labels(t.labels().begin(), t.labels().end());
        engine.promote(labels, q);
        return make_unchecked(p, q, std::move(labels));
      },
      keep_cycle, cap);
}

Orbit<OrderIdeal> rowmotion_orbit(const OrderIdeal& seed, bool keep_cycle, std::size_t cap) {
  RowmotionStep step(seed.poset());
  return orbit(
      seed, [&](const OrderIdeal& i) { return OrderIdeal(i.poset(), step(i.members())); },
      keep_cycle, cap);
}

std::size_t promotion_orbit_size(const Poset& p, std::size_t q, std::span<const Label> labels,
                                 std::size_t cap) {
  PromotionEngine engine(p);
  std::vector<Label> cur(labels.begin(), labels.end());
  std::size_t size = 0;
  do {
    if (++size > cap) throw CapExceeded("orbit exceeds " + std::to_string(cap) + " steps");
    engine.promote(cur, q);
  } while (!std::equal(cur.begin(), cur.end(), labels.begin()));
  return size;
}

}  // namespace posdyn
