#include "posdyn/rowmotion.hpp"

#include "posdyn/error.hpp"

namespace posdyn {

ElementSet RowmotionStep::operator()(const ElementSet& ideal) const {
  ElementSet out(p_.size());
  for (std::size_t x = 0; x < p_.size(); ++x) {
    if (ideal.contains(x)) continue;
    bool minimal = true;
    for (auto y : p_.lower_covers(x)) {
      if (!ideal.contains(y)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out |= p_.down_set(x);
  }
  return out;
}

ElementSet RowmotionStep::inverse(const ElementSet& ideal) const {
  ElementSet filter(p_.size());
  ideal.for_each([&](std::size_t x) {
    for (auto y : p_.upper_covers(x))
      if (ideal.contains(y)) return;
    filter |= p_.up_set(x);
  });
  return filter.complement();
}

OrderIdeal rowmotion(const OrderIdeal& ideal) {
  return OrderIdeal(ideal.poset(), RowmotionStep(ideal.poset())(ideal.members()));
}

OrderIdeal rowmotion_inverse(const OrderIdeal& ideal) {
  return OrderIdeal(ideal.poset(), RowmotionStep(ideal.poset()).inverse(ideal.members()));
}

std::vector<std::size_t> ideal_to_weak_labeling(const Poset& p, std::size_t c,
                                                const OrderIdeal& ideal) {
  if (ideal.poset().size() != p.size() * c)
    throw InvalidArgument("ideal does not live on P x c");
  std::vector<std::size_t> f(p.size(), 0);
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t j = 0; j < c; ++j)
      if (ideal.contains(x * c + j)) ++f[x];
  return f;
}

OrderIdeal weak_labeling_to_ideal(const Poset& p, std::size_t c, std::span<const std::size_t> f) {
  if (f.size() != p.size()) throw InvalidArgument("weak labeling has wrong length");
  for (std::size_t x = 0; x < f.size(); ++x)
    if (f[x] > c) throw InvalidArgument("weak label at element " + std::to_string(x) + " exceeds c");
  for (const auto& cv : p.covers())
    if (f[cv.lower] < f[cv.upper])
      throw InvalidArgument("weak labeling increases along cover " + std::to_string(cv.lower) +
                            " < " + std::to_string(cv.upper));
  ElementSet members(p.size() * c);
  for (std::size_t x = 0; x < f.size(); ++x)
    for (std::size_t j = 0; j < f[x]; ++j) members.insert(x * c + j);
  return OrderIdeal(product(p, chain(c)), std::move(members));
}

IncreasingTableau weak_labeling_to_tableau(const Poset& p, std::size_t c,
                                           std::span<const std::size_t> f) {
  const auto& rd = p.rank_data();
  if (!rd.is_graded) throw NotGraded("weak labeling map requires a graded poset");
  weak_labeling_to_ideal(p, c, f);
  std::vector<Label> labels(p.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    labels[x] = static_cast<Label>(c - f[x] + rd.elem_rank[x] + 1);
  return IncreasingTableau(p, rd.rank + c + 1, std::move(labels));
}

std::vector<std::size_t> tableau_to_weak_labeling(const IncreasingTableau& t, std::size_t c) {
  const auto& p = t.poset();
  const auto& rd = p.rank_data();
  if (!rd.is_graded) throw NotGraded("weak labeling map requires a graded poset");
  if (t.height() != rd.rank + c + 1) throw InvalidArgument("tableau height is not rank + c + 1");
  std::vector<std::size_t> f(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    const long v = static_cast<long>(c) + static_cast<long>(rd.elem_rank[x]) + 1 - t[x];
    if (v < 0 || v > static_cast<long>(c))
      throw InvalidArgument("tableau label at element " + std::to_string(x) +
                            " has no weak-labeling preimage");
    f[x] = static_cast<std::size_t>(v);
  }
  weak_labeling_to_ideal(p, c, f);
  return f;
}

}  // namespace posdyn
