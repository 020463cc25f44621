#include "posdyn/promotion.hpp"

#include <algorithm>

#include "posdyn/autonomous.hpp"
#include "posdyn/error.hpp"

namespace posdyn {

PromotionEngine::PromotionEngine(const Poset& p) : n_(p.size()) {
  nbr_begin_.assign(n_ + 1, 0);
  for (std::size_t x = 0; x < n_; ++x) {
    for (auto y : p.lower_covers(x)) {
      nbr_.push_back(y);
      nbr_is_upper_.push_back(false);
    }
    for (auto y : p.upper_covers(x)) {
      nbr_.push_back(y);
      nbr_is_upper_.push_back(true);
    }
    nbr_begin_[x + 1] = nbr_.size();
  }
  stamp_.assign(n_, 0);
}

void PromotionEngine::bucket(std::span<const Label> labels, std::size_t q) {
  bucket_begin_.assign(q + 2, 0);
  for (auto l : labels) ++bucket_begin_[l + 1];
  for (std::size_t l = 1; l <= q + 1; ++l) bucket_begin_[l] += bucket_begin_[l - 1];
  bucket_.resize(n_);
  auto fill = bucket_begin_;
  for (std::size_t x = 0; x < n_; ++x) bucket_[fill[labels[x]]++] = x;
}

long PromotionEngine::swap_stage(std::span<Label> labels, Label i, std::vector<Cover>* flow) {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0u);
    epoch_ = 1;
  }
  flip_.clear();
  long delta = 0;
  for (auto k = bucket_begin_[i]; k < bucket_begin_[i + 1]; ++k) {
    const auto y = bucket_[k];
    bool hit = false;
    for (auto e = nbr_begin_[y]; e < nbr_begin_[y + 1]; ++e) {
      const auto z = nbr_[e];
      if (labels[z] != 1) continue;
      hit = true;
      if (flow) flow->push_back(nbr_is_upper_[e] ? Cover{y, z} : Cover{z, y});
      if (stamp_[z] != epoch_) {
        stamp_[z] = epoch_;
        flip_.push_back(z);
        --delta;
      }
    }
    if (hit) {
      flip_.push_back(y);
      ++delta;
    }
  }
  for (auto e : flip_) labels[e] = labels[e] == 1 ? i : Label{1};
  return delta;
}

void PromotionEngine::promote(std::span<Label> labels, std::size_t q) {
  bucket(labels, q);
  long ones = static_cast<long>(bucket_begin_[2] - bucket_begin_[1]);
  for (std::size_t i = 2; i <= q && ones > 0; ++i)
    ones += swap_stage(labels, static_cast<Label>(i), nullptr);
  for (auto& l : labels) l = l == 1 ? static_cast<Label>(q) : static_cast<Label>(l - 1);
}

void PromotionEngine::promote_recording(std::span<Label> labels, std::size_t q,
                                        std::vector<Cover>& flow) {
  bucket(labels, q);
  long ones = static_cast<long>(bucket_begin_[2] - bucket_begin_[1]);
  for (std::size_t i = 2; i <= q && ones > 0; ++i)
    ones += swap_stage(labels, static_cast<Label>(i), &flow);
  for (auto& l : labels) l = l == 1 ? static_cast<Label>(q) : static_cast<Label>(l - 1);
}

void PromotionEngine::unpromote(std::span<Label> labels, std::size_t q) {
  for (auto& l : labels) l = l == q ? Label{1} : static_cast<Label>(l + 1);
  bucket(labels, q);
  long ones = static_cast<long>(bucket_begin_[2] - bucket_begin_[1]);
  for (std::size_t i = q; i >= 2 && ones > 0; --i)
    ones += swap_stage(labels, static_cast<Label>(i), nullptr);
}

IncreasingTableau k_promotion(const IncreasingTableau& t) {
  PromotionEngine engine(t.poset());
  std::vector<Label> labels(t.labels().begin(), t.labels().end());
  engine.promote(labels, t.height());
  return make_unchecked(t.poset(), t.height(), std::move(labels));
}

IncreasingTableau k_promotion_inverse(const IncreasingTableau& t) {
  PromotionEngine engine(t.poset());
  std::vector<Label> labels(t.labels().begin(), t.labels().end());
  engine.unpromote(labels, t.height());
  return make_unchecked(t.poset(), t.height(), std::move(labels));
}

IncreasingTableau k_promotion_power(const IncreasingTableau& t, long steps) {
  PromotionEngine engine(t.poset());
  std::vector<Label> labels(t.labels().begin(), t.labels().end());
  for (long s = 0; s < steps; ++s) engine.promote(labels, t.height());
  for (long s = 0; s > steps; --s) engine.unpromote(labels, t.height());
  return make_unchecked(t.poset(), t.height(), std::move(labels));
}

IncreasingTableau k_evacuation(const IncreasingTableau& t) {
  const auto q = t.height();
  const auto n = t.poset().size();
  PromotionEngine engine(t.poset());
  // powers[j] = psi^j(T)
  std::vector<std::vector<Label>> powers(q == 0 ? 1 : q);
  powers[0].assign(t.labels().begin(), t.labels().end());
  for (std::size_t j = 1; j < powers.size(); ++j) {
    powers[j] = powers[j - 1];
    engine.promote(powers[j], q);
  }
  std::vector<Label> out(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t k = 1; k <= q; ++k) {
      if (powers[q - k][x] <= k) {
        out[x] = static_cast<Label>(k);
        break;
      }
    }
  }
  for (std::size_t k = 1; k <= q; ++k) {
    for (std::size_t x = 0; x < n; ++x) {
      if ((powers[q - k][x] <= k) != (out[x] <= k)) {
        throw InternalError("K-evacuation supports are not nested at k=" + std::to_string(k) +
                            " for " + t.to_string());
      }
    }
  }
  if (!is_increasing(t.poset(), q, out))
    throw InternalError("K-evacuation produced a non-increasing labeling for " + t.to_string());
  return make_unchecked(t.poset(), q, std::move(out));
}

IncreasingTableau pd_tableau(const IncreasingTableau& t, const AntiAutomorphism& sigma) {
  if (!(sigma.poset() == t.poset()))
    throw InvalidArgument("anti-automorphism belongs to a different poset");
  const auto q = t.height();
  std::vector<Label> out(t.poset().size());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = static_cast<Label>(q + 1 - t[sigma(x)]);
  return make_unchecked(t.poset(), q, std::move(out));
}

FlowPath flow_path(const IncreasingTableau& t) {
  PromotionEngine engine(t.poset());
  std::vector<Label> labels(t.labels().begin(), t.labels().end());
  FlowPath fp{{}, ElementSet(t.poset().size())};
  engine.promote_recording(labels, t.height(), fp.pairs);
  std::sort(fp.pairs.begin(), fp.pairs.end());
  fp.pairs.erase(std::unique(fp.pairs.begin(), fp.pairs.end()), fp.pairs.end());
  for (const auto& c : fp.pairs) {
    fp.streambed.insert(c.lower);
    fp.streambed.insert(c.upper);
  }
  return fp;
}

IncreasingTableau flip_map(const IncreasingTableau& t, const ElementSet& a) {
  auto target = dualize_autonomous(t.poset(), a);
  std::vector<Label> used;
  a.for_each([&](std::size_t x) { used.push_back(t[x]); });
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<Label> out(t.labels().begin(), t.labels().end());
  a.for_each([&](std::size_t x) {
    auto i = static_cast<std::size_t>(std::lower_bound(used.begin(), used.end(), t[x]) - used.begin());
    out[x] = used[used.size() - 1 - i];
  });
  return IncreasingTableau(std::move(target), t.height(), std::move(out));
}

bool agree_on(const IncreasingTableau& a, const IncreasingTableau& b, const ElementSet& where) {
  bool same = true;
  where.for_each([&](std::size_t x) { same = same && a[x] == b[x]; });
  return same;
}

}  // namespace posdyn
