#include "posdyn/enumerate.hpp"

#include <algorithm>
#include <set>

#include "posdyn/canonical.hpp"
#include "posdyn/error.hpp"

namespace posdyn {

namespace {

class IncreasingWalker {
 public:
  IncreasingWalker(const Poset& p, std::size_t q, bool packed, const LabelVisitor& visit)
      : p_(p), q_(q), packed_(packed), visit_(visit), order_(p.linear_extension().begin(),
                                                             p.linear_extension().end()) {
    const auto n = p.size();
    above_.assign(n, 0);
    for (auto it = order_.rbegin(); it != order_.rend(); ++it)
      for (auto y : p.upper_covers(*it)) above_[*it] = std::max(above_[*it], above_[y] + 1);
    labels_.assign(n, 0);
    used_.assign(q + 1, 0);
    missing_ = q;
  }

  bool run() {
    if (packed_ && q_ > p_.size()) return true;
    return rec(0);
  }

 private:
  bool rec(std::size_t i) {
    const auto n = order_.size();
    if (i == n) return visit_(labels_);
    const auto x = order_[i];
    std::size_t lo = 1;
    for (auto y : p_.lower_covers(x)) lo = std::max<std::size_t>(lo, labels_[y] + 1u);
    if (above_[x] >= q_) return true;
    const std::size_t hi = q_ - above_[x];
    const std::size_t remaining_after = n - i - 1;
    for (std::size_t v = lo; v <= hi; ++v) {
      labels_[x] = static_cast<Label>(v);
      if (packed_) {
        if (used_[v]++ == 0) --missing_;
        const bool feasible = missing_ <= remaining_after;
        bool go_on = true;
        if (feasible) go_on = rec(i + 1);
        if (--used_[v] == 0) ++missing_;
        if (!go_on) return false;
      } else if (!rec(i + 1)) {
        return false;
      }
    }
    labels_[x] = 0;
    return true;
  }

  const Poset& p_;
  std::size_t q_;
  bool packed_;
  const LabelVisitor& visit_;
  std::vector<Element> order_;
  std::vector<std::size_t> above_;
  std::vector<Label> labels_;
  std::vector<std::size_t> used_;
  std::size_t missing_ = 0;
};

}  // namespace

bool for_each_increasing(const Poset& p, std::size_t q, bool packed_only, const LabelVisitor& visit) {
  IncreasingWalker w(p, q, packed_only, visit);
  return w.run();
}

std::uint64_t count_increasing(const Poset& p, std::size_t q, bool packed_only) {
  std::uint64_t count = 0;
  for_each_increasing(p, q, packed_only, [&](std::span<const Label>) {
    ++count;
    return true;
  });
  return count;
}

std::vector<IncreasingTableau> enumerate_increasing(const Poset& p, std::size_t q, bool packed_only,
                                                    std::size_t cap) {
  std::vector<IncreasingTableau> out;
  for_each_increasing(p, q, packed_only, [&](std::span<const Label> labels) {
    if (out.size() >= cap)
      throw CapExceeded("more than " + std::to_string(cap) + " increasing tableaux");
    out.push_back(make_unchecked(p, q, std::vector<Label>(labels.begin(), labels.end())));
    return true;
  });
  return out;
}

std::vector<Poset> enumerate_posets(std::size_t n) {
  if (n > 7) throw InvalidArgument("enumerate_posets supports at most 7 elements");
  std::set<CanonicalForm> seen;
  // pred[j]: strict down-set of j as a bitmask over 0..j-1.
  std::vector<std::uint32_t> pred(n, 0);
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == n) {
      std::vector<Cover> rel;
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t a = 0; a < b; ++a)
          if ((pred[b] >> a) & 1u) rel.push_back({a, b});
      seen.insert(canonical_form(Poset::from_relations(n, rel)));
      return;
    }
    for (std::uint32_t s = 0; s < (1u << j); ++s) {
      bool closed = true;
      for (std::size_t k = 0; k < j && closed; ++k)
        if (((s >> k) & 1u) && (pred[k] & ~s)) closed = false;
      if (!closed) continue;
      pred[j] = s;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  std::vector<Poset> out;
  out.reserve(seen.size());
  for (const auto& f : seen) out.push_back(f.to_poset());
  return out;
}

namespace {

// Bipartite cover patterns between a lower level of size a and an upper level
// of size b in which nobody is left without a neighbour. Bit i*b+j links
// lower i to upper j.
std::vector<std::uint64_t> full_bipartite_patterns(std::size_t a, std::size_t b) {
  std::vector<std::uint64_t> out;
  const std::size_t bits = a * b;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << bits); ++m) {
    bool ok = true;
    for (std::size_t i = 0; i < a && ok; ++i) {
      const std::uint64_t row = (m >> (i * b)) & ((std::uint64_t{1} << b) - 1);
      ok = row != 0;
    }
    for (std::size_t j = 0; j < b && ok; ++j) {
      bool any = false;
      for (std::size_t i = 0; i < a; ++i) any = any || ((m >> (i * b + j)) & 1u);
      ok = any;
    }
    if (ok) out.push_back(m);
  }
  return out;
}

void compositions(std::size_t n, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t k = 1; k <= n; ++k) {
    cur.push_back(k);
    compositions(n - k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Poset> enumerate_pure(std::size_t n, bool bounded) {
  if (n == 0) return {};
  if (n > 10) throw InvalidArgument("level enumeration supports at most 10 elements");
  std::vector<std::vector<std::size_t>> profiles;
  if (bounded) {
    if (n == 1) {
      profiles.push_back({1});
    } else {
      std::vector<std::vector<std::size_t>> inner;
      std::vector<std::size_t> cur;
      compositions(n - 2, cur, inner);
      for (auto& mid : inner) {
        std::vector<std::size_t> prof{1};
        prof.insert(prof.end(), mid.begin(), mid.end());
        prof.push_back(1);
        profiles.push_back(std::move(prof));
      }
    }
  } else {
    std::vector<std::size_t> cur;
    compositions(n, cur, profiles);
  }

  std::set<CanonicalForm> seen;
  for (const auto& prof : profiles) {
    const auto levels = prof.size();
    std::vector<std::size_t> start(levels, 0);
    for (std::size_t i = 1; i < levels; ++i) start[i] = start[i - 1] + prof[i - 1];
    std::vector<std::vector<std::uint64_t>> patterns(levels ? levels - 1 : 0);
    for (std::size_t i = 0; i + 1 < levels; ++i)
      patterns[i] = full_bipartite_patterns(prof[i], prof[i + 1]);
    std::vector<std::uint64_t> choice(patterns.size(), 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == patterns.size()) {
        std::vector<Cover> rel;
        for (std::size_t l = 0; l < patterns.size(); ++l) {
          const auto a = prof[l], b = prof[l + 1];
          for (std::size_t u = 0; u < a; ++u)
            for (std::size_t v = 0; v < b; ++v)
              if ((choice[l] >> (u * b + v)) & 1u) rel.push_back({start[l] + u, start[l + 1] + v});
        }
        seen.insert(canonical_form(Poset::from_relations(n, rel)));
        return;
      }
      for (auto m : patterns[i]) {
        choice[i] = m;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
  }
  std::vector<Poset> out;
  out.reserve(seen.size());
  for (const auto& f : seen) out.push_back(f.to_poset());
  return out;
}

}  // namespace posdyn
