#include "posdyn/autonomous.hpp"

#include <algorithm>

#include "posdyn/error.hpp"

namespace posdyn {

std::size_t ComparabilityGraph::degree(Element a) const {
  std::size_t d = 0;
  for (std::size_t b = 0; b < n_; ++b) d += adjacent(a, b);
  return d;
}

std::vector<Cover> ComparabilityGraph::edges() const {
  std::vector<Cover> out;
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      if (adjacent(a, b)) out.push_back({a, b});
  return out;
}

ComparabilityGraph ComparabilityGraph::relabeled(std::span<const Element> perm) const {
  ComparabilityGraph g(n_);
  for (const auto& e : edges()) g.add_edge(perm[e.lower], perm[e.upper]);
  return g;
}

ComparabilityGraph comparability_graph(const Poset& p) {
  ComparabilityGraph g(p.size());
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p.comparable(a, b)) g.add_edge(a, b);
  return g;
}

bool are_isomorphic(const ComparabilityGraph& a, const ComparabilityGraph& b) {
  const auto n = a.size();
  if (n != b.size()) return false;
  std::vector<std::size_t> da(n), db(n);
  for (std::size_t x = 0; x < n; ++x) da[x] = a.degree(x), db[x] = b.degree(x);
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<Element> map(n), order(n);
  std::vector<bool> used(n, false);
  for (std::size_t x = 0; x < n; ++x) order[x] = x;
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return da[x] > da[y]; });
  auto rec = [&](auto&& self, std::size_t k) -> bool {
    if (k == n) return true;
    const auto x = order[k];
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y] || db[y] != da[x]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j)
        ok = a.adjacent(order[j], x) == b.adjacent(map[order[j]], y);
      if (!ok) continue;
      used[y] = true;
      map[x] = y;
      if (self(self, k + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

bool is_autonomous(const Poset& p, const ElementSet& a) {
  if (a.universe() != p.size()) throw InvalidArgument("subset universe does not match poset");
  const auto k = a.count();
  bool ok = true;
  for (std::size_t b = 0; b < p.size() && ok; ++b) {
    if (a.contains(b)) continue;
    auto above_b = (p.up_set(b) & a).count();
    auto below_b = (p.down_set(b) & a).count();
    ok = (above_b == 0 || above_b == k) && (below_b == 0 || below_b == k);
  }
  return ok;
}

std::vector<ElementSet> autonomous_subsets(const Poset& p, std::size_t max_n) {
  const auto n = p.size();
  if (n > max_n || n >= 63) {
    throw InvalidArgument("autonomous subset enumeration limited to " + std::to_string(max_n) +
                          " elements");
  }
  std::vector<std::uint64_t> up(n), down(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && p.leq(x, y)) up[x] |= std::uint64_t{1} << y;
      if (x != y && p.leq(y, x)) down[x] |= std::uint64_t{1} << y;
    }
  }
  std::vector<ElementSet> out;
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < all; ++mask) {
    if (std::popcount(mask) < 2) continue;
    bool ok = true;
    for (std::size_t b = 0; b < n && ok; ++b) {
      if (mask >> b & 1) continue;
      auto u = up[b] & mask, d = down[b] & mask;
      ok = (u == 0 || u == mask) && (d == 0 || d == mask);
    }
    if (!ok) continue;
    ElementSet s(n);
    for (std::size_t x = 0; x < n; ++x)
      if (mask >> x & 1) s.insert(x);
    out.push_back(std::move(s));
  }
  return out;
}

Poset dualize_autonomous(const Poset& p, const ElementSet& a) {
  if (!is_autonomous(p, a)) throw NotAutonomous("subset is not autonomous");
  std::vector<Cover> rel;
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (!p.less(x, y)) continue;
      if (a.contains(x) && a.contains(y))
        rel.push_back({y, x});
      else
        rel.push_back({x, y});
    }
  }
  return Poset::from_relations(p.size(), rel, p.name());
}

}  // namespace posdyn
