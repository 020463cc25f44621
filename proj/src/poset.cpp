#include "posdyn/poset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "posdyn/error.hpp"

namespace posdyn {

struct Poset::Impl {
  std::size_t n = 0;
  std::string name;
  std::vector<Cover> covers;
  std::vector<std::vector<Element>> lower;
  std::vector<std::vector<Element>> upper;
  std::vector<ElementSet> down;
  std::vector<ElementSet> up;
  RankData ranks;
  std::vector<Element> linext;
};

namespace {

// Kahn's algorithm; returns a topological order or throws on a cycle.
std::vector<Element> topological_order(std::size_t n,
                                       const std::vector<std::vector<Element>>& succ) {
  std::vector<std::size_t> indeg(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (auto y : succ[x]) ++indeg[y];
  std::vector<Element> order;
  order.reserve(n);
  std::vector<Element> ready;
  for (std::size_t x = n; x-- > 0;)
    if (indeg[x] == 0) ready.push_back(x);
  while (!ready.empty()) {
    auto x = ready.back();
    ready.pop_back();
    order.push_back(x);
    for (auto y : succ[x])
      if (--indeg[y] == 0) ready.push_back(y);
  }
  if (order.size() != n) {
    std::vector<Element> stuck;
    for (std::size_t x = 0; x < n; ++x)
      if (indeg[x] > 0) stuck.push_back(x);
    std::ostringstream msg;
    msg << "relation contains a cycle through element " << stuck.front();
    throw CycleError(msg.str());
  }
  return order;
}

}  // namespace

Poset::Poset() : impl_(std::make_shared<const Impl>()) {}

Poset Poset::from_relations(std::size_t n, std::span<const Cover> relations,
                            std::string name) {
  std::vector<std::vector<Element>> succ(n);
  for (std::size_t i = 0; i < relations.size(); ++i) {
    const auto& r = relations[i];
    if (r.lower >= n || r.upper >= n) {
      std::ostringstream msg;
      msg << "relation #" << i << " (" << r.lower << ", " << r.upper
          << ") references an element outside 0.." << (n == 0 ? 0 : n - 1);
      throw InvalidArgument(msg.str());
    }
    if (r.lower == r.upper) {
      std::ostringstream msg;
      msg << "relation #" << i << " is a self-loop on element " << r.lower;
      throw CycleError(msg.str());
    }
    succ[r.lower].push_back(r.upper);
  }
  auto order = topological_order(n, succ);

  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->name = std::move(name);
  impl->down.assign(n, ElementSet(n));
  impl->up.assign(n, ElementSet(n));
  std::vector<std::vector<Element>> pred(n);
  for (std::size_t x = 0; x < n; ++x)
    for (auto y : succ[x]) pred[y].push_back(x);
  for (auto x : order) {
    auto& d = impl->down[x];
    d.insert(x);
    for (auto y : pred[x]) d |= impl->down[y];
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto x = *it;
    auto& u = impl->up[x];
    u.insert(x);
    for (auto y : succ[x]) u |= impl->up[y];
  }

  // a ⋖ b iff a < b with nothing strictly between.
  impl->lower.resize(n);
  impl->upper.resize(n);
  for (std::size_t b = 0; b < n; ++b) {
    auto strict = impl->down[b];
    strict.erase(b);
    strict.for_each([&](std::size_t a) {
      auto between = impl->up[a] & strict;
      between.erase(a);
      if (between.empty()) impl->covers.push_back({a, b});
    });
  }
  std::sort(impl->covers.begin(), impl->covers.end());
  for (const auto& c : impl->covers) {
    impl->upper[c.lower].push_back(c.upper);
    impl->lower[c.upper].push_back(c.lower);
  }
  for (auto& v : impl->lower) std::sort(v.begin(), v.end());

  auto& rd = impl->ranks;
  rd.elem_rank.assign(n, 0);
  for (auto x : order)
    for (auto y : impl->lower[x]) rd.elem_rank[x] = std::max(rd.elem_rank[x], rd.elem_rank[y] + 1);
  rd.rank = n == 0 ? 0 : *std::max_element(rd.elem_rank.begin(), rd.elem_rank.end());
  rd.is_graded = std::all_of(impl->covers.begin(), impl->covers.end(), [&](const Cover& c) {
    return rd.elem_rank[c.upper] == rd.elem_rank[c.lower] + 1;
  });

  impl->linext.resize(n);
  std::iota(impl->linext.begin(), impl->linext.end(), Element{0});
  std::stable_sort(impl->linext.begin(), impl->linext.end(), [&](Element a, Element b) {
    return rd.elem_rank[a] < rd.elem_rank[b];
  });
  return Poset(std::move(impl));
}

std::size_t Poset::size() const { return impl_->n; }
const std::string& Poset::name() const { return impl_->name; }

Poset Poset::renamed(std::string name) const {
  auto impl = std::make_shared<Impl>(*impl_);
  impl->name = std::move(name);
  return Poset(std::move(impl));
}

std::span<const Cover> Poset::covers() const { return impl_->covers; }
std::span<const Element> Poset::lower_covers(Element x) const { return impl_->lower[x]; }
std::span<const Element> Poset::upper_covers(Element x) const { return impl_->upper[x]; }
bool Poset::leq(Element a, Element b) const { return impl_->down[b].contains(a); }
const ElementSet& Poset::down_set(Element x) const { return impl_->down[x]; }
const ElementSet& Poset::up_set(Element x) const { return impl_->up[x]; }
const RankData& Poset::rank_data() const { return impl_->ranks; }
std::span<const Element> Poset::linear_extension() const { return impl_->linext; }

std::vector<Element> Poset::minimal_elements() const {
  std::vector<Element> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (impl_->lower[x].empty()) out.push_back(x);
  return out;
}

std::vector<Element> Poset::maximal_elements() const {
  std::vector<Element> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (impl_->upper[x].empty()) out.push_back(x);
  return out;
}

bool Poset::is_bounded() const {
  return size() > 0 && minimal_elements().size() == 1 && maximal_elements().size() == 1;
}

bool operator==(const Poset& a, const Poset& b) {
  return a.impl_ == b.impl_ || (a.size() == b.size() && std::ranges::equal(a.covers(), b.covers()));
}

Poset chain(std::size_t n) {
  std::vector<Cover> rel;
  for (std::size_t i = 0; i + 1 < n; ++i) rel.push_back({i, i + 1});
  return Poset::from_relations(n, rel, "chain:" + std::to_string(n));
}

Poset antichain(std::size_t n) {
  return Poset::from_relations(n, {}, "antichain:" + std::to_string(n));
}

Poset product(const Poset& p, const Poset& q) {
  const auto m = q.size();
  std::vector<Cover> rel;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (auto b2 : q.upper_covers(b)) rel.push_back({a * m + b, a * m + b2});
      for (auto a2 : p.upper_covers(a)) rel.push_back({a * m + b, a2 * m + b});
    }
  }
  return Poset::from_relations(p.size() * m, rel);
}

Poset ordinal_sum(const Poset& p, const Poset& q) {
  const auto off = p.size();
  std::vector<Cover> rel(p.covers().begin(), p.covers().end());
  for (const auto& c : q.covers()) rel.push_back({c.lower + off, c.upper + off});
  for (auto top : p.maximal_elements())
    for (auto bot : q.minimal_elements()) rel.push_back({top, bot + off});
  return Poset::from_relations(p.size() + q.size(), rel);
}

Poset dual(const Poset& p) {
  std::vector<Cover> rel;
  for (const auto& c : p.covers()) rel.push_back({c.upper, c.lower});
  return Poset::from_relations(p.size(), rel);
}

Poset relabel(const Poset& p, std::span<const Element> perm) {
  if (perm.size() != p.size()) throw InvalidArgument("relabel: permutation has wrong length");
  std::vector<bool> seen(p.size(), false);
  for (auto x : perm) {
    if (x >= p.size() || seen[x]) throw InvalidArgument("relabel: not a permutation");
    seen[x] = true;
  }
  std::vector<Cover> rel;
  for (const auto& c : p.covers()) rel.push_back({perm[c.lower], perm[c.upper]});
  return Poset::from_relations(p.size(), rel, p.name());
}

RankData rank_data(const Poset& p) { return p.rank_data(); }

bool has_equal_maximal_chains(const Poset& p) {
  // Longest and shortest saturated chains from a minimal element to each x.
  const auto n = p.size();
  if (n == 0) return true;
  std::vector<std::size_t> lo(n, 0), hi(n, 0);
  for (auto x : p.linear_extension()) {
    auto lc = p.lower_covers(x);
    if (lc.empty()) continue;
    lo[x] = SIZE_MAX;
    for (auto y : lc) {
      lo[x] = std::min(lo[x], lo[y] + 1);
      hi[x] = std::max(hi[x], hi[y] + 1);
    }
  }
  auto maxima = p.maximal_elements();
  std::size_t target = hi[maxima.front()];
  for (auto m : maxima)
    if (lo[m] != target || hi[m] != target) return false;
  return true;
}

bool is_ideal(const Poset& p, const ElementSet& s) {
  if (s.universe() != p.size()) return false;
  bool ok = true;
  s.for_each([&](std::size_t x) { ok = ok && p.down_set(x).is_subset_of(s); });
  return ok;
}

bool is_filter(const Poset& p, const ElementSet& s) {
  if (s.universe() != p.size()) return false;
  bool ok = true;
  s.for_each([&](std::size_t x) { ok = ok && p.up_set(x).is_subset_of(s); });
  return ok;
}

ElementSet down_closure(const Poset& p, const ElementSet& s) {
  ElementSet out(p.size());
  s.for_each([&](std::size_t x) { out |= p.down_set(x); });
  return out;
}

ElementSet up_closure(const Poset& p, const ElementSet& s) {
  ElementSet out(p.size());
  s.for_each([&](std::size_t x) { out |= p.up_set(x); });
  return out;
}

OrderIdeal::OrderIdeal(Poset poset, ElementSet members)
    : poset_(std::move(poset)), members_(std::move(members)) {
  if (!is_ideal(poset_, members_)) throw InvalidArgument("element set is not an order ideal");
}

void for_each_ideal(const Poset& p, const std::function<bool(const ElementSet&)>& visit,
                    std::size_t cap) {
  const auto order = p.linear_extension();
  const auto n = p.size();
  ElementSet current(n);
  std::size_t visited = 0;
  bool stop = false;
  // Decide each element in linear-extension order; an element may join only
  // when all of its lower covers already have.
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (stop) return;
    if (i == n) {
      if (++visited > cap) {
        throw CapExceeded("ideal enumeration exceeded cap of " + std::to_string(cap) + " ideals");
      }
      if (!visit(current)) stop = true;
      return;
    }
    const auto x = order[i];
    self(self, i + 1);
    bool allowed = true;
    for (auto y : p.lower_covers(x)) allowed = allowed && current.contains(y);
    if (allowed && !stop) {
      current.insert(x);
      self(self, i + 1);
      current.erase(x);
    }
  };
  rec(rec, 0);
}

std::vector<OrderIdeal> enumerate_ideals(const Poset& p, std::size_t cap) {
  std::vector<OrderIdeal> out;
  for_each_ideal(
      p,
      [&](const ElementSet& s) {
        out.emplace_back(p, s);
        return true;
      },
      cap);
  return out;
}

std::vector<ElementSet> ideal_lattice_members(const Poset& p, std::size_t cap) {
  std::vector<std::pair<std::vector<std::size_t>, ElementSet>> ideals;
  for_each_ideal(
      p,
      [&](const ElementSet& s) {
        ideals.emplace_back(s.elements(), s);
        return true;
      },
      cap);
  std::sort(ideals.begin(), ideals.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<ElementSet> out;
  out.reserve(ideals.size());
  for (auto& i : ideals) out.push_back(std::move(i.second));
  return out;
}

Poset ideal_lattice(const Poset& p, std::size_t cap) {
  auto members = ideal_lattice_members(p, cap);
  std::unordered_map<ElementSet, Element, ElementSetHash> index;
  for (std::size_t i = 0; i < members.size(); ++i) index.emplace(members[i], i);
  std::vector<Cover> rel;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (members[i].contains(x)) continue;
      auto bigger = members[i];
      bigger.insert(x);
      if (auto it = index.find(bigger); it != index.end()) rel.push_back({i, it->second});
    }
  }
  return Poset::from_relations(members.size(), rel);
}

}  // namespace posdyn
