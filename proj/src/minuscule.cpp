#include "posdyn/minuscule.hpp"

#include <algorithm>
#include <charconv>

#include "posdyn/error.hpp"

namespace posdyn {

namespace {

std::optional<std::size_t> parse_count(std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

}  // namespace

std::optional<MinusculeSpec> MinusculeSpec::parse(std::string_view text) {
  if (text == "cayley-moufang") return MinusculeSpec{MinusculeFamily::cayley_moufang, 0, 0};
  if (text == "freudenthal") return MinusculeSpec{MinusculeFamily::freudenthal, 0, 0};
  auto colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  auto head = text.substr(0, colon), tail = text.substr(colon + 1);
  if (head == "rect") {
    auto x = tail.find('x');
    if (x == std::string_view::npos) return std::nullopt;
    auto a = parse_count(tail.substr(0, x)), b = parse_count(tail.substr(x + 1));
    if (!a || !b || *a == 0 || *b == 0) return std::nullopt;
    return MinusculeSpec{MinusculeFamily::rectangle, *a, *b};
  }
  if (head == "staircase") {
    auto n = parse_count(tail);
    if (!n || *n == 0) return std::nullopt;
    return MinusculeSpec{MinusculeFamily::staircase, *n, 0};
  }
  if (head == "propeller") {
    auto k = parse_count(tail);
    if (!k) return std::nullopt;
    return MinusculeSpec{MinusculeFamily::propeller, *k, 0};
  }
  return std::nullopt;
}

std::string MinusculeSpec::cli_name() const {
  switch (family) {
    case MinusculeFamily::rectangle:
      return "rect:" + std::to_string(a) + "x" + std::to_string(b);
    case MinusculeFamily::staircase:
      return "staircase:" + std::to_string(a);
    case MinusculeFamily::propeller:
      return "propeller:" + std::to_string(a);
    case MinusculeFamily::cayley_moufang:
      return "cayley-moufang";
    case MinusculeFamily::freudenthal:
      return "freudenthal";
  }
  return {};
}

Poset rectangle(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw InvalidArgument("rectangle sides must be positive");
  return product(chain(a), chain(b)).renamed("rect:" + std::to_string(a) + "x" + std::to_string(b));
}

std::size_t staircase_index(std::size_t n, std::size_t x, std::size_t y) {
  // Rows x' < x contribute n - x' + 1 entries each.
  std::size_t idx = 0;
  for (std::size_t r = 1; r < x; ++r) idx += n - r + 1;
  return idx + (y - x);
}

Poset staircase(std::size_t n) {
  if (n == 0) throw InvalidArgument("staircase size must be positive");
  std::vector<Cover> rel;
  for (std::size_t x = 1; x <= n; ++x) {
    for (std::size_t y = x; y <= n; ++y) {
      if (y + 1 <= n) rel.push_back({staircase_index(n, x, y), staircase_index(n, x, y + 1)});
      if (x + 1 <= y) rel.push_back({staircase_index(n, x, y), staircase_index(n, x + 1, y)});
    }
  }
  return Poset::from_relations(n * (n + 1) / 2, rel, "staircase:" + std::to_string(n));
}

Poset propeller(std::size_t k) {
  auto p = rectangle(2, 2);
  for (std::size_t i = 0; i < k; ++i) p = ideal_lattice(p);
  return p.renamed("propeller:" + std::to_string(k));
}

Poset cayley_moufang() {
  static const Poset cached = ideal_lattice(ideal_lattice(rectangle(3, 2))).renamed("cayley-moufang");
  return cached;
}

Poset freudenthal() {
  static const Poset cached =
      ideal_lattice(ideal_lattice(ideal_lattice(rectangle(3, 2)))).renamed("freudenthal");
  return cached;
}

Poset minuscule(const MinusculeSpec& spec) {
  switch (spec.family) {
    case MinusculeFamily::rectangle:
      return rectangle(spec.a, spec.b);
    case MinusculeFamily::staircase:
      return staircase(spec.a);
    case MinusculeFamily::propeller:
      return propeller(spec.a);
    case MinusculeFamily::cayley_moufang:
      return cayley_moufang();
    case MinusculeFamily::freudenthal:
      return freudenthal();
  }
  throw InvalidArgument("unknown minuscule family");
}

AntiAutomorphism::AntiAutomorphism(Poset poset, std::vector<Element> image)
    : poset_(std::move(poset)), image_(std::move(image)) {
  const auto n = poset_.size();
  if (image_.size() != n) throw InvalidArgument("anti-automorphism has wrong length");
  for (std::size_t x = 0; x < n; ++x) {
    if (image_[x] >= n) throw InvalidArgument("anti-automorphism image out of range");
    if (image_[image_[x]] != x) throw InvalidArgument("map is not an involution");
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (poset_.leq(x, y) != poset_.leq(image_[y], image_[x]))
        throw InvalidArgument("map does not reverse order");
}

std::vector<std::vector<Element>> order_reversing_involutions(const Poset& p, std::size_t limit) {
  const auto n = p.size();
  constexpr auto unset = SIZE_MAX;
  std::vector<Element> img(n, unset);
  std::vector<std::vector<Element>> found;
  const auto order = p.linear_extension();

  auto compatible = [&](Element x, Element y) {
    return p.down_set(x).count() == p.up_set(y).count() &&
           p.up_set(x).count() == p.down_set(y).count() &&
           p.lower_covers(x).size() == p.upper_covers(y).size() &&
           p.upper_covers(x).size() == p.lower_covers(y).size();
  };
  auto consistent = [&](Element u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (img[v] == unset) continue;
      if (p.leq(u, v) != p.leq(img[v], img[u])) return false;
      if (p.leq(v, u) != p.leq(img[u], img[v])) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (found.size() >= 1'000'000) return;
    while (i < n && img[order[i]] != unset) ++i;
    if (i == n) {
      found.push_back(img);
      return;
    }
    const auto x = order[i];
    for (std::size_t y = 0; y < n; ++y) {
      if (img[y] != unset || !compatible(x, y)) continue;
      img[x] = y;
      img[y] = x;
      if (consistent(x) && consistent(y)) self(self, i + 1);
      img[x] = unset;
      img[y] = unset;
    }
  };
  rec(rec, 0);
  std::sort(found.begin(), found.end());
  if (found.size() > limit) found.resize(limit);
  return found;
}

PdChoice pd_choice(const Poset& m, std::optional<MinusculeSpec> hint) {
  const auto n = m.size();
  if (hint) {
    std::vector<Element> image(n);
    switch (hint->family) {
      case MinusculeFamily::rectangle:
        for (std::size_t i = 0; i < n; ++i) image[i] = n - 1 - i;
        return {AntiAutomorphism(m, std::move(image)), 1};
      case MinusculeFamily::staircase: {
        const auto k = hint->a;
        for (std::size_t x = 1; x <= k; ++x)
          for (std::size_t y = x; y <= k; ++y)
            image[staircase_index(k, x, y)] = staircase_index(k, k + 1 - y, k + 1 - x);
        return {AntiAutomorphism(m, std::move(image)), 1};
      }
      case MinusculeFamily::propeller: {
        const auto& rd = m.rank_data();
        std::vector<std::vector<Element>> by_rank(rd.rank + 1);
        for (std::size_t x = 0; x < n; ++x) by_rank[rd.elem_rank[x]].push_back(x);
        for (std::size_t x = 0; x < n; ++x) {
          const auto r = rd.elem_rank[x];
          if (2 * r == rd.rank) {
            image[x] = x;
          } else {
            const auto& target = by_rank[rd.rank - r];
            if (target.size() != 1) throw InvalidArgument("poset is not a propeller");
            image[x] = target.front();
          }
        }
        return {AntiAutomorphism(m, std::move(image)), 1};
      }
      case MinusculeFamily::cayley_moufang:
      case MinusculeFamily::freudenthal:
        break;
    }
  }
  auto all = order_reversing_involutions(m);
  if (all.empty()) throw NotSelfDual("poset admits no order-reversing involution");
  const auto count = all.size();
  return {AntiAutomorphism(m, std::move(all.front())), count};
}

AntiAutomorphism pd_map(const Poset& m, std::optional<MinusculeSpec> hint) {
  return pd_choice(m, hint).map;
}

namespace {

bool is_chain_set(const Poset& p, const ElementSet& s) {
  auto elems = s.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!p.comparable(elems[i], elems[j])) return false;
  return true;
}

}  // namespace

TreeDecomposition trees(const Poset& p) {
  TreeDecomposition t{ElementSet(p.size()), ElementSet(p.size()), ElementSet(p.size())};
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (is_chain_set(p, p.down_set(x))) t.bottom_tree.insert(x);
    if (is_chain_set(p, p.up_set(x))) t.top_tree.insert(x);
  }
  t.doubletree = t.bottom_tree | t.top_tree;
  return t;
}

IncreasingTableau minimal_tableau(const Poset& p) {
  const auto& rd = p.rank_data();
  if (!rd.is_graded) throw NotGraded("minimal tableau requires a graded poset");
  std::vector<Label> labels(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) labels[x] = static_cast<Label>(rd.elem_rank[x] + 1);
  return IncreasingTableau(p, rd.rank + 1, std::move(labels));
}

namespace {

std::size_t staircase_side(std::size_t n) {
  std::size_t k = 0;
  while (k * (k + 1) / 2 < n) ++k;
  return k * (k + 1) / 2 == n ? k : 0;
}

}  // namespace

IncreasingTableau doubling(const IncreasingTableau& t) {
  const auto k = staircase_side(t.poset().size());
  if (k == 0 || !(t.poset() == staircase(k)))
    throw InvalidArgument("doubling requires a tableau on a shifted staircase");
  auto rect = rectangle(k, k);
  std::vector<Label> labels(k * k);
  for (std::size_t x = 1; x <= k; ++x) {
    for (std::size_t y = x; y <= k; ++y) {
      auto v = t[staircase_index(k, x, y)];
      labels[(x - 1) * k + (y - 1)] = v;
      labels[(y - 1) * k + (x - 1)] = v;
    }
  }
  return IncreasingTableau(rect, t.height(), std::move(labels));
}

IncreasingTableau radical(const IncreasingTableau& u) {
  std::size_t k = 0;
  while (k * k < u.poset().size()) ++k;
  if (k * k != u.poset().size() || !(u.poset() == rectangle(k, k)))
    throw InvalidArgument("radical requires a tableau on a square rectangle");
  for (std::size_t x = 1; x <= k; ++x)
    for (std::size_t y = 1; y <= k; ++y)
      if (u[(x - 1) * k + (y - 1)] != u[(y - 1) * k + (x - 1)])
        throw InvalidArgument("radical requires a symmetric tableau");
  auto stair = staircase(k);
  std::vector<Label> labels(stair.size());
  for (std::size_t x = 1; x <= k; ++x)
    for (std::size_t y = x; y <= k; ++y) labels[staircase_index(k, x, y)] = u[(x - 1) * k + (y - 1)];
  return IncreasingTableau(stair, u.height(), std::move(labels));
}

}  // namespace posdyn
