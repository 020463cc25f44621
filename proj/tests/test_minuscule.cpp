#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "posdyn/canonical.hpp"
#include "posdyn/enumerate.hpp"
#include "posdyn/error.hpp"
#include "posdyn/fixtures.hpp"
#include "posdyn/minuscule.hpp"
#include "posdyn/promotion.hpp"
#include "posdyn/search.hpp"

using namespace posdyn;

namespace {

std::vector<MinusculeSpec> small_minuscule() {
  std::vector<MinusculeSpec> out;
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = a; a * b <= 16; ++b) out.push_back({MinusculeFamily::rectangle, a, b});
  for (std::size_t n = 1; n <= 5; ++n) out.push_back({MinusculeFamily::staircase, n, 1});
  for (std::size_t k = 0; k <= 3; ++k) out.push_back({MinusculeFamily::propeller, k, 1});
  return out;
}

// Chain-ness of principal ideals and filters, straight from the matrix.
std::size_t outside_doubletree(const Poset& p) {
  auto lt = oracle::less_matrix(p);
  std::size_t n = p.size(), out = 0;
  for (std::size_t x = 0; x < n; ++x) {
    auto is_chain = [&](bool below) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          bool in_a = a == x || (below ? lt[a][x] : lt[x][a]);
          bool in_b = b == x || (below ? lt[b][x] : lt[x][b]);
          if (in_a && in_b && a != b && !lt[a][b] && !lt[b][a]) return false;
        }
      return true;
    };
    if (!is_chain(true) && !is_chain(false)) ++out;
  }
  return out;
}

}  // namespace

TEST_CASE("family sizes and shapes") {
  CHECK(rectangle(3, 5).size() == 15);
  CHECK(rectangle(3, 5).rank() == 6);
  CHECK(staircase(5).size() == 15);
  CHECK(oracle::longest_chain(staircase(5)) == 8);
  CHECK(propeller(3).size() == 10);
  CHECK(is_isomorphic(propeller(3), ordinal_sum(ordinal_sum(chain(4), antichain(2)), chain(4))));
  CHECK(cayley_moufang().size() == 16);
  CHECK(freudenthal().size() == 27);
  CHECK(is_isomorphic(dual(staircase(4)), staircase(4)));
  CHECK(is_isomorphic(dual(cayley_moufang()), cayley_moufang()));
  for (std::size_t x = 1; x <= 4; ++x)
    for (std::size_t y = x; y <= 4; ++y)
      for (std::size_t u = 1; u <= 4; ++u)
        for (std::size_t v = u; v <= 4; ++v)
          CHECK(staircase(4).leq(staircase_index(4, x, y), staircase_index(4, u, v)) ==
                (x <= u && y <= v));
}

TEST_CASE("spec parsing") {
  auto s = MinusculeSpec::parse("rect:3x5");
  REQUIRE(s);
  CHECK(s->a == 3);
  CHECK(s->b == 5);
  CHECK(s->cli_name() == "rect:3x5");
  CHECK(MinusculeSpec::parse("staircase:4")->family == MinusculeFamily::staircase);
  CHECK(MinusculeSpec::parse("freudenthal")->family == MinusculeFamily::freudenthal);
  CHECK_FALSE(MinusculeSpec::parse("rect:0x2"));
  CHECK_FALSE(MinusculeSpec::parse("square:3"));
}

TEST_CASE("pd maps are order-reversing involutions") {
  for (const auto& spec : small_minuscule()) {
    auto m = minuscule(spec);
    auto pd = pd_map(m, spec);
    for (std::size_t x = 0; x < m.size(); ++x) {
      CHECK(pd(pd(x)) == x);
      for (std::size_t y = 0; y < m.size(); ++y) CHECK(m.leq(x, y) == m.leq(pd(y), pd(x)));
    }
  }
  auto r = rectangle(3, 5);
  auto pd = pd_map(r, MinusculeSpec{MinusculeFamily::rectangle, 3, 5});
  for (std::size_t x = 1; x <= 3; ++x)
    for (std::size_t y = 1; y <= 5; ++y) CHECK(pd((x - 1) * 5 + y - 1) == (3 - x) * 5 + (5 - y));
  auto c = pd_map(chain(6));
  for (std::size_t i = 0; i < 6; ++i) CHECK(c(i) == 5 - i);
  CHECK_THROWS_AS(pd_map(bee_hummingbird()), NotSelfDual);
}

TEST_CASE("exceptional duality by search") {
  auto choice = pd_choice(cayley_moufang());
  CHECK(choice.candidates >= 1);
  auto all = order_reversing_involutions(cayley_moufang());
  CHECK(all.size() == choice.candidates);
  CHECK(std::vector<Element>(choice.map.image().begin(), choice.map.image().end()) == all.front());
  CHECK_THROWS_AS(AntiAutomorphism(chain(3), {0, 1, 2}), InvalidArgument);
}

TEST_CASE("trees") {
  auto t = trees(rectangle(3, 5));
  CHECK(t.doubletree.count() == 12);
  CHECK(trees(staircase(5)).doubletree.count() == 11);
  for (std::size_t k = 0; k <= 3; ++k) CHECK(trees(propeller(k)).doubletree.count() == propeller(k).size());
  for (const auto& spec : small_minuscule()) {
    auto m = minuscule(spec);
    auto tr = trees(m);
    CHECK(m.size() - tr.doubletree.count() == outside_doubletree(m));
    auto pd = pd_map(m, spec);
    ElementSet image(m.size());
    tr.bottom_tree.for_each([&](std::size_t x) { image.insert(pd(x)); });
    CHECK(image == tr.top_tree);
  }
  auto cm = cayley_moufang();
  auto tr = trees(cm);
  auto pd = pd_map(cm);
  ElementSet image(cm.size());
  tr.bottom_tree.for_each([&](std::size_t x) { image.insert(pd(x)); });
  CHECK(image == tr.top_tree);
}

TEST_CASE("minimal tableau") {
  auto t = minimal_tableau(chain(3));
  CHECK(t.height() == 3);
  CHECK(std::vector<Label>(t.labels().begin(), t.labels().end()) == std::vector<Label>{1, 2, 3});
  auto d = minimal_tableau(rectangle(2, 2));
  CHECK(std::vector<Label>(d.labels().begin(), d.labels().end()) == std::vector<Label>{1, 2, 2, 3});
  auto skew = Poset::from_relations(4, std::vector<Cover>{{0, 1}, {1, 2}, {3, 2}});
  CHECK_THROWS_AS(minimal_tableau(skew), NotGraded);
}

TEST_CASE("minimal tableau is the only one of its height") {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& p : enumerate_bounded_graded(n)) {
      auto all = enumerate_increasing(p, p.rank() + 1, false);
      REQUIRE(all.size() == 1);
      CHECK(all.front() == minimal_tableau(p));
    }
  for (const auto& spec : small_minuscule()) {
    auto m = minuscule(spec);
    auto t = minimal_tableau(m);
    CHECK(k_promotion(t) == t);
    CHECK(pd_tableau(t, pd_map(m, spec)) == t);
    CHECK(k_evacuation(t) == t);
  }
}

TEST_CASE("doubling and radical") {
  auto t = minimal_tableau(staircase(2));
  auto u = doubling(t);
  CHECK(u.poset() == rectangle(2, 2));
  CHECK(std::vector<Label>(u.labels().begin(), u.labels().end()) == std::vector<Label>{1, 2, 2, 3});
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t q = 1; q <= 7; ++q)
      for (const auto& s : enumerate_increasing(staircase(k), q, false)) {
        auto d = doubling(s);
        REQUIRE(radical(d) == s);
        CHECK(d.distinct_labels() == s.distinct_labels());
      }
  CHECK_THROWS_AS(doubling(minimal_tableau(rectangle(2, 2))), InvalidArgument);
  auto asym = IncreasingTableau(rectangle(2, 2), 4, {1, 2, 3, 4});
  CHECK_THROWS_AS(radical(asym), InvalidArgument);
  CHECK_THROWS_AS(radical(minimal_tableau(rectangle(2, 3))), InvalidArgument);
}

TEST_CASE("a tableau whose doubletree labels survive one promotion is minimal") {
  for (const auto& m : {staircase(3), propeller(2)}) {
    auto dt = trees(m).doubletree;
    auto tm = minimal_tableau(m);
    for (std::size_t q = 1; q <= m.size(); ++q)
      for (const auto& v : enumerate_increasing(m, q, false)) {
        if (!agree_on(v, k_promotion(v), dt)) continue;
        CHECK(q == tm.height());
        CHECK(v == tm);
      }
  }
}
