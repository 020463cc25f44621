#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "posdyn/autonomous.hpp"
#include "posdyn/canonical.hpp"
#include "posdyn/enumerate.hpp"
#include "posdyn/error.hpp"
#include "posdyn/fixtures.hpp"
#include "posdyn/minuscule.hpp"

using namespace posdyn;

namespace {

// Definition check: each outside element is below all of A, above all of A,
// or incomparable to all of A.
bool autonomous_oracle(const Poset& p, std::uint64_t a) {
  auto lt = oracle::less_matrix(p);
  for (std::size_t b = 0; b < p.size(); ++b) {
    if ((a >> b) & 1u) continue;
    int below = -1, above = -1;
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (!((a >> x) & 1u)) continue;
      int bl = lt[b][x], ab = lt[x][b];
      if (below == -1) {
        below = bl;
        above = ab;
      } else if (below != bl || above != ab) {
        return false;
      }
    }
  }
  return true;
}

ElementSet set_of(std::size_t n, std::uint64_t m) {
  ElementSet s(n);
  for (std::size_t x = 0; x < n; ++x)
    if ((m >> x) & 1u) s.insert(x);
  return s;
}

}  // namespace

TEST_CASE("comparability graphs") {
  auto k = comparability_graph(chain(5));
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 5; ++b) CHECK(k.adjacent(a, b) == (a != b));
  CHECK(comparability_graph(antichain(4)).edges().empty());
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_posets(n)) {
      auto one = chain(1);
      CHECK(are_isomorphic(comparability_graph(ordinal_sum(p, one)),
                           comparability_graph(ordinal_sum(one, p))));
      CHECK(comparability_graph(dual(p)) == comparability_graph(p));
    }
  CHECK_FALSE(are_isomorphic(comparability_graph(chain(3)), comparability_graph(antichain(3))));
}

TEST_CASE("autonomous subsets match the definition") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_posets(n)) {
      std::vector<ElementSet> want;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        auto s = set_of(n, m);
        bool expect = autonomous_oracle(p, m);
        REQUIRE(is_autonomous(p, s) == expect);
        auto c = std::popcount(m);
        if (expect && c >= 2 && static_cast<std::size_t>(c) < n) want.push_back(s);
      }
      CHECK(autonomous_subsets(p) == want);
    }
}

TEST_CASE("autonomous examples") {
  auto d = rectangle(2, 2);
  for (std::size_t x = 0; x < 4; ++x) CHECK(is_autonomous(d, set_of(4, std::uint64_t{1} << x)));
  auto middle = set_of(4, 0b0110);
  CHECK(is_autonomous(d, middle));
  CHECK(is_isomorphic(dualize_autonomous(d, middle), d));
  CHECK_FALSE(is_autonomous(d, set_of(4, 0b0011)));
  CHECK_THROWS_AS(dualize_autonomous(d, set_of(4, 0b0011)), NotAutonomous);

  auto s = ordinal_sum(n_prime(), chain(3));
  CHECK(is_autonomous(s, set_of(s.size(), 0b11111)));
}

TEST_CASE("dualizing everything gives the dual") {
  for (const auto& p : {n_poset(), w_poset(), bee_hummingbird(), cube()}) {
    CHECK(dualize_autonomous(p, ElementSet::full(p.size())) == dual(p));
  }
}

TEST_CASE("two dualizations carry P + 1 to 1 + P") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_posets(n)) {
      auto top = ordinal_sum(p, chain(1));
      ElementSet copy(n + 1);
      for (std::size_t x = 0; x < n; ++x) copy.insert(x);
      auto once = dualize_autonomous(top, copy);
      auto twice = dualize_autonomous(once, ElementSet::full(n + 1));
      CHECK(is_isomorphic(twice, ordinal_sum(chain(1), p)));
    }
}
