#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "posdyn/census.hpp"
#include "posdyn/enumerate.hpp"
#include "posdyn/error.hpp"
#include "posdyn/fixtures.hpp"
#include "posdyn/minuscule.hpp"
#include "posdyn/nrp.hpp"
#include "posdyn/orbit.hpp"
#include "posdyn/rowmotion.hpp"
#include "posdyn/search.hpp"

using namespace posdyn;

namespace {

using Sizes = std::map<std::size_t, std::uint64_t>;

// Orbit multiset by walking the tile oracle from every tableau.
Sizes oracle_census(const Poset& p, std::size_t q, bool packed) {
  Sizes out;
  std::set<std::vector<Label>> seen;
  for (const auto& t : oracle::tableaux(p, q, packed)) {
    if (seen.count(t)) continue;
    auto cur = t;
    std::size_t k = 0;
    do {
      seen.insert(cur);
      cur = oracle::promote(p, q, cur);
      ++k;
    } while (cur != t);
    ++out[k];
  }
  return out;
}

Sizes oracle_rowmotion_census(const Poset& p) {
  Sizes out;
  std::set<std::uint64_t> seen;
  for (auto i : oracle::ideals(p)) {
    if (seen.count(i)) continue;
    auto cur = i;
    std::size_t k = 0;
    do {
      seen.insert(cur);
      cur = oracle::rowmotion(p, cur);
      ++k;
    } while (cur != i);
    ++out[k];
  }
  return out;
}

bool coprime_orbit(const Sizes& s, std::size_t m) {
  for (const auto& [k, _] : s)
    if (std::gcd(k, m) == 1) return true;
  return false;
}

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("enumeration counts match brute force") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_posets(n))
      for (std::size_t q = 1; q <= 6; ++q)
        for (bool packed : {false, true}) {
          auto want = oracle::tableaux(p, q, packed);
          std::vector<std::vector<Label>> got;
          for_each_increasing(p, q, packed, [&](std::span<const Label> l) {
            got.emplace_back(l.begin(), l.end());
            return true;
          });
          std::sort(got.begin(), got.end());
          std::sort(want.begin(), want.end());
          REQUIRE(got == want);
          CHECK(count_increasing(p, q, packed) == want.size());
        }
}

TEST_CASE("enumeration examples") {
  for (std::size_t n = 1; n <= 8; ++n) CHECK(count_increasing(chain(n), n, true) == 1);
  CHECK(count_increasing(chain(3), 5, false) == binom(5, 3));
  CHECK(count_increasing(n_prime(), 3, true) == 1);
  CHECK(count_increasing(n_prime(), 4, true) == 6);
  CHECK(count_increasing(n_prime(), 5, true) == 6);
  CHECK_THROWS_AS(enumerate_increasing(antichain(6), 6, false, 1000), CapExceeded);
  std::size_t seen = 0;
  CHECK_FALSE(for_each_increasing(antichain(3), 3, false, [&](std::span<const Label>) { return ++seen < 5; }));
  CHECK(seen == 5);
}

TEST_CASE("poset enumeration counts") {
  const std::size_t want[] = {1, 2, 5, 16, 63, 318};
  for (std::size_t n = 1; n <= 6; ++n) CHECK(enumerate_posets(n).size() == want[n - 1]);
}

TEST_CASE("promotion census matches the oracle in every walking mode") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_posets(n))
      for (std::size_t q = 1; q <= 6; ++q)
        for (bool packed : {false, true}) {
          auto want = oracle_census(p, q, packed);
          CensusOptions serial;
          auto c = promotion_census(p, q, packed, serial);
          REQUIRE(c.orbits == want);
          CHECK(c.weighted_total() == c.total_states);
          CensusOptions filtered;
          filtered.memory_cap = 0;
          CHECK(promotion_census(p, q, packed, filtered).orbits == want);
          if (n == 5 && q == 6) {
            CensusOptions par;
            par.jobs = 3;
            CHECK(promotion_census(p, q, packed, par).orbits == want);
          }
        }
}

TEST_CASE("census examples") {
  auto np = n_prime();
  CHECK(promotion_census(np, 3, true).orbits == Sizes{{1, 1}});
  CHECK(promotion_census(np, 4, true).orbits == Sizes{{2, 3}});
  CHECK(promotion_census(np, 5, true).orbits == Sizes{{3, 2}});
  auto h = promotion_census(bee_hummingbird(), 6, true);
  CHECK(h.has_orbit_of_size(5));
  CHECK(h.weighted_total() == h.total_states);

  auto d = rowmotion_census(rectangle(2, 2), 1);
  CHECK(d.orbits == Sizes{{2, 1}, {4, 1}});
  CHECK(d.total_states == 6);
  for (std::size_t r = 1; r <= 4; ++r)
    for (std::size_t c = 1; c <= 3; ++c) CHECK(rowmotion_census(chain(r), c).total_states == binom(r + c, c));
  CHECK_THROWS_AS(rowmotion_census(antichain(6), 2, 50), CapExceeded);

  std::size_t calls = 0;
  CHECK_FALSE(for_each_promotion_orbit(rectangle(2, 3), 6, false, {}, [&](std::span<const Label>, std::size_t) {
    return ++calls < 2;
  }));
  CHECK(calls == 2);
}

TEST_CASE("rowmotion census matches the oracle") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n))
      for (std::size_t c = 1; c <= 2; ++c) {
        auto pc = product(p, chain(c));
        CHECK(rowmotion_census(p, c).orbits == oracle_rowmotion_census(pc));
      }
}

TEST_CASE("nrp verdicts") {
  auto cube_v = nrp_check(cube());
  CHECK_FALSE(cube_v.is_nrp);
  CHECK(cube_v.q_min == 5);
  CHECK(cube_v.q_max == 8);
  bool has27 = false;
  for (const auto& w : cube_v.witnesses) {
    CHECK(verify_witness(cube(), w));
    CHECK(std::gcd(w.orbit_size, w.q) == 1);
    CHECK(w.representative.is_packed());
    has27 |= w.q == 7 && w.orbit_size == 27;
  }
  CHECK(has27);
  CHECK(std::is_sorted(cube_v.witnesses.begin(), cube_v.witnesses.end(), [](const auto& a, const auto& b) {
    return a.q != b.q ? a.q < b.q : a.representative < b.representative;
  }));

  auto h = nrp_check(bee_hummingbird());
  CHECK_FALSE(h.is_nrp);
  CHECK(h.witnesses.front().q == 6);
  CHECK(h.witnesses.front().orbit_size == 5);

  CHECK(nrp_check(rectangle(2, 3)).is_nrp);
  auto c = nrp_check(chain(5));
  CHECK(c.is_nrp);
  CHECK(c.vacuous);
  NrpOptions first;
  first.early_exit = true;
  CHECK(nrp_check(cube(), first).witnesses.size() >= 1);
  CHECK_FALSE(nrp_decide(cube()));
  CHECK(nrp_decide(n_poset()));
  auto skew = Poset::from_relations(4, std::vector<Cover>{{0, 1}, {1, 2}, {3, 2}});
  CHECK_THROWS_AS(nrp_check(skew), NotGraded);
}

TEST_CASE("packed verdict agrees with direct rowmotion") {
  // Direct definition with the subset oracle: no rowmotion orbit of J(P x c)
  // coprime to rank + c + 1, for c up to |P|.
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_bounded_graded(n)) {
      bool direct = true;
      for (std::size_t c = 1; c <= n && direct; ++c) {
        auto pc = product(p, chain(c));
        if (pc.size() > 18) break;
        direct = !coprime_orbit(oracle_rowmotion_census(pc), p.rank() + c + 1);
      }
      CHECK(nrp_decide(p) == direct);
      CHECK(nrp_by_rowmotion(p, std::min<std::size_t>(n, 3)) == direct);
    }
}
