#include <cstdio>
#include <filesystem>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "posdyn/canonical.hpp"
#include "posdyn/enumerate.hpp"
#include "posdyn/error.hpp"
#include "posdyn/fixtures.hpp"
#include "posdyn/minuscule.hpp"
#include "posdyn/search.hpp"

using namespace posdyn;

TEST_CASE("bounded graded counts match brute force") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<CanonicalForm> want;
    oracle::all_labeled_posets(n, [&](const Poset& p) {
      if (oracle::bounded(p) && oracle::graded(p)) want.insert(canonical_form(p));
    });
    auto got = enumerate_bounded_graded(n);
    std::set<CanonicalForm> got_forms;
    for (const auto& p : got) got_forms.insert(canonical_form(p));
    CHECK(got.size() == got_forms.size());
    CHECK(got_forms == want);
    auto alt = enumerate_bounded_graded(n, GradingConvention::equal_maximal_chains);
    CHECK(alt.size() == got.size());
  }
  const std::size_t counts[] = {1, 1, 1, 2, 4, 10, 28, 93, 354};
  for (std::size_t n = 7; n <= 9; ++n) CHECK(enumerate_bounded_graded(n).size() == counts[n - 1]);
}

TEST_CASE("bounded graded examples") {
  auto three = enumerate_bounded_graded(3);
  REQUIRE(three.size() == 1);
  CHECK(is_isomorphic(three[0], chain(3)));
  auto four = enumerate_bounded_graded(4);
  REQUIRE(four.size() == 2);
  std::set<CanonicalForm> f{canonical_form(four[0]), canonical_form(four[1])};
  CHECK(f == std::set<CanonicalForm>{canonical_form(chain(4)), canonical_form(rectangle(2, 2))});
  std::set<CanonicalForm> five;
  for (const auto& p : enumerate_bounded_graded(5)) five.insert(canonical_form(p));
  auto a2 = antichain(2);
  CHECK(five == std::set<CanonicalForm>{canonical_form(chain(5)),
                                        canonical_form(ordinal_sum(ordinal_sum(chain(1), a2), chain(2))),
                                        canonical_form(ordinal_sum(ordinal_sum(chain(2), a2), chain(1))),
                                        canonical_form(n_prime())});
}

TEST_CASE("pure posets") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t want = 0;
    for (const auto& p : enumerate_posets(n)) want += has_equal_maximal_chains(p);
    CHECK(enumerate_pure(n, false).size() == want);
  }
}

TEST_CASE("family labels") {
  CHECK(family_identify(rectangle(3, 3)) == "minuscule: rect:3x3");
  CHECK(family_identify(chain(4)) == "minuscule: rect:1x4");
  CHECK(family_identify(staircase(4)) == "minuscule: staircase:4");
  CHECK(family_identify(propeller(2)) == "minuscule: propeller:2");
  CHECK(family_identify(staircase(3)) == "minuscule: staircase:3");
  CHECK(family_identify(p_ab(1, 3)) == "P_{1,3}");
  CHECK(family_identify(n_poset()) == "N");
  CHECK(family_identify(w_poset()) == "W");
  CHECK(family_identify(dual(w_poset())) == "dual(W)");
  CHECK(family_identify(cayley_moufang()) == "minuscule: cayley-moufang");
  CHECK(family_identify(cube()) == "other");
}

TEST_CASE("dualization classes") {
  auto cls = autonomous_dualization_class(n_poset());
  std::size_t bounded = 0;
  for (const auto& p : cls) bounded += p.is_bounded();
  CHECK(bounded == 5);
  for (const auto& p : cls) {
    CHECK(p.size() == 9);
    if (p.is_bounded() && !is_isomorphic(p, n_poset())) CHECK(family_identify(p) == "N-family");
  }
  auto w = autonomous_dualization_class(w_poset());
  std::size_t wb = 0;
  for (const auto& p : w) wb += p.is_bounded();
  CHECK(wb == 2);
}

TEST_CASE("search is deterministic and resumable") {
  SearchOptions one;
  auto a = nrp_search(8, one);
  SearchOptions many;
  many.jobs = 4;
  many.chunk = 7;
  auto b = nrp_search(8, many);
  REQUIRE(a.levels.size() == b.levels.size());
  for (std::size_t i = 0; i < a.levels.size(); ++i) {
    CHECK(a.levels[i].examined == b.levels[i].examined);
    REQUIRE(a.levels[i].survivors.size() == b.levels[i].survivors.size());
    for (std::size_t k = 0; k < a.levels[i].survivors.size(); ++k)
      CHECK(a.levels[i].survivors[k].form == b.levels[i].survivors[k].form);
  }
  auto path = (std::filesystem::temp_directory_path() / "posdyn_search_ckpt.json").string();
  std::filesystem::remove(path);
  SearchOptions ck;
  ck.checkpoint_path = path;
  ck.chunk = 5;
  auto c = nrp_search(7, ck);
  CHECK(std::filesystem::exists(path));
  ck.resume = true;
  auto d = nrp_search(8, ck);
  REQUIRE(d.levels.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) CHECK(d.levels[i].survivors.size() == a.levels[i].survivors.size());
  std::filesystem::remove(path);
  CHECK(c.levels.size() == 7);
  CHECK_THROWS_AS(nrp_search(11), InvalidArgument);
}
