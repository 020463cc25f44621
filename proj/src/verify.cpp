#include "posdyn/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "posdyn/autonomous.hpp"
#include "posdyn/canonical.hpp"
#include "posdyn/census.hpp"
#include "posdyn/enumerate.hpp"
#include "posdyn/error.hpp"
#include "posdyn/fixtures.hpp"
#include "posdyn/minuscule.hpp"
#include "posdyn/nrp.hpp"
#include "posdyn/orbit.hpp"
#include "posdyn/promotion.hpp"
#include "posdyn/rowmotion.hpp"
#include "posdyn/search.hpp"

namespace posdyn {

bool SuiteResult::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void SuiteResult::check(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

namespace {

std::string census_word(const Census& c) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [size, count] : c.orbits) {
    out << (first ? "" : ", ") << size << ": " << count;
    first = false;
  }
  out << "} over " << c.total_states;
  return out.str();
}

template <class F>
void each_tableau(const Poset& p, std::size_t q, bool packed, F&& f) {
  for_each_increasing(p, q, packed, [&](std::span<const Label> labels) {
    f(make_unchecked(p, q, std::vector<Label>(labels.begin(), labels.end())));
    return true;
  });
}

std::vector<Poset> posets_up_to(std::size_t max_n) {
  std::vector<Poset> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto level = enumerate_posets(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Poset> pure_up_to(std::size_t max_n) {
  std::vector<Poset> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto level = enumerate_pure(n, false);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Poset> bounded_graded_up_to(std::size_t max_n) {
  std::vector<Poset> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto level = enumerate_bounded_graded(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::string describe(const Poset& p) { return canonical_form(p).to_string(); }

// ---------------------------------------------------------------------------

void cube_witness(const VerifyOptions& o, SuiteResult& r) {
  const auto t = cube_witness_tableau();
  const auto orb = promotion_orbit(t);
  r.check("witness tableau orbit has 27 elements", orb.size == 27, std::to_string(orb.size));
  NrpOptions opts;
  opts.census.jobs = o.jobs;
  const auto v = nrp_check(cube(), opts);
  r.check("cube is not NRP", !v.is_nrp, std::to_string(v.witnesses.size()) + " witnesses");
  const bool has_q7 = std::any_of(v.witnesses.begin(), v.witnesses.end(), [&](const NrpWitness& w) {
    return w.q == 7 && w.orbit_size == 27 && w.representative == orb.representative;
  });
  r.check("the 27-orbit is a witness at q = 7", has_q7);
  const bool sound = std::all_of(v.witnesses.begin(), v.witnesses.end(),
                                 [&](const NrpWitness& w) { return verify_witness(cube(), w); });
  r.check("every witness re-verifies", sound);
}

void bee_hummingbird_suite(const VerifyOptions& o, SuiteResult& r) {
  const auto h = bee_hummingbird();
  r.check("ten elements, graded of rank 4", h.size() == 10 && h.is_graded() && h.rank() == 4,
          std::to_string(h.size()) + " elements, rank " + std::to_string(h.rank()));
  const auto in = hummingbird_step_input(), out = hummingbird_step_output();
  const auto step = k_promotion(in);
  r.check("one K-promotion step at q = 8", step == out, step.to_string());
  r.check("inverse step undoes it", k_promotion_inverse(out) == in);
  CensusOptions co;
  co.jobs = o.jobs;
  const auto c = promotion_census(h, 6, true, co);
  r.check("packed census at q = 6 has an orbit of size 5", c.has_orbit_of_size(5), census_word(c));
  NrpOptions opts;
  opts.census = co;
  const auto v = nrp_check(h, opts);
  const bool w5 = std::any_of(v.witnesses.begin(), v.witnesses.end(),
                              [](const NrpWitness& w) { return w.q == 6 && w.orbit_size == 5; });
  r.check("not NRP, witness of size 5 at q = 6", !v.is_nrp && w5);
}

void n_prime_statistics(const VerifyOptions& o, SuiteResult& r) {
  CensusOptions co;
  co.jobs = o.jobs;
  const auto np = n_prime();
  const std::map<std::size_t, std::pair<std::uint64_t, std::map<std::size_t, std::uint64_t>>> expect{
      {3, {1, {{1, 1}}}}, {4, {6, {{2, 3}}}}, {5, {6, {{3, 2}}}}};
  for (const auto& [q, e] : expect) {
    const auto c = promotion_census(np, q, true, co);
    r.check("packed census at q = " + std::to_string(q),
            c.total_states == e.first && c.orbits == e.second && count_increasing(np, q, true) == e.first,
            census_word(c));
  }
  r.check("N is NRP", nrp_decide(n_poset(), co));
  r.check("W is NRP", nrp_decide(w_poset(), co));
}

void minuscule_nrp(const VerifyOptions& o, SuiteResult& r) {
  NrpOptions opts;
  opts.census.jobs = o.jobs;
  auto run = [&](const Poset& p, const std::string& name) {
    const auto v = nrp_check(p, opts);
    r.check(name + " is NRP", v.is_nrp, v.vacuous ? "vacuous" : "");
  };
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = a; a + b <= 8; ++b)
      run(rectangle(a, b), "rect:" + std::to_string(a) + "x" + std::to_string(b));
  for (std::size_t k = 1; k <= 4; ++k) run(staircase(k), "staircase:" + std::to_string(k));
  for (std::size_t k = 0; k <= 3; ++k) run(propeller(k), "propeller:" + std::to_string(k));
  for (std::size_t n = 1; n <= 12; ++n) run(chain(n), "chain:" + std::to_string(n));
}

void minuscule_nrp_extended(const VerifyOptions& o, SuiteResult& r) {
  CensusOptions co;
  co.jobs = o.jobs;
  r.check("cayley-moufang is NRP", nrp_decide(cayley_moufang(), co));
  const auto f = freudenthal();
  std::uint64_t total = 0, walked = 0, bad = 0;
  for (std::size_t q = 1; q <= f.size(); ++q) {
    total += count_increasing(f, q, true);
    for_each_promotion_orbit(f, q, true, co, [&](std::span<const Label>, std::size_t k) {
      walked += k;
      if (!(q % k == 0 || k == 2 * q || k == 3 * q)) ++bad;
      return true;
    });
  }
  r.check("freudenthal has 624493 packed tableaux", total == 624493 && walked == total,
          std::to_string(total) + " counted, " + std::to_string(walked) + " walked");
  r.check("every packed freudenthal orbit size divides q or equals 2q or 3q", bad == 0,
          std::to_string(bad) + " exceptions");
}

struct MinusculeCase {
  Poset poset;
  MinusculeSpec spec;
};

void doubletree(const VerifyOptions&, SuiteResult& r) {
  const std::vector<MinusculeCase> cases{
      {rectangle(2, 3), {MinusculeFamily::rectangle, 2, 3}},
      {rectangle(3, 3), {MinusculeFamily::rectangle, 3, 3}},
      {staircase(3), {MinusculeFamily::staircase, 3, 0}},
      {staircase(4), {MinusculeFamily::staircase, 4, 0}},
      {propeller(1), {MinusculeFamily::propeller, 1, 0}},
      {propeller(2), {MinusculeFamily::propeller, 2, 0}},
  };
  for (const auto& mc : cases) {
    const auto& m = mc.poset;
    const auto dt = trees(m).doubletree;
    const auto pd = pd_map(m, mc.spec);
    std::uint64_t seen = 0, dt_bad = 0, pd_bad = 0, ee_bad = 0;
    for (std::size_t q = m.rank() + 1; q <= std::min<std::size_t>(m.size() + 1, 9); ++q) {
      each_tableau(m, q, false, [&](const IncreasingTableau& t) {
        ++seen;
        const auto power = k_promotion_power(t, static_cast<long>(q));
        if (!agree_on(t, power, dt)) ++dt_bad;
        const auto e = k_evacuation(t);
        if (!(k_evacuation(e) == t)) ++ee_bad;
        if (!(pd_tableau(k_evacuation(pd_tableau(e, pd)), pd) == power)) ++pd_bad;
      });
    }
    const auto name = mc.spec.cli_name();
    r.check(name + ": doubletree labels survive q promotions", dt_bad == 0,
            std::to_string(seen) + " tableaux, " + std::to_string(dt_bad) + " failures");
    r.check(name + ": q promotions equal PD E PD E", pd_bad == 0, std::to_string(pd_bad) + " failures");
    r.check(name + ": evacuation is an involution", ee_bad == 0, std::to_string(ee_bad) + " failures");
  }
  const auto s3 = staircase(3);
  const auto pd_s = pd_map(s3, MinusculeSpec{MinusculeFamily::staircase, 3, 0});
  const auto pd_r = pd_map(rectangle(3, 3), MinusculeSpec{MinusculeFamily::rectangle, 3, 3});
  std::uint64_t seen = 0, pd_bad = 0, e_bad = 0, rt_bad = 0;
  for (std::size_t q = 1; q <= 9; ++q) {
    each_tableau(s3, q, false, [&](const IncreasingTableau& t) {
      ++seen;
      const auto d = doubling(t);
      if (!(radical(d) == t)) ++rt_bad;
      if (!(radical(pd_tableau(d, pd_r)) == pd_tableau(t, pd_s))) ++pd_bad;
      if (!(radical(k_evacuation(d)) == k_evacuation(t))) ++e_bad;
    });
  }
  r.check("staircase:3: radical of doubling is the identity", rt_bad == 0,
          std::to_string(seen) + " tableaux");
  r.check("staircase:3: radical commutes with PD", pd_bad == 0, std::to_string(pd_bad) + " failures");
  r.check("staircase:3: radical commutes with evacuation", e_bad == 0, std::to_string(e_bad) + " failures");
}

void deflation_and_equivalence(const VerifyOptions&, SuiteResult& r) {
  const auto suite = bounded_graded_up_to(5);
  std::uint64_t seen = 0, label_bad = 0, defl_bad = 0, formula_bad = 0, inflate_bad = 0, coprime_bad = 0;
  for (const auto& p : suite) {
    for (std::size_t q = 1; q <= 7; ++q) {
      each_tableau(p, q, false, [&](const IncreasingTableau& t) {
        ++seen;
        const auto power = k_promotion_power(t, static_cast<long>(q));
        const auto v = content_vector(t);
        if (!(content_vector(power) == v)) ++label_bad;
        const auto defl = deflation(t);
        const auto d = defl.distinct;
        if (!(deflation(power).packed == k_promotion_power(defl.packed, static_cast<long>(d)))) ++defl_bad;
        if (!(inflate(defl.packed, v) == t)) ++inflate_bad;
        const auto tau = promotion_orbit_size(p, q, t.labels());
        const auto tau_packed = promotion_orbit_size(p, d, defl.packed.labels());
        if (predicted_orbit_size(q, v, tau_packed) != tau) ++formula_bad;
        if (std::gcd(tau, q) == 1 && !t.is_packed()) ++coprime_bad;
      });
    }
  }
  const auto n = std::to_string(suite.size()) + " posets, " + std::to_string(seen) + " tableaux";
  r.check("q promotions keep the label set", label_bad == 0, n);
  r.check("deflation commutes with promotion powers", defl_bad == 0, std::to_string(defl_bad) + " failures");
  r.check("inflating the deflation by the content vector recovers the tableau", inflate_bad == 0,
          std::to_string(inflate_bad) + " failures");
  r.check("orbit sizes match the rotation formula", formula_bad == 0, std::to_string(formula_bad) + " failures");
  r.check("orbits coprime to q are packed", coprime_bad == 0, std::to_string(coprime_bad) + " failures");

  auto with_h = suite;
  with_h.push_back(bee_hummingbird());
  std::uint64_t mismatches = 0, pairs = 0;
  std::string first_bad;
  for (const auto& p : with_h) {
    for (std::size_t c = 1; c <= 3; ++c) {
      ++pairs;
      const auto rc = rowmotion_census(p, c);
      const auto pc = promotion_census(p, p.rank() + c + 1, false);
      if (rc.orbits != pc.orbits) {
        ++mismatches;
        if (first_bad.empty()) first_bad = describe(p) + " c=" + std::to_string(c);
      }
    }
  }
  r.check("rowmotion on J(P x c) and promotion at rank + c + 1 have equal orbit multisets",
          mismatches == 0, std::to_string(pairs) + " cases" + (first_bad.empty() ? "" : ", first bad " + first_bad));
}

std::set<CanonicalForm> expected_survivors(std::size_t n) {
  std::set<CanonicalForm> out;
  if (n == 9) {
    out.insert(canonical_form(rectangle(3, 3)));
    out.insert(canonical_form(chain(9)));
    for (const auto& p : autonomous_dualization_class(n_poset()))
      if (p.is_bounded()) out.insert(canonical_form(p));
    out.insert(canonical_form(w_poset()));
    out.insert(canonical_form(dual(w_poset())));
    return out;
  }
  for (std::size_t a = 1; a * a <= n; ++a)
    if (n % a == 0) out.insert(canonical_form(rectangle(a, n / a)));
  for (std::size_t k = 1; k * (k + 1) / 2 <= n; ++k)
    if (k * (k + 1) / 2 == n) out.insert(canonical_form(staircase(k)));
  if (n >= 4 && n % 2 == 0) out.insert(canonical_form(propeller((n - 4) / 2)));
  for (std::size_t a = 0; a + 4 <= n; ++a)
    if ((n - 4) % 2 == 0) out.insert(canonical_form(p_ab(a, n - 4 - a)));
  return out;
}

void classification(const VerifyOptions& o, SuiteResult& r) {
  for (auto conv : {GradingConvention::rank_function, GradingConvention::equal_maximal_chains}) {
    SearchOptions so;
    so.jobs = o.jobs;
    so.convention = conv;
    const auto report = nrp_search(9, so);
    const auto tag = to_string(conv) + ": ";
    r.check(tag + "report records its convention", report.convention == conv);
    for (const auto& level : report.levels) {
      std::set<CanonicalForm> got;
      for (const auto& s : level.survivors) got.insert(s.form);
      const auto want = expected_survivors(level.n);
      std::ostringstream d;
      d << got.size() << " survivors of " << level.examined << ", expected " << want.size();
      r.check(tag + "n = " + std::to_string(level.n), got == want && got.size() == level.survivors.size(),
              d.str());
    }
    if (!report.levels.empty()) {
      const auto& last = report.levels.back();
      std::map<std::string, std::size_t> fam;
      for (const auto& s : last.survivors) ++fam[s.family];
      r.check(tag + "n = 9 labels: N, 4 N-family, W, dual(W), 3x3, chain",
              last.survivors.size() == 9 && fam["N"] == 1 && fam["N-family"] == 4 && fam["W"] == 1 &&
                  fam["dual(W)"] == 1 && fam["minuscule: rect:3x3"] == 1 && fam["minuscule: rect:1x9"] == 1);
    }
  }
}

// ---------------------------------------------------------------------------

std::vector<Poset> assorted_graded() {
  return {bee_hummingbird(), cube(), rectangle(3, 3), staircase(4), propeller(3), cayley_moufang(),
          n_poset(), w_poset()};
}

void empty_ideal_orbit(const VerifyOptions&, SuiteResult& r) {
  auto suite = pure_up_to(6);
  const auto extra = assorted_graded();
  suite.insert(suite.end(), extra.begin(), extra.end());
  std::uint64_t bad = 0;
  std::string first;
  for (const auto& p : suite) {
    const auto orb = rowmotion_orbit(OrderIdeal(p, ElementSet(p.size())));
    if (orb.size != p.rank() + 2) {
      ++bad;
      if (first.empty()) first = describe(p);
    }
  }
  r.check("orbit of the empty ideal has rank + 2 elements", bad == 0,
          std::to_string(suite.size()) + " posets" + (first.empty() ? "" : ", first bad " + first));
}

void rowmotion_bijective(const VerifyOptions&, SuiteResult& r) {
  const auto suite = posets_up_to(6);
  std::uint64_t bad = 0, ideals = 0;
  for (const auto& p : suite) {
    RowmotionStep step(p);
    std::set<ElementSet> images;
    std::size_t count = 0;
    for_each_ideal(p, [&](const ElementSet& i) {
      ++count;
      const auto j = step(i);
      if (!is_ideal(p, j) || !(step.inverse(j) == i)) ++bad;
      images.insert(j);
      return true;
    });
    ideals += count;
    if (images.size() != count) ++bad;
  }
  r.check("rowmotion is a bijection with the stated inverse", bad == 0,
          std::to_string(suite.size()) + " posets, " + std::to_string(ideals) + " ideals");
}

void promotion_bijective(const VerifyOptions&, SuiteResult& r) {
  const auto suite = posets_up_to(6);
  std::uint64_t bad = 0, states = 0;
  for (const auto& p : suite) {
    PromotionEngine engine(p);
    for (std::size_t q = 1; q <= 6; ++q) {
      std::set<std::vector<Label>> images;
      std::size_t count = 0;
      for_each_increasing(p, q, false, [&](std::span<const Label> labels) {
        ++count;
        std::vector<Label> img(labels.begin(), labels.end());
        engine.promote(img, q);
        if (!is_increasing(p, q, img)) ++bad;
        auto back = img;
        engine.unpromote(back, q);
        if (!std::equal(back.begin(), back.end(), labels.begin())) ++bad;
        images.insert(std::move(img));
        return true;
      });
      states += count;
      if (images.size() != count) ++bad;
    }
  }
  r.check("K-promotion is a bijection on Inc^q(P), q <= 6", bad == 0,
          std::to_string(suite.size()) + " posets, " + std::to_string(states) + " tableaux");
}

void content_rotation(const VerifyOptions&, SuiteResult& r) {
  const auto suite = posets_up_to(6);
  std::uint64_t bad = 0, states = 0;
  for (const auto& p : suite) {
    for (std::size_t q = 1; q <= 7; ++q) {
      each_tableau(p, q, false, [&](const IncreasingTableau& t) {
        ++states;
        if (!(content_vector(k_promotion(t)) == content_vector(t).rotated())) ++bad;
      });
    }
  }
  r.check("one promotion rotates the content vector", bad == 0,
          std::to_string(suite.size()) + " posets, " + std::to_string(states) + " tableaux");
}

void flip_map_orbits(const VerifyOptions&, SuiteResult& r) {
  std::uint64_t pairs = 0, census_bad = 0, tableau_bad = 0, checked = 0;
  for (const auto& p : posets_up_to(6)) {
    const auto subsets = autonomous_subsets(p);
    for (const auto& a : subsets) {
      const auto d = dualize_autonomous(p, a);
      ++pairs;
      for (std::size_t q = 1; q <= 7; ++q) {
        if (promotion_census(p, q, false).orbits != promotion_census(d, q, false).orbits) ++census_bad;
        if (p.size() > 5 || q > 6) continue;
        each_tableau(p, q, false, [&](const IncreasingTableau& t) {
          ++checked;
          const auto f = flip_map(t, a);
          if (promotion_orbit_size(p, q, t.labels()) != promotion_orbit_size(d, q, f.labels()))
            ++tableau_bad;
        });
      }
    }
  }
  r.check("dualizing an autonomous subset keeps the orbit multiset", census_bad == 0,
          std::to_string(pairs) + " (poset, subset) pairs");
  r.check("the flip map preserves orbit sizes tableau by tableau", tableau_bad == 0,
          std::to_string(checked) + " tableaux");
}

void ordinal_sum_swap(const VerifyOptions&, SuiteResult& r) {
  const auto one = chain(1);
  std::uint64_t bad = 0, shape_bad = 0, count = 0;
  for (const auto& p : pure_up_to(6)) {
    ++count;
    const auto up = ordinal_sum(p, one), down = ordinal_sum(one, p);
    if (nrp_decide(up) != nrp_decide(down)) ++bad;
    const auto copy = ElementSet::from(up.size(), std::vector<Element>(p.linear_extension().begin(),
                                                                         p.linear_extension().end()));
    const auto twice = dual(dualize_autonomous(up, copy));
    if (!is_isomorphic(twice, down)) ++shape_bad;
  }
  r.check("P + 1 and 1 + P agree on NRP", bad == 0, std::to_string(count) + " posets");
  r.check("two autonomous dualizations carry P + 1 to 1 + P", shape_bad == 0);
}

void dualize_involution(const VerifyOptions&, SuiteResult& r) {
  std::uint64_t bad = 0, graph_bad = 0, pairs = 0;
  for (const auto& p : posets_up_to(7)) {
    const auto g = comparability_graph(p);
    for (const auto& a : autonomous_subsets(p)) {
      ++pairs;
      const auto d = dualize_autonomous(p, a);
      if (!(dualize_autonomous(d, a) == p)) ++bad;
      if (!(comparability_graph(d) == g)) ++graph_bad;
    }
  }
  r.check("dualizing twice is the identity", bad == 0, std::to_string(pairs) + " (poset, subset) pairs");
  r.check("dualizing keeps the comparability graph", graph_bad == 0);
}

void nrp_definition_agreement(const VerifyOptions&, SuiteResult& r) {
  std::uint64_t bad = 0, count = 0;
  std::string first;
  for (const auto& p : bounded_graded_up_to(6)) {
    ++count;
    if (nrp_check(p).is_nrp != nrp_by_rowmotion(p, p.size())) {
      ++bad;
      if (first.empty()) first = describe(p);
    }
  }
  r.check("packed-tableau verdict equals the rowmotion definition for c <= |P|", bad == 0,
          std::to_string(count) + " posets" + (first.empty() ? "" : ", first bad " + first));
}

void census_conservation(const VerifyOptions& o, SuiteResult& r) {
  CensusOptions serial, filtered, parallel;
  filtered.memory_cap = 0;
  parallel.jobs = std::max(2u, o.jobs);
  std::uint64_t bad = 0, cases = 0;
  auto suite = bounded_graded_up_to(6);
  suite.push_back(bee_hummingbird());
  suite.push_back(cube());
  for (const auto& p : suite) {
    for (std::size_t q = p.rank() + 1; q <= std::min<std::size_t>(p.size(), 8); ++q) {
      for (bool packed : {true, false}) {
        ++cases;
        const auto direct = count_increasing(p, q, packed);
        const auto a = promotion_census(p, q, packed, serial);
        const auto b = promotion_census(p, q, packed, filtered);
        const auto c = promotion_census(p, q, packed, parallel);
        if (a.weighted_total() != direct || a.orbits != b.orbits || a.orbits != c.orbits ||
            b.total_states != direct || c.total_states != direct)
          ++bad;
      }
    }
  }
  r.check("orbit sizes add up to the direct count in every walking mode", bad == 0,
          std::to_string(cases) + " censuses");
}

const std::vector<Suite> kSuites{
    {"cube-witness", "27-element orbit on (2x2)x2 at q = 7 and the failed NRP check", cube_witness},
    {"bee-hummingbird", "promotion step, 5-orbit and NRP failure on the hummingbird", bee_hummingbird_suite},
    {"n-prime-statistics", "packed orbit statistics of N' and NRP of N and W", n_prime_statistics},
    {"minuscule-nrp", "NRP for small rectangles, staircases, propellers and chains", minuscule_nrp},
    {"minuscule-nrp-extended", "Cayley-Moufang NRP and the Freudenthal packed census", minuscule_nrp_extended},
    {"doubletree", "doubletree stability, PD E PD E and radical identities", doubletree},
    {"deflation-and-equivalence", "deflation, rotation formula, coprime orbits, rowmotion equivalence",
     deflation_and_equivalence},
    {"classification", "bounded graded NRP posets on at most 9 elements", classification},
    {"empty-ideal-orbit", "empty ideal orbit has rank + 2 elements", empty_ideal_orbit},
    {"rowmotion-bijective", "rowmotion is invertible", rowmotion_bijective},
    {"promotion-bijective", "K-promotion is invertible", promotion_bijective},
    {"content-rotation", "promotion rotates the content vector", content_rotation},
    {"flip-map-orbits", "autonomous dualization preserves orbit sizes", flip_map_orbits},
    {"ordinal-sum-swap", "P + 1 versus 1 + P", ordinal_sum_swap},
    {"dualize-involution", "autonomous dualization is an involution", dualize_involution},
    {"nrp-definition-agreement", "packed reduction versus rowmotion definition", nrp_definition_agreement},
    {"census-conservation", "census walking modes agree with direct counts", census_conservation},
};

}  // namespace

const std::vector<Suite>& verification_suites() { return kSuites; }

SuiteResult run_suite(std::string_view name, const VerifyOptions& options) {
  auto it = std::find_if(kSuites.begin(), kSuites.end(), [&](const Suite& s) { return s.name == name; });
  if (it == kSuites.end()) throw InvalidArgument("unknown suite: " + std::string(name));
  SuiteResult r;
  r.suite = it->name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    it->body(options, r);
  } catch (const std::exception& e) {
    r.check("suite raised", false, e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string suite_result_to_text(const SuiteResult& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    out << (c.passed ? "pass  " : "FAIL  ") << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
  out.setf(std::ios::fixed);
  out.precision(2);
  out << r.suite << ": " << (r.passed() ? "passed" : "FAILED") << " in " << r.seconds << " s\n";
  return out.str();
}

}  // namespace posdyn
