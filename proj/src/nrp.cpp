#include "posdyn/nrp.hpp"

#include <algorithm>
#include <numeric>

#include "posdyn/error.hpp"
#include "posdyn/orbit.hpp"

namespace posdyn {

namespace {

void require_graded(const Poset& p) {
  if (!p.is_graded()) throw NotGraded("NRP check requires a graded poset");
}

}  // namespace

NrpVerdict nrp_check(const Poset& p, const NrpOptions& options) {
  require_graded(p);
  NrpVerdict v;
  v.q_min = p.rank() + 2;
  v.q_max = p.size();
  v.vacuous = v.q_min > v.q_max;
  for (std::size_t q = v.q_min; q <= v.q_max; ++q) {
    const auto before = v.witnesses.size();
    for_each_promotion_orbit(p, q, true, options.census,
                             [&](std::span<const Label> rep, std::size_t size) {
                               if (std::gcd(size, q) == 1)
                                 v.witnesses.push_back(
                                     {q, make_unchecked(p, q, {rep.begin(), rep.end()}), size});
                               return true;
                             });
    if (options.early_exit && v.witnesses.size() > before) break;
  }
  std::sort(v.witnesses.begin(), v.witnesses.end(), [](const NrpWitness& a, const NrpWitness& b) {
    if (a.q != b.q) return a.q < b.q;
    return a.representative < b.representative;
  });
  v.is_nrp = v.witnesses.empty();
  return v;
}

bool nrp_decide(const Poset& p, const CensusOptions& options) {
  require_graded(p);
  for (std::size_t q = p.rank() + 2; q <= p.size(); ++q) {
    const bool clean = for_each_promotion_orbit(
        p, q, true, options, [&](std::span<const Label>, std::size_t size) { return std::gcd(size, q) != 1; });
    if (!clean) return false;
  }
  return true;
}

bool verify_witness(const Poset& p, const NrpWitness& w) {
  const auto& t = w.representative;
  if (!(t.poset() == p) || t.height() != w.q) return false;
  if (!is_increasing(p, w.q, t.labels()) || !t.is_packed()) return false;
  const auto size = promotion_orbit_size(p, w.q, t.labels());
  return size == w.orbit_size && std::gcd(size, w.q) == 1;
}

bool nrp_by_rowmotion(const Poset& p, std::size_t max_c) {
  require_graded(p);
  for (std::size_t c = 1; c <= max_c; ++c) {
    const auto census = rowmotion_census(p, c);
    const auto modulus = p.rank() + c + 1;
    for (const auto& [size, count] : census.orbits)
      if (std::gcd(size, modulus) == 1) return false;
  }
  return true;
}

}  // namespace posdyn
