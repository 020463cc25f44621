#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>

#include "posdyn/orbit.hpp"
#include "posdyn/poset.hpp"
#include "posdyn/tableau.hpp"

namespace posdyn {

enum class CensusKind { promotion, rowmotion };

/// Multiset of orbit sizes. `parameter` is q for promotion and c for rowmotion.
struct Census {
  Poset poset;
  CensusKind kind = CensusKind::promotion;
  std::size_t parameter = 0;
  bool packed_only = false;
  std::map<std::size_t, std::uint64_t> orbits;  // size -> number of orbits
  std::uint64_t total_states = 0;

  std::uint64_t orbit_count() const;
  // Sum of size * count; equals total_states for a consistent census.
  std::uint64_t weighted_total() const;
  bool has_orbit_of_size(std::size_t k) const { return orbits.count(k) != 0; }
};

struct CensusOptions {
  unsigned jobs = 1;
  // States kept in the visited set before switching to seed filtering.
  std::size_t memory_cap = 20'000'000;
  std::size_t orbit_cap = kDefaultOrbitCap;
};

/// Called once per orbit with its least member and size. Calls are
/// serialized, but with jobs > 1 their order is unspecified. Return false to
/// stop the walk.
using OrbitVisitor = std::function<bool(std::span<const Label> representative, std::size_t size)>;

/// Walks every K-promotion orbit of Inc^q(P) (or its packed part). With one
/// job, orbits are marked in a visited set until `memory_cap` states, then
/// only seeds that are the least member of their orbit are counted. With
/// several jobs every worker re-enumerates the seeds and takes its own
/// round-robin share, counting by least member. Packed walks check that every
/// member stays packed and throw InternalError otherwise. Returns false when
/// the visitor stopped early.
bool for_each_promotion_orbit(const Poset& p, std::size_t q, bool packed_only,
                              const CensusOptions& options, const OrbitVisitor& visit);

Census promotion_census(const Poset& p, std::size_t q, bool packed_only,
                        const CensusOptions& options = {});

/// Rowmotion on J(P x c). Throws CapExceeded past `ideal_cap` ideals.
Census rowmotion_census(const Poset& p, std::size_t c, std::size_t ideal_cap = kDefaultIdealCap);

}  // namespace posdyn
