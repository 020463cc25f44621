#pragma once

#include <functional>
#include <vector>

#include "posdyn/error.hpp"
#include "posdyn/poset.hpp"
#include "posdyn/tableau.hpp"

namespace posdyn {

inline constexpr std::size_t kDefaultOrbitCap = 100'000'000;

template <class State>
struct Orbit {
  State representative;  // least member
  std::size_t size = 0;
  std::vector<State> cycle;  // seed first, filled only on request
};

/// Walks seed, step(seed), ... until it returns to seed. Throws CapExceeded
/// after `cap` steps.
template <class State, class Step, class Less = std::less<State>>
Orbit<State> orbit(const State& seed, Step&& step, bool keep_cycle = false,
                   std::size_t cap = kDefaultOrbitCap, Less less = {}) {
  Orbit<State> out{seed, 0, {}};
  State cur = seed;
  do {
    if (keep_cycle) out.cycle.push_back(cur);
    if (less(cur, out.representative)) out.representative = cur;
    if (++out.size > cap) throw CapExceeded("orbit exceeds " + std::to_string(cap) + " steps");
    cur = step(cur);
  } while (!(cur == seed));
  return out;
}

Orbit<IncreasingTableau> promotion_orbit(const IncreasingTableau& seed, bool keep_cycle = false,
                                         std::size_t cap = kDefaultOrbitCap);
Orbit<OrderIdeal> rowmotion_orbit(const OrderIdeal& seed, bool keep_cycle = false,
                                  std::size_t cap = kDefaultOrbitCap);

// Orbit size of a raw label vector, without materializing tableaux.
std::size_t promotion_orbit_size(const Poset& p, std::size_t q, std::span<const Label> labels,
                                 std::size_t cap = kDefaultOrbitCap);

}  // namespace posdyn
