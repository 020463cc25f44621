#pragma once

#include <vector>

#include "posdyn/census.hpp"
#include "posdyn/poset.hpp"
#include "posdyn/tableau.hpp"

namespace posdyn {

struct NrpWitness {
  std::size_t q = 0;
  IncreasingTableau representative;  // least member of the orbit, packed
  std::size_t orbit_size = 0;
};

struct NrpVerdict {
  bool is_nrp = true;
  // The examined range of heights was empty (chains): true for want of any
  // packed tableau with c > 0.
  bool vacuous = false;
  std::size_t q_min = 0;
  std::size_t q_max = 0;  // empty range when q_min > q_max
  std::vector<NrpWitness> witnesses;  // sorted by (q, labels)
};

struct NrpOptions {
  // Stop after the first height that yields a witness.
  bool early_exit = false;
  CensusOptions census;
};

/// For q = rank + 2 .. |P|, walks the packed K-promotion orbits of height q
/// and records every orbit whose size is coprime to q. Throws NotGraded.
NrpVerdict nrp_check(const Poset& p, const NrpOptions& options = {});

/// Same decision, stopping at the first coprime orbit found.
bool nrp_decide(const Poset& p, const CensusOptions& options = {});

/// Recomputes the orbit size and the gcd from the stored representative.
bool verify_witness(const Poset& p, const NrpWitness& w);

/// The definition itself: no rowmotion orbit of J(P x c) has size coprime to
/// rank + c + 1, checked for c = 1 .. max_c.
bool nrp_by_rowmotion(const Poset& p, std::size_t max_c);

}  // namespace posdyn
