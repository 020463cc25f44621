#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "posdyn/poset.hpp"
#include "posdyn/tableau.hpp"

namespace posdyn {

struct Fixture {
  std::string name;
  Poset poset;
  std::string provenance;
};

// Ten-element d-complete poset, graded of rank 4, not bounded.
Poset bee_hummingbird();
// 1 + (3-antichain) + 1.
Poset n_prime();
// n_prime() + chain 4.
Poset n_poset();
// Nine-element bounded poset with NRP rowmotion that is neither minuscule nor
// an ordinal sum.
Poset w_poset();
// (2 x 2) x 2.
Poset cube();
// a + (2 x 2) + b, with a, b >= 0.
Poset p_ab(std::size_t a, std::size_t b);

// Height-8 tableau on the bee hummingbird and its K-promotion.
IncreasingTableau hummingbird_step_input();
IncreasingTableau hummingbird_step_output();
// Height-7 tableau on the cube whose orbit has 27 elements.
IncreasingTableau cube_witness_tableau();

/// Named fixtures: `bee-hummingbird`, `n-prime`, `n`, `w`, `w-dual`, `cube`,
/// plus the parameterized `chain:N`, `antichain:N`, `p:A,B` and every minuscule
/// family name (`rect:AxB`, `staircase:N`, `propeller:K`, `cayley-moufang`,
/// `freudenthal`).
std::optional<Fixture> find_fixture(std::string_view name);
std::vector<std::string> fixture_names();

}  // namespace posdyn
