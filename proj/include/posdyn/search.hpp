#pragma once

#include <functional>
#include <string>
#include <vector>

#include "posdyn/canonical.hpp"
#include "posdyn/poset.hpp"

namespace posdyn {

enum class GradingConvention {
  rank_function,         // r = 0 on minimal elements, +1 along covers
  equal_maximal_chains,  // every maximal chain has the same length
};

std::string to_string(GradingConvention g);
// Accepts "rank-function" and "equal-maximal-chains".
GradingConvention parse_grading_convention(std::string_view s);

/// Bounded graded posets on n elements, one per isomorphism class, in
/// canonical labeling and sorted by canonical form. Generated from level
/// profiles (1, a_1, ..., a_k, 1) with every interior element covering and
/// covered by something on the neighbouring levels. Under
/// equal_maximal_chains the same candidates are re-filtered through
/// has_equal_maximal_chains. n <= 10.
std::vector<Poset> enumerate_bounded_graded(std::size_t n,
                                            GradingConvention g = GradingConvention::rank_function);

/// Every poset reachable from p by repeatedly dualizing autonomous subsets
/// (the whole set included), one per isomorphism class, sorted by canonical
/// form.
std::vector<Poset> autonomous_dualization_class(const Poset& p);

/// "minuscule: rect:AxB" (chains are rect:1xN), "minuscule: staircase:N",
/// "minuscule: propeller:K", "minuscule: cayley-moufang",
/// "minuscule: freudenthal", "P_{a,b}", "N", "N-family", "W", "dual(W)",
/// "W-family" or "other".
std::string family_identify(const Poset& p);

struct Survivor {
  CanonicalForm form;
  std::string family;
};

struct SearchLevel {
  std::size_t n = 0;
  std::size_t examined = 0;
  std::vector<Survivor> survivors;  // sorted by canonical form
};

struct SearchReport {
  std::size_t max_n = 0;
  GradingConvention convention = GradingConvention::rank_function;
  std::vector<SearchLevel> levels;
};

struct SearchOptions {
  unsigned jobs = 1;
  GradingConvention convention = GradingConvention::rank_function;
  // JSON progress snapshot written after every chunk of candidates; empty
  // disables checkpointing.
  std::string checkpoint_path;
  bool resume = false;
  std::size_t chunk = 512;
  std::function<void(const std::string&)> progress;
};

/// Filters enumerate_bounded_graded(n), n = 1 .. max_n, through the NRP
/// decision. Output does not depend on the number of jobs.
SearchReport nrp_search(std::size_t max_n, const SearchOptions& options = {});

}  // namespace posdyn
