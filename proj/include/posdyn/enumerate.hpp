#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "posdyn/poset.hpp"
#include "posdyn/tableau.hpp"

namespace posdyn {

// Return false to stop the enumeration.
using LabelVisitor = std::function<bool(std::span<const Label>)>;

/// Every increasing labeling P -> [q] exactly once, by backtracking over the
/// linear extension with labels tried in increasing order. With
/// `packed_only`, only surjective labelings are produced. Returns false when
/// the visitor stopped early.
bool for_each_increasing(const Poset& p, std::size_t q, bool packed_only, const LabelVisitor& visit);

std::uint64_t count_increasing(const Poset& p, std::size_t q, bool packed_only);

/// Materialized form of for_each_increasing. Throws CapExceeded past `cap`.
std::vector<IncreasingTableau> enumerate_increasing(const Poset& p, std::size_t q, bool packed_only,
                                                    std::size_t cap = 10'000'000);

/// One representative of each isomorphism class of n-element posets, in
/// canonical labeling, sorted by canonical form. Brute force; n <= 7.
std::vector<Poset> enumerate_posets(std::size_t n);

/// Posets whose maximal chains all have the same length, one per isomorphism
/// class, sorted by canonical form. Built level by level.
std::vector<Poset> enumerate_pure(std::size_t n, bool bounded);

}  // namespace posdyn
