#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace symforge::detail {

/// One member of a set family: a multiset of ground elements plus an opaque
/// label that must be preserved (a coefficient, a non-renamed cofactor, ...).
struct FamilyItem {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> elements;  // (element, multiplicity)
    std::uint32_t label = 0;
};

/// Searches for a bijection sigma: ground_a -> ground_b that maps the family
/// `items_a` exactly onto `items_b`. Items in each family must be distinct.
///
/// Exhaustive backtracking over ground_a in ascending order with candidates
/// in ascending order, so the first hit is the lexicographically least
/// bijection. Pruned by per-element occurrence signatures, pairwise
/// co-occurrence counts, and checking every item as soon as all its
/// elements are assigned.
std::optional<std::map<std::uint32_t, std::uint32_t>> find_family_bijection(
    const std::vector<std::uint32_t>& ground_a, const std::vector<FamilyItem>& items_a,
    const std::vector<std::uint32_t>& ground_b, const std::vector<FamilyItem>& items_b);

}  // namespace symforge::detail
