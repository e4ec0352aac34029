#pragma once

// Enumeration of every constructible family instance of a given order:
// abelian types from partition products over the factorization, dihedral and
// dicyclic groups, and cyclic-by-cyclic semidirect products with the action
// deduplicated by the subgroup it generates in the unit group.

#include <cstdint>
#include <vector>

#include "psik/group.hpp"

namespace psik {

struct FamilyOptions {
    bool abelian = true;
    bool dihedral = true;
    bool dicyclic = true;
    bool semidirect = true;
};

/// All family instances of order n in deterministic order: Cyclic(n) first
/// (when included), then non-cyclic abelian types, dihedral, dicyclic, then
/// semidirect instances by (p, d). Structurally cyclic duplicates (D_1,
/// trivial actions, single-part abelian types) are never emitted.
std::vector<GroupSpec> families_of_order(std::uint64_t n, const FamilyOptions& options = {},
                                         bool include_cyclic = true);

/// All valid SemidirectSpec instances with p^r m = n, without action
/// deduplication: every a in [1, p^r) with a^m = 1 (mod p^r), including the
/// trivial action a = 1.
std::vector<SemidirectSpec> all_semidirect_of_order(std::uint64_t n);

/// One representative per action subgroup: a of multiplicative order d for
/// each divisor d >= 2 of gcd(m, p-1).
std::vector<SemidirectSpec> semidirect_reps_of_order(std::uint64_t n);

} // namespace psik
