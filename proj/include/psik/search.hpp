#pragma once

// Scans over the constructible families: psi/psi_k order reversals between
// same-order groups, extremal psi_k values per order, and worst-case ratios
// against the non-cyclic upper bound.

#include <cstdint>
#include <vector>

#include "psik/psi.hpp"
#include "psik/search_families.hpp"
#include "psik/verify.hpp"

namespace psik {

/// Pair of same-order groups whose psi comparison flips between k = 1 and
/// k = k_high: psi(g1) < psi(g2) but psi_{k_high}(g1) > psi_{k_high}(g2).
struct ReversalWitness {
    GroupSpec g1, g2;
    unsigned k_low = 1;
    unsigned k_high = 2;
    Natural psi_low_g1, psi_low_g2;
    Natural psi_high_g1, psi_high_g2;
};

/// All unordered family pairs of order n that reverse between k = 1 and some
/// k <= k_max, oriented by the k = 1 comparison, each pair reported once
/// with the largest reversing k.
std::vector<ReversalWitness> find_reversals(std::uint64_t n, unsigned k_max,
                                            const FamilyOptions& families = {});

struct ExtremalEntry {
    GroupSpec spec;
    Natural value;
};

/// Instances of order n ranked by psi_k descending (ties by spec order).
struct ExtremalResult {
    std::vector<ExtremalEntry> ranked;
    const ExtremalEntry& argmax() const { return ranked.front(); }
    const ExtremalEntry& argmin() const { return ranked.back(); }
    /// Strict argmax/argmin: no other instance attains the same value.
    bool max_strict() const;
    bool min_strict() const;
};

ExtremalResult extremal_over_order(std::uint64_t n, unsigned k,
                                   const FamilyOptions& families = {},
                                   bool include_cyclic = true);

/// One scanned ratio psi_k(G) / psi_k(Z_n), kept exact as a pair.
struct RatioRecord {
    GroupSpec spec;
    unsigned k = 1;
    Natural psi_g;
    Natural psi_zn;
    bool at_bound = false; // equality with the main-bound coefficients
};

struct RatioScanResult {
    std::vector<RatioRecord> top;          // best ratios, descending
    std::vector<BoundReport> violations;   // nonempty only if the bound failed
};

/// Scan all non-cyclic instances with order <= n_max, ranking ratios by
/// cross-multiplied comparison; ties break toward smaller order, then spec
/// order. Any ratio exceeding the bound is returned as a VIOLATED report.
RatioScanResult worst_ratio_scan(std::uint64_t n_max, unsigned k, std::size_t top_n = 10,
                                 const FamilyOptions& families = {}, unsigned workers = 0);

} // namespace psik
