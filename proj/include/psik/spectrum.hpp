#pragma once

// Order spectra: how many elements of each order a group has. Three
// independent computation routes exist on purpose — closed forms per family,
// lcm-convolution of factor spectra, and definitional brute force — so each
// can audit the others.

#include <map>

#include "psik/arith.hpp"
#include "psik/group.hpp"
#include "psik/partition.hpp"

namespace psik {

/// Map from element order d to the number of elements of that order.
struct OrderSpectrum {
    std::map<Natural, Natural> counts;
    Natural group_order;

    Natural count(const Natural& d) const {
        auto it = counts.find(d);
        return it == counts.end() ? Natural(0) : it->second;
    }

    /// Largest element order (the exponent, for the groups built here).
    const Natural& max_order() const { return counts.rbegin()->first; }

    /// Sum of counts equals the group order, counts[1] = 1, and every order
    /// divides the group order. Throws internal_error on violation.
    void validate() const;

    bool operator==(const OrderSpectrum&) const = default;
};

/// counts[d] = phi(d) for every divisor d of n.
OrderSpectrum spectrum_cyclic(const Natural& n);

/// Spectrum of Z_{p^{r_1}} x ... x Z_{p^{r_t}} via the kernel-size counting
/// identity #{x : x^(p^j) = e} = p^(sum_i min(r_i, j)).
OrderSpectrum spectrum_abelian_p(const Natural& p, const Partition& lambda);

/// Spectrum of a direct product: counts[d] = sum over lcm(d1,d2) = d of
/// s1[d1] * s2[d2].
OrderSpectrum spectrum_product(const OrderSpectrum& s1, const OrderSpectrum& s2);

/// Dihedral group of order 2m: the cyclic spectrum of m plus m reflections
/// of order 2.
OrderSpectrum spectrum_dihedral(const Natural& m);

/// Dicyclic group of order 4m: the cyclic spectrum of 2m plus 2m elements of
/// order 4.
OrderSpectrum spectrum_dicyclic(const Natural& m);

/// Z_{p^r} x| Z_m with kernel Z: pairs (u, x) have order o(u)o(x) for x in Z
/// and order o(x), repeated |P| times, for x outside Z.
OrderSpectrum spectrum_semidirect(const SemidirectSpec& spec);

/// Definitional oracle over an explicit table: o(g) by iterated lookup.
OrderSpectrum spectrum_bruteforce(const CayleyTable& table);

/// Family dispatcher (closed forms; products fold spectrum_product).
OrderSpectrum spectrum(const GroupSpec& spec);

/// Definitional oracle without materializing a table: element orders by
/// iterated multiplication in the element-level realization.
OrderSpectrum spectrum_direct(const GroupSpec& spec);

} // namespace psik
