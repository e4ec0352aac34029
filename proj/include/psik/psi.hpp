#pragma once

// psi_k evaluators: the definitional sum over a spectrum, the closed forms
// for cyclic prime-power and homogeneous abelian p-groups, two independent
// recursions for general abelian p-groups, and a dispatching front door that
// records which route produced the value.

#include <optional>
#include <string>

#include "psik/group.hpp"
#include "psik/spectrum.hpp"

namespace psik {

/// Upper limit on k accepted by the evaluators (psi_k bit length grows
/// linearly in k; unbounded k is a denial-of-service vector in the CLI and
/// service paths). Default 64.
unsigned max_k();
void set_max_k(unsigned k);

/// When enabled, psi() re-derives every value through the spectrum route and
/// throws internal_error on disagreement. Meant for tests and audits.
bool cross_check_enabled();
void set_cross_check(bool enabled);

struct PsiValue {
    Natural value;
    unsigned k = 1;
    Natural group_order;
    std::string route;
};

/// sum over d of counts[d] * d^k. Requires 1 <= k <= max_k().
Natural psi_from_spectrum(const OrderSpectrum& s, unsigned k);

/// Cyclic group of order p^r:
/// (p^(kr+k+r+1) - p^(kr+k+r) + p^k - 1) / (p^(k+1) - 1); r = 0 gives 1.
/// The division is performed exactly and asserted remainder-free.
Natural psi_cyclic_prime_power(const Natural& p, unsigned r, unsigned k);

/// s-fold product of Z_{p^r}:
/// (p^(sr+s+rk+k) - p^(sr+kr+k) + p^k - 1) / (p^(s+k) - 1).
Natural psi_homogeneous(const Natural& p, unsigned r, unsigned s, unsigned k);

/// Peel-the-smallest-part recurrence (memoized):
/// psi_k(lambda) = psi_k(hom(r1, t)) + p^r1 (psi_k(lambda minus r1) - psi_k(hom(r1, t-1))).
Natural psi_abelian_recurrence(const Natural& p, const Partition& lambda, unsigned k);

/// Saha's recursion on G = Z_{p^r} x H with exp(H) >= p^r, with N_j taken
/// from the spectrum of H so the two abelian recursions stay independent.
Natural psi_abelian_saha(const Natural& p, const Partition& lambda, unsigned k);

/// psi_k(Z_n) as the product of prime-power closed forms.
Natural psi_cyclic(const Natural& n, unsigned k);

/// Product of factor psi values, valid only when factor orders are pairwise
/// coprime; nullopt otherwise (caller falls back to the spectrum route).
std::optional<Natural> psi_multiplicative(const GroupSpec& spec, unsigned k);

/// Route preference: closed form / multiplicative, then spectrum
/// convolution, then Cayley brute force. The chosen route is recorded.
PsiValue psi(const GroupSpec& spec, unsigned k);

} // namespace psik
