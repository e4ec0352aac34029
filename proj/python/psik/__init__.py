"""Exact psi_k computations for finite groups.

psi_k(G) is the sum over all group elements of o(g)^k. Groups are given in
the CLI's group-spec syntax: C36, D18 (order 36), Dic3, A[2:1,2;3:1],
SD(7^1,3,2), products with '*', or file:<cayley.json>.
"""

from ._core import (
    UsageError,
    ValidationError,
    ResourceError,
    InternalError,
    canonical,
    compute,
    euler_phi,
    extremal,
    factorize,
    find_reversals,
    is_cyclic,
    max_k,
    order,
    psi,
    set_max_k,
    spectrum,
    theorems,
    verify,
    worst_ratio,
)

__all__ = [
    "UsageError",
    "ValidationError",
    "ResourceError",
    "InternalError",
    "canonical",
    "compute",
    "euler_phi",
    "extremal",
    "factorize",
    "find_reversals",
    "is_cyclic",
    "max_k",
    "order",
    "psi",
    "set_max_k",
    "spectrum",
    "theorems",
    "verify",
    "worst_ratio",
]
