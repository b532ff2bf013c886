"""Brute-force exact Kronecker coefficients from character data.

This is the ground-truth side of the library: a coefficient is the class
sum (1/n!) * sum_rho |class(rho)| * chi_lam(rho) * chi_mu(rho) * chi_nu(rho),
computed as one integer sum divided once by n!.  Exact divisibility of that
sum is asserted on every call; a failure would mean the character engine is
broken, so it raises instead of returning garbage.

Given a built character table the functions here are pure; per-constituent
computations are independent and deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .characters import character_table
from .partitions import (
    Partition,
    check_partition,
    enumerate_partitions,
    hook_dimension,
)

__all__ = [
    "Decomposition",
    "kronecker",
    "tensor_decompose",
    "tensor_decompose_bounded",
    "rectangle_invariant_multiplicity",
]


@dataclass(frozen=True)
class Decomposition:
    """A finite sum of irreducibles: partition of ``n`` -> multiplicity >= 1.

    Absent keys mean multiplicity zero.  Entries iterate in decreasing
    lexicographic order of partitions, the documented serialization order.
    """

    n: int
    entries: dict[Partition, int] = field(default_factory=dict)

    def multiplicity(self, nu: Partition) -> int:
        return self.entries.get(check_partition(nu), 0)

    def sorted_entries(self) -> list[tuple[Partition, int]]:
        return sorted(self.entries.items(), reverse=True)

    def restrict_length(self, max_length: int) -> "Decomposition":
        """Sub-sum over constituents with at most ``max_length`` parts."""
        kept = {nu: m for nu, m in self.entries.items() if len(nu) <= max_length}
        return Decomposition(self.n, kept)

    def dimension_sum(self) -> int:
        """Total dimension: sum of multiplicity * irreducible dimension."""
        return sum(m * hook_dimension(nu) for nu, m in self.entries.items())


def _common_size(*parts: Partition) -> int:
    sizes = {sum(p) for p in parts}
    if len(sizes) != 1:
        raise ValueError(f"partitions of unequal sizes: {sorted(sizes)}")
    return sizes.pop()


def kronecker(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Multiplicity of the irreducible ``nu`` in the tensor product lam (x) mu."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    nu = check_partition(nu)
    n = _common_size(lam, mu, nu)
    table = character_table(n)
    total = sum(
        size * a * b * c
        for size, a, b, c in zip(
            table.class_sizes, table.rows[lam], table.rows[mu], table.rows[nu]
        )
    )
    mult, rem = divmod(total, table.group_order)
    if rem or mult < 0:
        raise RuntimeError(
            f"class sum {total} is not a nonnegative multiple of {n}!, "
            f"character data is inconsistent"
        )
    return mult


def tensor_decompose(lam: Partition, mu: Partition) -> Decomposition:
    """Full decomposition of lam (x) mu into irreducibles with multiplicities."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    n = _common_size(lam, mu)
    entries: dict[Partition, int] = {}
    for nu in enumerate_partitions(n):
        mult = kronecker(lam, mu, nu)
        if mult:
            entries[nu] = mult
    return Decomposition(n, entries)


def tensor_decompose_bounded(lam: Partition, mu: Partition, max_length: int) -> Decomposition:
    """Partial decomposition keeping constituents with at most ``max_length`` parts.

    Candidates are filtered by length before any character work, so small
    bounds skip most of the table.
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    if max_length < 1:
        raise ValueError(f"length bound must be positive, got {max_length}")
    n = _common_size(lam, mu)
    entries: dict[Partition, int] = {}
    for nu in enumerate_partitions(n, max_length):
        mult = kronecker(lam, mu, nu)
        if mult:
            entries[nu] = mult
    return Decomposition(n, entries)


def _rectangle(height: int, width: int) -> Partition:
    return (width,) * height if height and width else ()


def rectangle_invariant_multiplicity(u: int, v: int, n: int, lam: Partition) -> int:
    """Multiplicity of the weight-``lam`` Schur module among degree n*u*v invariants.

    For spaces of dimensions d*u and d*v tensored with a third factor, the
    invariants of the two special linear groups decompose with multiplicity
    kronecker((n*v)^u, (n*u)^v, lam); this wraps that rectangular coefficient.
    """
    if u < 1 or v < 1:
        raise ValueError(f"rectangle sides must be positive, got u={u}, v={v}")
    if n < 0:
        raise ValueError(f"degree index must be nonnegative, got {n}")
    lam = check_partition(lam)
    if sum(lam) != n * u * v:
        raise ValueError(f"|lam| = {sum(lam)} but the invariant degree is {n * u * v}")
    return kronecker(_rectangle(u, n * v), _rectangle(v, n * u), lam)
