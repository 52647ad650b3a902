"""Finitely generated abelian groups in invariant-factor form, and cokernels."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm, prod
from typing import Iterable, Sequence

from .graph import Digraph, require_eulerian_connected, reduced_laplacian
from .linalg import IntMatrix, smith_normal_form

__all__ = [
    "AbelianGroup",
    "cokernel",
    "critical_group",
    "order",
    "direct_sum_normal_form",
    "element_order_in_cokernel",
    "quotient_by_all_ones",
]


@dataclass(frozen=True)
class AbelianGroup:
    """``Z/d1 + ... + Z/dt + Z^free_rank`` with ``1 < d1 | d2 | ... | dt``."""

    torsion: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        t = tuple(int(d) for d in self.torsion)
        object.__setattr__(self, "torsion", t)
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        for d in t:
            if d < 2:
                raise ValueError("invariant factors must be >= 2, got %d" % d)
        for a, b in zip(t, t[1:]):
            if b % a:
                raise ValueError("invariant factors %d, %d break the divisibility chain" % (a, b))

    @classmethod
    def cyclic(cls, m: int) -> AbelianGroup:
        if m < 0:
            raise ValueError("cyclic group order must be nonnegative")
        if m == 0:
            return cls((), 1)
        return cls((m,) if m > 1 else ())

    @classmethod
    def from_factors(cls, factors: Iterable[int], free_rank: int = 0) -> AbelianGroup:
        """Normalize an arbitrary list of cyclic orders (0 meaning ``Z``)."""
        factors = list(factors)
        free = free_rank + sum(1 for d in factors if d == 0)
        return direct_sum_normal_form(
            [cls.cyclic(d) for d in factors if d != 0] + [cls((), free)]
        )

    def is_finite(self) -> bool:
        return self.free_rank == 0

    def is_trivial(self) -> bool:
        return not self.torsion and not self.free_rank

    def order(self) -> int:
        return order(self)

    def __str__(self) -> str:
        if self.is_trivial():
            return "trivial group"
        parts = ["ℤ/%d" % d for d in self.torsion]
        if self.free_rank == 1:
            parts.append("ℤ")
        elif self.free_rank > 1:
            parts.append("ℤ^%d" % self.free_rank)
        return " ⊕ ".join(parts)


def order(g: AbelianGroup) -> int:
    if g.free_rank:
        raise ValueError("group %s is infinite" % g)
    return prod(g.torsion)


def cokernel(a: IntMatrix) -> AbelianGroup:
    """``Z^rows / a Z^cols``."""
    d = smith_normal_form(a).diag
    rank = sum(1 for x in d if x)
    return AbelianGroup(tuple(x for x in d if x > 1), a.rows - rank)


def critical_group(g: Digraph, sink: int | None = None) -> AbelianGroup:
    """Critical group as ``cok`` of the reduced Laplacian; sink defaults to ``k-1``."""
    require_eulerian_connected(g)
    if sink is None:
        sink = g.k - 1
    return cokernel(reduced_laplacian(g, sink))


def direct_sum_normal_form(groups: Sequence[AbelianGroup]) -> AbelianGroup:
    factors = [d for grp in groups for d in grp.torsion]
    free = sum(grp.free_rank for grp in groups)
    if not factors:
        return AbelianGroup((), free)
    t = cokernel(IntMatrix.diagonal(factors))
    return AbelianGroup(t.torsion, free)


def element_order_in_cokernel(a: IntMatrix, v: Sequence[int]) -> int:
    """Order of the class of ``v`` in ``cok(a)`` for square nonsingular ``a``."""
    if not a.is_square():
        raise ValueError("expected a square matrix, got %dx%d" % a.shape)
    if len(v) != a.rows:
        raise ValueError("vector of length %d, matrix has %d rows" % (len(v), a.rows))
    snf = smith_normal_form(a)
    d = snf.diag
    if any(x == 0 for x in d):
        raise ValueError("matrix is singular; element orders need a full-rank matrix")
    w = snf.U @ v
    return lcm(1, *(di // gcd(di, wi) for di, wi in zip(d, w)))


def quotient_by_all_ones(a: IntMatrix) -> AbelianGroup:
    """``cok(a)`` modulo the class of the all-ones vector."""
    return cokernel(a.hstack(IntMatrix.ones(a.rows, 1)))
