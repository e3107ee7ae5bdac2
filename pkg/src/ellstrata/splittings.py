"""Splitting types of candidate subbundles of a fixed elliptic-curve bundle.

A rank-n' degree-d' subbundle of E = E(n,d) decomposes as a direct sum of
indecomposables E(n_j,d_j) (x) L_j.  A type can only carry nonzero maps into
E when every part satisfies n_j*d - n*d_j >= 0, which leaves finitely many
candidate multisets {(n_j,d_j)}.  Each enumerated type carries the dimension
metrics of its parameter space and hom bundle, and the distinguished
"balanced" type (gcd(n',d') equal parts) is flagged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .atiyah import end_h0, generic_sum

Part = tuple[int, int]


@dataclass(frozen=True)
class SplittingType:
    """One candidate decomposition type with its dimension metrics.

    ``parts`` is canonically sorted (rank, degree) descending.  ``eps`` marks
    the parts with n_j*d - n*d_j = 0; dim_X counts the free twist parameters;
    rk_Hom is the rank of the hom bundle into the ambient; h0_end is
    h0(End E') at generic twists.
    """

    parts: tuple[Part, ...]
    eps: tuple[int, ...]
    dim_X: int
    rk_Hom: int
    h0_end: int
    balanced: bool

    @property
    def k(self) -> int:
        return len(self.parts)


def balanced_type(nprime: int, dprime: int) -> tuple[Part, ...]:
    """gcd(n',d') copies of the reduced part (n'/h', d'/h')."""
    if nprime < 1:
        raise ValueError("subbundle rank must be >= 1")
    h = math.gcd(nprime, dprime)
    return ((nprime // h, dprime // h),) * h


def _make_type(n: int, d: int, parts: tuple[Part, ...],
               balanced_parts: tuple[Part, ...]) -> SplittingType:
    h = math.gcd(n, d)
    eps = tuple(1 if nj * d - n * dj == 0 else 0 for nj, dj in parts)
    rk_hom = 0
    for (nj, dj), e in zip(parts, eps):
        if e:
            rk_hom += min(h, math.gcd(nj, dj))
        else:
            rk_hom += nj * d - n * dj
    return SplittingType(
        parts=parts,
        eps=eps,
        dim_X=len(parts) - sum(eps),
        rk_Hom=rk_hom,
        h0_end=end_h0(generic_sum(parts)),
        balanced=parts == balanced_parts,
    )


def enumerate_types(n: int, d: int, nprime: int, dprime: int) -> list[SplittingType]:
    """All splitting types of a rank-n' degree-d' subbundle of E(n,d).

    Exactly the multisets {(n_j,d_j)} with n_j >= 1, sum n_j = n', sum d_j =
    d' and n_j*d - n*d_j >= 0 for every part.  Parts are generated in
    canonical descending order, so each multiset appears once.  The list is
    empty when no type satisfies the constraints and is deterministically
    ordered.
    """
    if not 0 < nprime < n:
        raise ValueError("need 0 < nprime < n")

    found: list[tuple[Part, ...]] = []

    def extend(prefix: list[Part], rank_left: int, deg_left: int) -> None:
        if rank_left == 0:
            if deg_left == 0:
                found.append(tuple(prefix))
            return
        rank_cap = min(rank_left, prefix[-1][0]) if prefix else rank_left
        for nj in range(rank_cap, 0, -1):
            hi = (nj * d) // n
            if prefix and prefix[-1][0] == nj:
                hi = min(hi, prefix[-1][1])
            rest = rank_left - nj
            if rest == 0:
                lo = deg_left
            else:
                # remaining parts can carry at most floor(rest*d/n) in total
                lo = deg_left - (rest * d) // n
            for dj in range(hi, lo - 1, -1):
                prefix.append((nj, dj))
                extend(prefix, rest, deg_left - dj)
                prefix.pop()

    extend([], nprime, dprime)
    bal = tuple(sorted(balanced_type(nprime, dprime), reverse=True))
    return [_make_type(n, d, parts, bal) for parts in sorted(found, reverse=True)]


def type_bound_check(t: SplittingType, n: int, d: int, nprime: int,
                     dprime: int) -> tuple[int, int, bool]:
    """Evaluate dim_X + rk_Hom <= (n'd - nd') + h0_end for one type.

    Returns (lhs, rhs, equality).  A violated bound is an internal invariant
    failure, not a caller error.
    """
    if sum(nj for nj, _ in t.parts) != nprime or sum(dj for _, dj in t.parts) != dprime:
        raise ValueError("type does not split the requested (nprime, dprime)")
    lhs = t.dim_X + t.rk_Hom
    rhs = (nprime * d - n * dprime) + t.h0_end
    if lhs > rhs:
        raise AssertionError(
            f"dimension bound violated for parts {t.parts}: {lhs} > {rhs}"
        )
    return lhs, rhs, lhs == rhs
