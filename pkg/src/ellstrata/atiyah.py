"""Exact calculus of indecomposable vector bundles on an elliptic curve.

Every indecomposable bundle on an elliptic curve C is E(n,d) (x) L, where
E(n,d) is the canonical indecomposable bundle of rank n and degree d and L
is a degree-zero line bundle.  The degree-zero Picard group is modelled
symbolically: a free abelian group on named "generic" generators plus an
exact (Q/Z)^2 torsion part.  The only questions the calculus ever asks of a
twist are "is it the identity?", "are two free parts equal?" and "is the
difference torsion of order dividing m?", all of which are decidable in this
model.  Fresh generator symbols stand for genuinely generic points of Pic0.

All values are exact: integers and `fractions.Fraction`.  Everything here is
immutable and side-effect free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping


def _reduce_mod1(x: Fraction) -> Fraction:
    return Fraction(x.numerator % x.denominator, x.denominator)


@dataclass(frozen=True)
class TwistClass:
    """A degree-zero line-bundle class: generic free part + exact torsion part.

    ``free`` maps generator symbols to nonzero integer exponents; ``torsion``
    is a pair of reduced fractions in [0,1) representing an element of
    (Q/Z)^2.  The class is an additive abelian group element.
    """

    free: tuple[tuple[str, int], ...] = ()
    torsion: tuple[Fraction, Fraction] = (Fraction(0), Fraction(0))

    def __post_init__(self) -> None:
        cleaned = tuple(sorted((s, int(c)) for s, c in self.free if c != 0))
        if any(not s for s, _ in cleaned):
            raise ValueError("empty generator symbol")
        if len({s for s, _ in cleaned}) != len(cleaned):
            raise ValueError("repeated generator symbol")
        object.__setattr__(self, "free", cleaned)
        a, b = self.torsion
        object.__setattr__(
            self, "torsion", (_reduce_mod1(Fraction(a)), _reduce_mod1(Fraction(b)))
        )

    @staticmethod
    def identity() -> "TwistClass":
        return TwistClass()

    @staticmethod
    def generic(symbol: str) -> "TwistClass":
        """A fresh generic point of Pic0, named by ``symbol``."""
        return TwistClass(free=((symbol, 1),))

    @staticmethod
    def of_torsion(a: Fraction | int, b: Fraction | int = 0) -> "TwistClass":
        return TwistClass(torsion=(Fraction(a), Fraction(b)))

    def __add__(self, other: "TwistClass") -> "TwistClass":
        coeffs: dict[str, int] = dict(self.free)
        for s, c in other.free:
            coeffs[s] = coeffs.get(s, 0) + c
        return TwistClass(
            free=tuple(coeffs.items()),
            torsion=(self.torsion[0] + other.torsion[0],
                     self.torsion[1] + other.torsion[1]),
        )

    def __neg__(self) -> "TwistClass":
        return TwistClass(
            free=tuple((s, -c) for s, c in self.free),
            torsion=(-self.torsion[0], -self.torsion[1]),
        )

    def __sub__(self, other: "TwistClass") -> "TwistClass":
        return self + (-other)

    def is_identity(self) -> bool:
        return not self.free and self.torsion == (0, 0)

    def is_torsion_of_order_dividing(self, m: int) -> bool:
        """True iff the class is killed by m (free part empty, m*torsion = 0)."""
        if m < 1:
            raise ValueError("order must be a positive integer")
        if self.free:
            return False
        return all((m * t).denominator == 1 for t in self.torsion)


def torsion_classes(m: int) -> list[TwistClass]:
    """All m**2 degree-zero classes of order dividing m."""
    if m < 1:
        raise ValueError("order must be a positive integer")
    return [
        TwistClass.of_torsion(Fraction(i, m), Fraction(j, m))
        for i in range(m)
        for j in range(m)
    ]


@dataclass(frozen=True)
class IndecomposableBundle:
    """E(rank, degree) (x) twist, with E(n,d) the canonical indecomposable."""

    rank: int
    degree: int
    twist: TwistClass = field(default_factory=TwistClass)

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError("rank must be >= 1")


@dataclass(frozen=True)
class BundleSum:
    """A formal direct sum of indecomposable bundles.

    ``generic_twists`` asserts that the summands' free twist parts are
    pairwise distinct generic generators; operations whose value depends on
    twist genericity (``end_h0``) demand it.
    """

    summands: tuple[IndecomposableBundle, ...]
    generic_twists: bool = False

    def __post_init__(self) -> None:
        if not self.summands:
            raise ValueError("a bundle sum needs at least one summand")
        if self.generic_twists:
            frees = [b.twist.free for b in self.summands]
            if len(set(frees)) != len(frees):
                raise ValueError(
                    "generic_twists asserts pairwise distinct free twist parts"
                )

    @property
    def rank(self) -> int:
        return sum(b.rank for b in self.summands)

    @property
    def degree(self) -> int:
        return sum(b.degree for b in self.summands)


def generic_sum(parts: Iterable[tuple[int, int]], prefix: str = "t") -> BundleSum:
    """Direct sum of E(n_j,d_j) twisted by fresh distinct generic generators."""
    summands = tuple(
        IndecomposableBundle(n, d, TwistClass.generic(f"{prefix}{j}"))
        for j, (n, d) in enumerate(parts)
    )
    return BundleSum(summands, generic_twists=True)


def slope(bundle: IndecomposableBundle | BundleSum) -> Fraction:
    """degree/rank as a reduced fraction."""
    return Fraction(bundle.degree, bundle.rank)


def dual(bundle: IndecomposableBundle) -> IndecomposableBundle:
    """E(n,d)* = E(n,-d); the twist is inverted."""
    return IndecomposableBundle(bundle.rank, -bundle.degree, -bundle.twist)


def gcd_factor(bundle: IndecomposableBundle) -> tuple[int, int, int]:
    """Split E(n,d) = E(h,0) (x) E(nbar,dbar) arithmetic: (h, nbar, dbar).

    h = gcd(n,d) with gcd(n,0) = n, so n = h*nbar, d = h*dbar and
    gcd(nbar,dbar) = 1.
    """
    h = math.gcd(bundle.rank, bundle.degree)
    return h, bundle.rank // h, bundle.degree // h


def deg0_tensor_decompose(h: int, h2: int) -> list[int]:
    """Ranks of the indecomposable summands of E(h,0) (x) E(h2,0).

    The Clebsch-Gordan ladder [|h-h2|+1, |h-h2|+3, ..., h+h2-1]: min(h,h2)
    summands whose ranks sum to h*h2.
    """
    if h < 1 or h2 < 1:
        raise ValueError("ranks must be >= 1")
    return list(range(abs(h - h2) + 1, h + h2, 2))


def hom_dim(source: IndecomposableBundle, target: IndecomposableBundle) -> int:
    """h0 of Hom(source, target) = source* (x) target.

    With source E(n_j,d_j) (x) L_j and target E(n,d) (x) L, the hom bundle has
    all summands of slope Delta/(n_j n) for Delta = n_j*d - n*d_j.  Negative
    slope gives 0, positive slope gives Delta.  At Delta = 0 there are maps
    exactly when L_j - L is torsion of order dividing nbar (the coprime rank),
    and then the dimension is min(gcd(n,d), gcd(n_j,d_j)).
    """
    delta = source.rank * target.degree - target.rank * source.degree
    if delta < 0:
        return 0
    if delta > 0:
        return delta
    _, nbar, _ = gcd_factor(target)
    if (source.twist - target.twist).is_torsion_of_order_dividing(nbar):
        return min(
            math.gcd(target.rank, target.degree),
            math.gcd(source.rank, source.degree),
        )
    return 0


def hom_slope(source: IndecomposableBundle, target: IndecomposableBundle) -> Fraction:
    """Common slope of the summands of source* (x) target."""
    delta = source.rank * target.degree - target.rank * source.degree
    return Fraction(delta, source.rank * target.rank)


def end_h0(bundle: BundleSum) -> int:
    """h0(E* (x) E) for a direct sum E with generic pairwise-distinct twists.

    Sums hom_dim over all ordered pairs of summands: the diagonal contributes
    gcd(n_j,d_j); unequal-slope pairs contribute the positive cross degree in
    exactly one orientation; equal-slope pairs of distinct generic twists
    contribute nothing.  Refuses non-generic input, where only an inequality
    would hold.
    """
    if not bundle.generic_twists:
        raise ValueError("end_h0 is defined only for generic_twists bundle sums")
    return sum(
        hom_dim(a, b) for a in bundle.summands for b in bundle.summands
    )


def h0(bundle: IndecomposableBundle) -> int:
    """Global sections of an indecomposable bundle.

    Positive degree d gives d; degree zero gives 1 exactly for the identity
    twist (E(n,0) is the unique indecomposable of degree zero with sections);
    negative degree gives 0.
    """
    if bundle.degree > 0:
        return bundle.degree
    if bundle.degree < 0:
        return 0
    return 1 if bundle.twist.is_identity() else 0


def generically_globally_generated(bundle: IndecomposableBundle) -> bool:
    """True iff slope >= 1.

    Slope >= 1 is sufficient; the converse is not asserted by the theory this
    implements, so slopes below 1 simply report False.
    """
    return slope(bundle) >= 1
