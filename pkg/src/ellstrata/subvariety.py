"""Dimension theory of the variety of rank-n' degree-d' subbundles.

The ambient bundle is the generic polystable bundle on an elliptic curve:
the direct sum of h = gcd(n,d) generic indecomposables of rank n/h and
degree d/h.  The subbundle variety has dimension s1 = n'd - nd' (empty for
s1 < 0), quotients have uniform slope, and the evaluation maps to the
Grassmannian at one or two generic points fall into four regimes governed
by s1 against c = n'(n-n').
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def _check_ranks(n: int, nprime: int) -> None:
    if not 0 < nprime < n:
        raise ValueError("need 0 < nprime < n")


def dim_A(n: int, d: int, nprime: int, dprime: int) -> int | None:
    """Dimension of the dominant component of the subbundle variety.

    Returns None when the variety is empty (s1 = n'd - nd' < 0), otherwise
    s1 itself.
    """
    _check_ranks(n, nprime)
    s1 = nprime * d - n * dprime
    return None if s1 < 0 else s1


def equal_slope_subbundle_count(n: int, d: int, nprime: int, dprime: int) -> int | None:
    """Number of subbundles in the zero-dimensional equal-slope case.

    When d'/n' = d/n the only subbundles are direct sums of n'/nbar of the
    h ambient summands, giving C(h, n'/nbar) of them.  Returns None when the
    slopes differ (the count is not a finite cardinality question there).
    """
    _check_ranks(n, nprime)
    if nprime * d - n * dprime != 0:
        return None
    h = math.gcd(n, d)
    nbar = n // h
    return math.comb(h, nprime // nbar)


@dataclass(frozen=True)
class QuotientProfile:
    rank: int
    degree: int
    slope: Fraction
    equal_slope_sum: bool


def quotient_profile(n: int, d: int, nprime: int, dprime: int) -> QuotientProfile:
    """Rank, degree and uniform slope of the quotient by a generic subbundle.

    Only the certified facts are returned: the quotient is a direct sum of
    indecomposables all of slope (d-d')/(n-n'); its exact summand ranks are
    not determined by this calculus.  Rejects empty subbundle varieties.
    """
    if dim_A(n, d, nprime, dprime) is None:
        raise ValueError("subbundle variety is empty (n'd - nd' < 0)")
    return QuotientProfile(
        rank=n - nprime,
        degree=d - dprime,
        slope=Fraction(d - dprime, n - nprime),
        equal_slope_sum=True,
    )


@dataclass(frozen=True)
class RegimeDescriptor:
    """Evaluation-map behaviour at one (pi_P) and two (pi_P x pi_Q) points.

    At s1 = c both the finite-fiber and the surjectivity statements hold;
    the flags deliberately overlap there instead of picking a side.
    """

    s1: int
    c: int
    finite_fibers_piP: bool
    surjective_piP: bool
    finite_fibers_piPQ: bool
    surjective_piPQ: bool
    fiber_dim_piP: int | None
    image_dim_piP: int


def regime(n: int, d: int, nprime: int, dprime: int) -> RegimeDescriptor:
    """Classify the evaluation maps of the subbundle variety.

    With s1 = n'd - nd' >= 0 and c = n'(n-n'): pi_P has finite fibers on a
    maximal component for s1 <= c and is surjective with fiber dimension
    s1 - c for s1 >= c; the two-point map has generic finite fibers for
    s1 <= 2c and is onto for s1 >= 2c.
    """
    _check_ranks(n, nprime)
    s1 = nprime * d - n * dprime
    if s1 < 0:
        raise ValueError("regime requires n'd - nd' >= 0")
    c = nprime * (n - nprime)
    surjective = s1 >= c
    return RegimeDescriptor(
        s1=s1,
        c=c,
        finite_fibers_piP=s1 <= c,
        surjective_piP=surjective,
        finite_fibers_piPQ=s1 <= 2 * c,
        surjective_piPQ=s1 >= 2 * c,
        fiber_dim_piP=s1 - c if surjective else None,
        image_dim_piP=min(s1, c),
    )


def kernel_obstruction(n: int, d: int, nprime: int, dprime: int,
                       n2: int, d2: int) -> bool:
    """Test the three slope inequalities a non-injective generic map forces.

    A kernel of rank n2, degree d2 would need, simultaneously,
    (d-d')/(n-n') <= d2/n2 <= d'/n' < (d-d')/(n-n').  Returns whether all
    three hold; they never do, which is the incompatibility that makes the
    generic map an immersion.
    """
    if not 0 < n2 < nprime < n:
        raise ValueError("need 0 < n2 < nprime < n")
    quotient = Fraction(d - dprime, n - nprime)
    kernel = Fraction(d2, n2)
    sub = Fraction(dprime, nprime)
    return quotient <= kernel and kernel <= sub and sub < quotient
