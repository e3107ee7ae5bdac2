"""Genus-g stratification numerology for the Segre invariant.

For stable bundles of rank n and degree d on a genus-g curve, the Segre
invariant s = n'd - n*max(deg E') of rank-n' subbundles sits in the window
n'(n-n')(g-1) <= s <= n'(n-n')g for generic bundles, is congruent to n'd
mod n, and the locus where it is at most s has expected dimension
n^2(g-1) + 1 + s - n'(n-n')(g-1).  This module computes those numbers, the
extension-space dimension they rest on, the full stratification table, and
the integer ledger of the genus-degeneration argument (gluing a genus g-1
curve to an elliptic tail).
"""

from __future__ import annotations

from dataclasses import dataclass

STATUS_INFEASIBLE = "infeasible_congruence"
STATUS_BOUNDARY = "semistable_boundary"
STATUS_NONEMPTY = "stratum_nonempty"
STATUS_GENERIC = "generic_locus"
STATUS_ABOVE = "above_upper_bound"


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def segre(n: int, d: int, nprime: int, dprime_max: int) -> int:
    """Segre invariant n'd - n*dprime_max for the maximal subbundle degree."""
    _check(0 < nprime < n, "need 0 < nprime < n")
    return nprime * d - n * dprime_max


def stratum_bounds(g: int, n: int, nprime: int) -> tuple[int, int]:
    """(generic lower bound, absolute upper bound) for the Segre invariant."""
    _check(g >= 1, "need g >= 1")
    _check(0 < nprime < n, "need 0 < nprime < n")
    c = nprime * (n - nprime)
    return c * (g - 1), c * g


def expected_dim(g: int, n: int, s: int, nprime: int) -> int:
    """Expected dimension n^2(g-1) + 1 + s - n'(n-n')(g-1) of the s-stratum.

    The raw formula; callers cap it at dim U(n,d) = n^2(g-1) + 1 once s
    reaches the generic lower bound.
    """
    _check(g >= 2, "need g >= 2")
    return n * n * (g - 1) + 1 + s - nprime * (n - nprime) * (g - 1)


def ext_space_rank(g: int, n: int, d: int, nprime: int, dprime: int) -> int:
    """Rank n'(n-n')(g-1) + (n'd - nd') of the relative extension bundle."""
    _check(0 < nprime < n, "need 0 < nprime < n")
    return nprime * (n - nprime) * (g - 1) + (nprime * d - n * dprime)


def extension_count_identity(g: int, n: int, s: int, nprime: int) -> tuple[int, int]:
    """Both sides of the moduli count behind the expected dimension.

    lhs = dim(moduli of subbundles) + dim(moduli of quotients) + (ext rank)
    - 1 for the projectivization; rhs = the expected-dimension formula.
    They agree identically since n^2 - n'(n-n') = n'^2 + (n-n')^2 + n'(n-n').
    """
    _check(g >= 2, "need g >= 2")
    m = n - nprime
    lhs = (nprime * nprime * (g - 1) + 1 + m * m * (g - 1) + 1
           + nprime * m * (g - 1) + s - 1)
    rhs = expected_dim(g, n, s, nprime)
    return lhs, rhs


@dataclass(frozen=True)
class StratumReport:
    """One row of a stratification table."""

    g: int
    n: int
    d: int
    nprime: int
    s: int
    dprime: int | None
    status: str
    expected_dim: int | str | None  # "full" once the stratum is all of U(n,d)
    expected_dim_raw: int | None
    dim_A_generic: int | None
    regime_note: str


def classify_stratum(g: int, n: int, d: int, nprime: int, s: int) -> StratumReport:
    """Classify a single Segre value s into its stratification row."""
    _check(g >= 2, "strata classification needs g >= 2")
    _check(0 < nprime < n, "need 0 < nprime < n")
    _check(s >= 0, "Segre invariant of a semistable bundle is >= 0")
    lower, upper = stratum_bounds(g, n, nprime)
    c = nprime * (n - nprime)

    if (nprime * d - s) % n != 0:
        return StratumReport(g, n, d, nprime, s, None, STATUS_INFEASIBLE,
                             None, None, None,
                             f"s != n'd (mod {n}); no subbundle degree realizes it")

    dprime = (nprime * d - s) // n
    raw = expected_dim(g, n, s, nprime)
    dim_moduli = n * n * (g - 1) + 1

    if s == 0:
        return StratumReport(
            g, n, d, nprime, s, dprime, STATUS_BOUNDARY, raw, raw, None,
            "strictly semistable boundary; destabilizing subbundles of slope"
            " equal to the bundle's",
        )
    if s > upper:
        return StratumReport(
            g, n, d, nprime, s, dprime, STATUS_ABOVE, None, raw, None,
            f"exceeds the absolute bound n'(n-n')g = {upper}; unrealizable",
        )
    if s < lower:
        return StratumReport(
            g, n, d, nprime, s, dprime, STATUS_NONEMPTY, raw, raw, None,
            "proper stratum: special bundles only, finitely many maximal"
            " subbundles on suitable elements",
        )

    # lower <= s <= upper: the generic bundle carries these subbundles
    a = s - lower
    if a < c:
        note = (f"generic locus: dim A = {a} < n'(n-n') = {c};"
                " evaluation map generically finite onto its image")
    elif a == c:
        note = (f"generic locus: dim A = {a} = n'(n-n');"
                " evaluation map onto with generic finite fibers")
    else:
        note = (f"generic locus: dim A = {a} > n'(n-n') = {c};"
                f" evaluation map onto, fiber dimension {a - c}")
    if a == 0:
        note += "; finite number of subbundles"
    if s == lower:
        note += "; boundary row: the proper-stratum facts apply here as well"
        capped: int | str = raw  # raw == dim_moduli exactly at the boundary
    else:
        capped = "full"
    return StratumReport(g, n, d, nprime, s, dprime, STATUS_GENERIC,
                         capped, raw, a, note)


def strata_table(g: int, n: int, d: int, nprime: int) -> list[StratumReport]:
    """All feasible Segre strata 0 <= s <= n'(n-n')g, plus one overflow row.

    Feasible s are the residues of n'd mod n; the first value past the upper
    bound is reported once with status above_upper_bound so the table shows
    where the window closes.
    """
    _check(g >= 2, "strata_table needs g >= 2 (use the elliptic-curve"
                   " subvariety operations for g = 1)")
    _check(0 < nprime < n, "need 0 < nprime < n")
    _, upper = stratum_bounds(g, n, nprime)
    r = (nprime * d) % n
    rows = [classify_stratum(g, n, d, nprime, s)
            for s in range(r, upper + 1, n)]
    first_above = r + n * ((upper - r) // n + 1)
    rows.append(classify_stratum(g, n, d, nprime, first_above))
    return rows


@dataclass(frozen=True)
class GluingLedger:
    """Integer bookkeeping of one degree split in the degeneration argument."""

    g: int
    n: int
    d: int
    nprime: int
    s: int
    d_g: int
    d_1: int
    s_g: int
    s_1: int
    a_g: int
    a_1: int
    dim_X: int
    dim_Is: int
    verdict: str


def degeneration_ledger(g: int, n: int, d: int, nprime: int, s: int,
                        dsplit: tuple[int, int]) -> GluingLedger:
    """Dimension ledger for one degree split on the genus-g side + elliptic tail.

    The reducible model carries the full degree d on the genus-g component
    and degree 0 on the elliptic tail, and the candidate subbundle splits its
    degree d' = (n'd - s)/n as dsplit = (d_g, d_1).  The ledger compares the
    locus X of gluings matching a subspace from each side against all of
    Is(V1,V2): a deficit means the generic gluing admits no such subbundle,
    equality a finite number, an excess a positive-dimensional family.

    The genus-g Segre contribution s_g = n'd - n*d_g must respect the generic
    lower bound n'(n-n')(g-1); the elliptic side needs d_1 <= 0 since the
    tail bundle is a sum of degree-zero line bundles.
    """
    _check(g >= 2, "need g >= 2")
    _check(0 < nprime < n, "need 0 < nprime < n")
    _check((nprime * d - s) % n == 0, "s must be congruent to n'd mod n")
    d_g, d_1 = dsplit
    dprime = (nprime * d - s) // n
    _check(d_g + d_1 == dprime,
           f"split {dsplit} does not sum to the subbundle degree {dprime}")
    c = nprime * (n - nprime)
    s_g = nprime * d - n * d_g
    _check(s_g >= c * (g - 1),
           f"genus-g side violates the genericity bound: s_g = {s_g} <"
           f" n'(n-n')(g-1) = {c * (g - 1)}")
    s_1 = -n * d_1
    _check(s_1 >= 0, "elliptic-side subbundle degree must be <= 0")

    a_g = s_g - c * (g - 1)
    a_1 = min(s_1, c)  # image dimension of the elliptic evaluation map
    dim_x = a_g + a_1 + n * n - c
    dim_is = n * n
    if dim_x < dim_is:
        verdict = "no_gluing"
    elif dim_x == dim_is:
        verdict = "finite"
    else:
        verdict = "positive_dim"
    return GluingLedger(g, n, d, nprime, s, d_g, d_1, s_g, s_1,
                        a_g, a_1, dim_x, dim_is, verdict)
