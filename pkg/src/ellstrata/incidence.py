"""Finite-field certification of Grassmannian incidence-dimension counts.

The set of linear maps carrying a fixed n'-dimensional subspace V1' into
another one V2' is a linear subspace of the n x n matrices of codimension
n'(n-n'): the incidence space.  These routines certify that count by exact
rank computation over GF(p), count graph pairs (V', phi V') against the
Gaussian binomial by exhaustive subspace enumeration at tiny p, and sample
the incidence space for invertibility.  Dimension over GF(p) stands in for
dimension over characteristic zero: the constraints are integer-linear, so
the rank of a generic sample is field-independent.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import gfp


class DegenerateInstanceError(RuntimeError):
    """The sampled constraint system lost rank; the caller should resample."""


@dataclass(frozen=True, eq=False)
class IncidenceInstance:
    """Two random n'-dimensional subspaces of GF(p)^n, given by column spans."""

    p: int
    n: int
    nprime: int
    V1sub: np.ndarray  # n x n', full column rank
    V2sub: np.ndarray
    seed: int

    def __post_init__(self) -> None:
        if not gfp.is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")
        if not 0 < self.nprime < self.n:
            raise ValueError("need 0 < nprime < n")
        for name, m in (("V1sub", self.V1sub), ("V2sub", self.V2sub)):
            if m.shape != (self.n, self.nprime):
                raise ValueError(f"{name} must be {self.n} x {self.nprime}")
            if gfp.rank(m, self.p) != self.nprime:
                raise ValueError(f"{name} does not have full column rank")


def _random_full_rank(rng: np.random.Generator, p: int, n: int, k: int) -> np.ndarray:
    while True:
        m = rng.integers(0, p, size=(n, k), dtype=np.int64)
        if gfp.rank(m, p) == k:
            return m


def random_instance(p: int, n: int, nprime: int, seed: int) -> IncidenceInstance:
    """Deterministic random instance: resamples until both spans are full rank."""
    if not gfp.is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    if not 0 < nprime < n:
        raise ValueError("need 0 < nprime < n")
    rng = np.random.default_rng(seed)
    v1 = _random_full_rank(rng, p, n, nprime)
    v2 = _random_full_rank(rng, p, n, nprime)
    return IncidenceInstance(p, n, nprime, v1, v2, seed)


def _constraint_matrix(inst: IncidenceInstance) -> np.ndarray:
    # Rows of W span the annihilator of span(V2sub); phi(V1') <= V2' becomes
    # W @ phi @ V1sub = 0, i.e. kron(W, V1sub^T) acting on phi flattened
    # row-major.  That is n'(n-n') equations in n^2 unknowns.
    w = gfp.left_annihilator(inst.V2sub, inst.p)
    return np.kron(w, inst.V1sub.T) % inst.p


def incidence_dim(inst: IncidenceInstance) -> int:
    """Dimension over GF(p) of {phi : phi(V1') contained in V2'}.

    Computed as n^2 minus the exact rank of the constraint system; the
    expected value is n^2 - n'(n-n').  Raises DegenerateInstanceError if the
    constraints lost rank (non-generic sample).
    """
    expected_rank = inst.nprime * (inst.n - inst.nprime)
    r = gfp.rank(_constraint_matrix(inst), inst.p)
    if r < expected_rank:
        raise DegenerateInstanceError(
            f"constraint rank {r} < n'(n-n') = {expected_rank}; resample"
        )
    return inst.n * inst.n - r


def solution_basis(inst: IncidenceInstance) -> np.ndarray:
    """Basis of the incidence space, one flattened n x n matrix per row."""
    return gfp.nullspace(_constraint_matrix(inst), inst.p)


def gaussian_binomial(n: int, k: int, p: int) -> int:
    """Number of k-dimensional subspaces of GF(p)^n (exact integer)."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def enumerate_subspaces(p: int, n: int, k: int):
    """Yield every k-dimensional subspace of GF(p)^n as a canonical RREF basis.

    Bases are k x n matrices in reduced row-echelon form; one per subspace.
    """
    for pivots in itertools.combinations(range(n), k):
        free_positions = [
            (r, c)
            for r in range(k)
            for c in range(n)
            if c > pivots[r] and c not in pivots
        ]
        for values in itertools.product(range(p), repeat=len(free_positions)):
            basis = np.zeros((k, n), dtype=np.int64)
            for r, c in enumerate(pivots):
                basis[r, c] = 1
            for (r, c), v in zip(free_positions, values):
                basis[r, c] = v
            yield basis


def _canonical(basis: np.ndarray, p: int) -> tuple:
    reduced, pivots = gfp.rref(basis, p)
    if len(pivots) != basis.shape[0]:
        raise AssertionError("subspace image lost dimension")
    return tuple(map(tuple, reduced.tolist()))


def graph_count(p: int, n: int, nprime: int, phi: np.ndarray) -> int:
    """Count the pairs (V', phi V') over all n'-subspaces of GF(p)^n.

    Exhaustive, so restricted to p in {2, 3} and n <= 4.  The count must be
    the Gaussian binomial: phi carries the Grassmannian bijectively onto
    itself, so the graph is a copy of it.
    """
    if p not in (2, 3):
        raise ValueError("exhaustive enumeration is limited to p in {2, 3}")
    if n > 4:
        raise ValueError("exhaustive enumeration is limited to n <= 4")
    if not 0 < nprime < n:
        raise ValueError("need 0 < nprime < n")
    phi = np.asarray(phi, dtype=np.int64) % p
    if not gfp.is_invertible(phi, p):
        raise ValueError("phi must be invertible")
    pairs = set()
    for basis in enumerate_subspaces(p, n, nprime):
        image = (basis @ phi.T) % p
        pairs.add((_canonical(basis, p), _canonical(image, p)))
    return len(pairs)


def random_invertible(p: int, n: int, seed: int) -> np.ndarray:
    """Deterministic random invertible n x n matrix over GF(p)."""
    rng = np.random.default_rng(seed)
    while True:
        m = rng.integers(0, p, size=(n, n), dtype=np.int64)
        if gfp.is_invertible(m, p):
            return m


def invertibility_rate(p: int, n: int, nprime: int, trials: int,
                       seed: int) -> Fraction:
    """Fraction of random incidence-space elements that are invertible.

    Draws one instance from ``seed``, parametrizes its solution space, and
    samples ``trials`` uniform elements, each trial on its own RNG stream
    derived from (seed, trial index).  The determinant is a nonzero
    polynomial on the solution space, so the failure rate is O(n/p).
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    inst = random_instance(p, n, nprime, seed)
    basis = solution_basis(inst)
    hits = 0
    for trial in range(trials):
        rng = np.random.default_rng([seed, trial])
        coeffs = rng.integers(0, p, size=basis.shape[0], dtype=np.int64)
        phi = (coeffs @ basis % p).reshape(n, n)
        if gfp.is_invertible(phi, p):
            hits += 1
    return Fraction(hits, trials)
