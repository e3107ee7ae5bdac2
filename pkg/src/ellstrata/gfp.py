"""Exact linear algebra over prime fields GF(p).

Matrices are numpy int64 arrays with entries reduced mod p.  Entries stay
below p and the matrices below ~2000 columns, so intermediate products fit
in int64 without overflow.  Inputs are never mutated.
"""

from __future__ import annotations

import math

import numpy as np
from numpy.typing import NDArray

Matrix = NDArray[np.int64]


def is_prime(p: int) -> bool:
    """Trial-division primality check; fine for desk-scale moduli."""
    if p < 2:
        return False
    for q in range(2, int(math.isqrt(p)) + 1):
        if p % q == 0:
            return False
    return True


def rref(mat: Matrix, p: int) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form of ``mat`` over GF(p).

    Args:
        mat: integer matrix (copied, reduced mod p).
        p: prime modulus.

    Returns:
        (R, pivots): the unique RREF and the list of pivot column indices;
        the rank is len(pivots).
    """
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    mat = np.array(mat, dtype=np.int64) % p
    rows, cols = mat.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(mat[r:, c])[0]
        if nz.size == 0:
            continue
        pr = int(nz[0]) + r
        if pr != r:
            mat[[r, pr]] = mat[[pr, r]]
        mat[r] = (mat[r] * pow(int(mat[r, c]), -1, p)) % p
        for other in range(rows):
            if other != r and mat[other, c]:
                mat[other] = (mat[other] - mat[other, c] * mat[r]) % p
        pivots.append(c)
        r += 1
    return mat, pivots


def rank(mat: Matrix, p: int) -> int:
    """Rank of ``mat`` over GF(p)."""
    _, pivots = rref(mat, p)
    return len(pivots)


def nullspace(mat: Matrix, p: int) -> Matrix:
    """Basis of {x : mat @ x = 0 mod p}, one vector per row.

    Returns a (dim, ncols) matrix; dim = ncols - rank.  The basis is in the
    standard RREF parametrization, so it is deterministic.
    """
    R, pivots = rref(mat, p)
    cols = R.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = (-R[r, fc]) % p
    return basis


def left_annihilator(mat: Matrix, p: int) -> Matrix:
    """Basis (rows) of {w : w @ mat = 0 mod p}."""
    return nullspace(np.ascontiguousarray(mat.T), p)


def is_invertible(mat: Matrix, p: int) -> bool:
    mat = np.asarray(mat)
    return mat.shape[0] == mat.shape[1] and rank(mat, p) == mat.shape[0]
