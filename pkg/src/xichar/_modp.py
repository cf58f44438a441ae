"""Dense linear algebra over a small prime field F_p, on int64 numpy arrays.

All inputs are assumed reduced into [0, p).  p must stay below ~3e8 so that
a length-64 dot product of residues fits in int64; Dixon primes are far
smaller than that.
"""

from __future__ import annotations

import numpy as np


def rref(M: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of M mod p and its pivot columns."""
    A = np.array(M, dtype=np.int64) % p
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = (A[r] * pow(int(A[r, c]), -1, p)) % p
        col = A[:, c].copy()
        col[r] = 0
        mask = np.nonzero(col)[0]
        if mask.size:
            A[mask] = (A[mask] - np.outer(col[mask], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def nullspace(M: np.ndarray, p: int) -> np.ndarray:
    """Basis (as rows) of {v : M v = 0} over F_p."""
    R, pivots = rref(M, p)
    n = M.shape[1]
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = (-R[r, f]) % p
    return basis


def charpoly(A: np.ndarray, p: int) -> np.ndarray:
    """Characteristic polynomial det(xI - A) mod p, constant term first.

    Reduces A to upper Hessenberg form by similarity, then runs the usual
    Hessenberg determinant recurrence.
    """
    H = np.array(A, dtype=np.int64) % p
    d = H.shape[0]
    for j in range(d - 2):
        nz = np.nonzero(H[j + 1:, j])[0]
        if nz.size == 0:
            continue
        piv = j + 1 + int(nz[0])
        if piv != j + 1:
            H[[j + 1, piv]] = H[[piv, j + 1]]
            H[:, [j + 1, piv]] = H[:, [piv, j + 1]]
        inv = pow(int(H[j + 1, j]), -1, p)
        below = slice(j + 2, d)
        f = (H[below, j] * inv) % p
        if not f.any():
            continue
        H[below] = (H[below] - np.outer(f, H[j + 1])) % p
        H[:, j + 1] = (H[:, j + 1] + H[:, below] @ f) % p
    # polys[k] = charpoly of the leading k x k block
    polys = [np.array([1], dtype=np.int64)]
    for k in range(1, d + 1):
        hk = H[k - 1, k - 1]
        prev = polys[k - 1]
        cur = np.zeros(k + 1, dtype=np.int64)
        cur[1:] += prev
        cur[:k] -= hk * prev
        prod = 1
        for i in range(k - 1, 0, -1):
            prod = (prod * int(H[i, i - 1])) % p
            coef = (int(H[i - 1, k - 1]) * prod) % p
            if coef:
                q = polys[i - 1]
                cur[:len(q)] -= coef * q
        polys.append(cur % p)
    return polys[d]


def roots(poly: np.ndarray, p: int) -> list[int]:
    """All roots in F_p, by evaluating at every field element."""
    xs = np.arange(p, dtype=np.int64)
    vals = np.zeros(p, dtype=np.int64)
    for c in poly[::-1]:
        vals = (vals * xs + int(c)) % p
    return [int(x) for x in np.nonzero(vals == 0)[0]]


def primitive_root(p: int) -> int:
    from .cyclotomic import factorize

    if p == 2:
        return 1
    qs = list(factorize(p - 1))
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    raise ArithmeticError(f"no primitive root mod {p}")
