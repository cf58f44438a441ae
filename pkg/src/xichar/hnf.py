"""Integer linear systems via column Hermite normal form."""

from __future__ import annotations

from typing import Sequence

from .exceptions import NoIntegerSolution


def column_hnf(A: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]], list[int]]:
    """Return (H, U, pivot_rows) with A U = H, U unimodular, H in column HNF.

    Matrices are lists of rows.  Column j < rank of H has its first nonzero
    entry, which is positive, in row pivot_rows[j]; entries to the left of
    a pivot are reduced into [0, pivot).
    """
    r = len(A)
    s = len(A[0]) if r else 0
    # work column-wise: each column carries its A-part and its U-part
    cols = [[A[i][j] for i in range(r)] + [int(i == j) for i in range(s)] for j in range(s)]
    pivot_rows: list[int] = []
    k = 0
    for i in range(r):
        if k == s:
            break
        while True:
            nz = [j for j in range(k, s) if cols[j][i]]
            if not nz:
                break
            piv = min(nz, key=lambda j: (abs(cols[j][i]), j))
            cols[k], cols[piv] = cols[piv], cols[k]
            if len(nz) == 1:
                break
            a = cols[k][i]
            for j in range(k + 1, s):
                q = cols[j][i] // a
                if q:
                    cj, ck = cols[j], cols[k]
                    cols[j] = [x - q * y for x, y in zip(cj, ck)]
        if not cols[k][i]:
            continue
        if cols[k][i] < 0:
            cols[k] = [-x for x in cols[k]]
        a = cols[k][i]
        for j in range(k):
            q = cols[j][i] // a
            if q:
                cols[j] = [x - q * y for x, y in zip(cols[j], cols[k])]
        pivot_rows.append(i)
        k += 1
    H = [[cols[j][i] for j in range(s)] for i in range(r)]
    U = [[cols[j][r + i] for j in range(s)] for i in range(s)]
    return H, U, pivot_rows


def solve_integer(A: Sequence[Sequence[int]], b: Sequence[int]) -> list[int]:
    """One integer solution x of A x = b (free coordinates set to zero)."""
    r = len(A)
    s = len(A[0]) if r else 0
    if len(b) != r:
        raise ValueError("right-hand side has the wrong length")
    H, U, pivots = column_hnf(A)
    resid = list(b)
    y = [0] * s
    for j, i in enumerate(pivots):
        q, rem = divmod(resid[i], H[i][j])
        if rem:
            raise NoIntegerSolution(f"row {i}: {resid[i]} not divisible by pivot {H[i][j]}")
        y[j] = q
        if q:
            for t in range(r):
                resid[t] -= q * H[t][j]
    if any(resid):
        raise NoIntegerSolution("system is inconsistent")
    x = [sum(U[i][j] * y[j] for j in range(s)) for i in range(s)]
    if any(sum(A[t][i] * x[i] for i in range(s)) != b[t] for t in range(r)):
        raise AssertionError("HNF back-substitution failed re-evaluation")
    return x
