"""Exact integer and rational linear algebra for small dense matrices.

Everything here runs on Python ints and ``fractions.Fraction`` so that
determinants, characteristic polynomials, and resolvent traces are free of
rounding.  Orders in this package stay below ~20, so cubic algorithms on
exact scalars are plenty fast.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np


def as_int_rows(M) -> list[list[int]]:
    """Copy a matrix-like of integers into a list-of-lists of Python ints."""
    A = np.asarray(M)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    if not np.issubdtype(A.dtype, np.integer):
        rounded = np.rint(A)
        if not np.all(rounded == A):
            raise ValueError("matrix has non-integer entries")
        A = rounded.astype(np.int64)
    return [[int(v) for v in row] for row in A]


def det_bareiss(M) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    a = as_int_rows(M)
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            row_k = a[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                # Every division here is exact; that is the Bareiss identity.
                row_i[j] = (pivot * row_i[j] - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def charpoly(M) -> list[int]:
    """Integer coefficients of det(xI - M), leading coefficient first.

    Uses the Faddeev-LeVerrier recurrence in Fraction arithmetic; the result
    of an integer matrix is integral, which is asserted before returning.
    """
    a = as_int_rows(M)
    n = len(a)
    A = [[Fraction(v) for v in row] for row in a]
    # B accumulates M*(B_prev + c_prev*I); coefficients come from traces.
    coeffs = [Fraction(1)]
    B = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        if k == 1:
            B = [row[:] for row in A]
        else:
            prev = [row[:] for row in B]
            c = coeffs[-1]
            for i in range(n):
                prev[i][i] += c
            B = _matmul_fraction(A, prev)
        trace = sum(B[i][i] for i in range(n))
        coeffs.append(-trace / k)
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise AssertionError("characteristic polynomial must be integral")
        out.append(int(c))
    return out


def _matmul_fraction(A, B):
    n = len(A)
    m = len(B[0])
    k = len(B)
    out = [[Fraction(0)] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        oi = out[i]
        for t in range(k):
            ait = Ai[t]
            if ait == 0:
                continue
            Bt = B[t]
            for j in range(m):
                oi[j] += ait * Bt[j]
    return out


def rational_inverse(M) -> list[list[Fraction]]:
    """Exact inverse of a matrix of ints/Fractions via Gauss-Jordan.

    Raises ZeroDivisionError if the matrix is singular; callers translate
    that into their own domain error.
    """
    n = len(M)
    a = [[Fraction(M[i][j]) for j in range(n)] for i in range(n)]
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if a[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[pivot_row] = a[pivot_row], a[col]
        inv[col], inv[pivot_row] = inv[pivot_row], inv[col]
        pivot = a[col][col]
        a[col] = [v / pivot for v in a[col]]
        inv[col] = [v / pivot for v in inv[col]]
        for r in range(n):
            if r == col:
                continue
            factor = a[r][col]
            if factor == 0:
                continue
            a[r] = [v - factor * w for v, w in zip(a[r], a[col])]
            inv[r] = [v - factor * w for v, w in zip(inv[r], inv[col])]
    return inv


def trace_product(A, B) -> Fraction:
    """tr(A @ B) for matrices of ints/Fractions, computed exactly."""
    n = len(A)
    total = Fraction(0)
    for i in range(n):
        Ai = A[i]
        for j in range(n):
            total += Fraction(Ai[j]) * Fraction(B[j][i])
    return total
