"""Scalar invariants and exact matrix functionals of (P, R) pairs.

The chirality matrix P is direction-sensitive, so invariants go through the
direction-free matrix Q (or its ring-weighted refinement Qn) and a resolvent
in the ring matrix R.  All linear algebra behind the scalar values is exact
integer/rational arithmetic; floats appear only in the reported numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import exact
from .errors import OrderMismatch, SingularRingMatrix
from .matrices import RingMatrix, SeidelMatrix, max_rings, ring_entries, seidel_entries

__all__ = [
    "switch_row_positive",
    "q_matrix",
    "qn_matrix",
    "invariant",
    "invariant_n",
    "det_exact",
    "char_poly",
    "is_extreme",
    "max_rings",
    "dof",
    "InvariantReport",
    "invariant_report",
    "PROFILES",
]


def switch_row_positive(P, i: int) -> SeidelMatrix:
    """Switch line orientations so row/column i becomes all +1 off-diagonal.

    Conjugates by diag(d) with d_i = 1 and d_k = P_ik; the result is the
    unique switching-equivalent matrix with a positive row i.
    """
    A = seidel_entries(P)
    d = A[i].copy()
    d[i] = 1
    return SeidelMatrix(d[:, None] * A * d[None, :])


def q_matrix(P) -> np.ndarray:
    """Direction-free companion of a chirality matrix.

    Row i holds the column sums of the matrix switched positive at row i.
    The result is symmetric with diagonal n-1, and Q(P) + Q(-P) depends only
    on the order.
    """
    A = seidel_entries(P)
    n = A.shape[0]
    Q = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        Q[i] = switch_row_positive(A, i).entries.sum(axis=0)
    return Q


def _qn_numerators(P, R) -> np.ndarray:
    A = seidel_entries(P)
    Rm = ring_entries(R)
    if A.shape != Rm.shape:
        raise OrderMismatch(f"orders differ: {A.shape[0]} vs {Rm.shape[0]}")
    n = A.shape[0]
    row_w = Rm.sum(axis=1)
    col_w = Rm.sum(axis=0)
    acc = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        weight = int(row_w[i]) * int(col_w[i])
        if weight:
            acc += weight * switch_row_positive(A, i).entries
    return acc


def qn_matrix(P, R) -> list[list[Fraction]]:
    """Ring-weighted companion matrix, exact rationals.

    Sum of the row-positive switchings A_i weighted by the ring matrix row
    and column sums through line i, scaled by 3^-6.  Qn(P,R) + Qn(-P,R) is
    independent of P.
    """
    acc = _qn_numerators(P, R)
    n = acc.shape[0]
    scale = Fraction(1, 3**6)
    return [[scale * int(acc[i, j]) for j in range(n)] for i in range(n)]


def _resolvent_trace(Q: np.ndarray, M: np.ndarray) -> Fraction:
    """tr(Q @ M^-1) for integer matrices, exact.

    Fast path: integer adjugate recovered from the floating inverse and
    certified by M @ adj == det * I; falls back to rational elimination
    when the certificate fails (huge entries).
    """
    n = M.shape[0]
    detf = float(np.linalg.det(M.astype(float)))
    det = int(round(detf))
    if det == 0 and abs(detf) < 0.5:
        raise SingularRingMatrix("resolvent matrix is singular")
    if abs(detf) < 2**52:
        try:
            adj = np.rint(detf * np.linalg.inv(M.astype(float))).astype(np.int64)
        except np.linalg.LinAlgError:
            adj = None
        if adj is not None and np.array_equal(M @ adj, det * np.eye(n, dtype=np.int64)):
            return Fraction(int(np.trace(Q @ adj)), det)
    if exact.det_bareiss(M.tolist()) == 0:
        raise SingularRingMatrix("resolvent matrix is singular")
    inv = exact.rational_inverse(M.tolist())
    return exact.trace_product(Q.tolist(), inv)


def invariant(P, R) -> float:
    """Scalar invariant tr[Q (I - R)^-1] of a configuration class.

    The mirror configuration's value is invariant(-P, R).
    """
    Q = q_matrix(P)
    Rm = ring_entries(R)
    if Q.shape != Rm.shape:
        raise OrderMismatch(f"orders differ: {Q.shape[0]} vs {Rm.shape[0]}")
    n = Rm.shape[0]
    ImR = np.eye(n, dtype=np.int64) - Rm
    return float(_resolvent_trace(Q, ImR))


def invariant_n(P, R) -> float:
    """Refined scalar invariant tr[Qn (I/2 - R)^-1].

    Discriminates mirror pairs that the plain invariant cannot (for order-6
    determinant -125 classes the plain Q is the same for every P).
    """
    acc = _qn_numerators(P, R)
    Rm = ring_entries(R)
    n = Rm.shape[0]
    Im2R = np.eye(n, dtype=np.int64) - 2 * Rm
    # (I/2 - R)^-1 = 2 (I - 2R)^-1; acc carries the 3^6 denominator.
    return float(2 * _resolvent_trace(acc, Im2R) / 3**6)


def det_exact(M) -> int:
    """Exact integer determinant (Bareiss fraction-free elimination)."""
    return exact.det_bareiss(_entries_any(M))


def char_poly(M) -> list[int]:
    """Integer coefficients of det(xI - M), leading 1 first.

    Published polynomials sometimes carry the opposite overall sign
    ((-1)^n conventions); compare up to that sign.
    """
    return exact.charpoly(_entries_any(M))


def is_extreme(P) -> bool:
    """Whether P^2 = (N-1) I exactly (the maximal-determinant family)."""
    A = seidel_entries(P).astype(np.int64)
    n = A.shape[0]
    return bool(np.array_equal(A @ A, (n - 1) * np.eye(n, dtype=np.int64)))


def _entries_any(M) -> np.ndarray:
    if isinstance(M, (SeidelMatrix, RingMatrix)):
        return M.entries
    entries = getattr(M, "entries", M)
    return np.asarray(entries)


# Per-cylinder parameter count and shared parameter count for each
# constraint profile of the contact solver.
PROFILES = {
    "equal_round": (4, 1),
    "free_round": (5, 0),
    "equal_elliptic": (5, 1),
    "free_elliptic": (7, 0),
}


def dof(n: int, profile: str) -> int:
    """Residual degrees of freedom of n mutually touching cylinders.

    Per-cylinder parameters plus shared ones, minus one contact constraint
    per pair, minus the 6 rigid-body motions.
    """
    if n < 2:
        raise ValueError("need at least two cylinders")
    try:
        params, shared = PROFILES[profile]
    except KeyError:
        raise ValueError(f"unknown profile {profile!r}") from None
    return params * n + shared - n * (n - 1) // 2 - 6


@dataclass(frozen=True)
class InvariantReport:
    """All scalar invariants of one (P, R) pair, plus the mirror values."""

    det_P: int
    invariant: float
    invariant_mirror: float
    invariant_n: float
    invariant_n_mirror: float
    ring_count_per_line: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "det_P": self.det_P,
            "invariant": self.invariant,
            "invariant_mirror": self.invariant_mirror,
            "invariant_n": self.invariant_n,
            "invariant_n_mirror": self.invariant_n_mirror,
            "ring_count_per_line": list(self.ring_count_per_line),
        }


def invariant_report(P, R) -> InvariantReport:
    """Bundle every invariant of a (P, R) pair into one report."""
    Pm = SeidelMatrix(seidel_entries(P))
    Rm = RingMatrix(ring_entries(R))
    return InvariantReport(
        det_P=det_exact(Pm),
        invariant=invariant(Pm, Rm),
        invariant_mirror=invariant(-Pm, Rm),
        invariant_n=invariant_n(Pm, Rm),
        invariant_n_mirror=invariant_n(-Pm, Rm),
        ring_count_per_line=tuple(Rm.rings_per_line()),
    )
