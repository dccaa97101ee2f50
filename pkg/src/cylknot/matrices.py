"""Integer matrix types attached to a line configuration.

Three kinds of square integer matrices classify a configuration: the
chirality matrix (a Seidel adjacency matrix: symmetric, zero diagonal,
off-diagonal +-1), the ring matrix (non-negative counts of enclosing
triangles per view axis, not symmetric in general), and the spirality
matrix (symmetric +-1, independent of line orientations).
"""

from __future__ import annotations

import numpy as np


def max_rings(n: int) -> int:
    """Largest number of triangles that can enclose one line among n.

    Even n: (n-2)(n-1)n/24.  Odd n: (n-3)(n^2-1)/24.
    """
    if n < 3:
        raise ValueError("need at least 3 lines to form a triangle")
    if n % 2 == 0:
        return (n - 2) * (n - 1) * n // 24
    return (n - 3) * (n * n - 1) // 24


def _frozen_int_array(entries) -> np.ndarray:
    A = np.array(entries, dtype=np.int64)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    A.setflags(write=False)
    return A


class _IntMatrix:
    """Shared plumbing: immutable int64 array with equality by entries."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        A = _frozen_int_array(entries)
        self._validate(A)
        object.__setattr__(self, "entries", A)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @staticmethod
    def _validate(A):
        pass

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def __eq__(self, other):
        if isinstance(other, _IntMatrix):
            other = other.entries
        return isinstance(other, np.ndarray) and np.array_equal(self.entries, other)

    def __hash__(self):
        return hash((type(self).__name__, self.entries.tobytes()))

    def __repr__(self):
        rows = "\n ".join(" ".join(f"{v:3d}" for v in row) for row in self.entries)
        return f"{type(self).__name__}(\n {rows}\n)"

    def tolist(self):
        return self.entries.tolist()


class SeidelMatrix(_IntMatrix):
    """Symmetric matrix with zero diagonal and +-1 off-diagonal entries."""

    @staticmethod
    def _validate(A):
        if np.any(np.diagonal(A) != 0):
            raise ValueError("diagonal must be zero")
        if not np.array_equal(A, A.T):
            raise ValueError("matrix must be symmetric")
        off = ~np.eye(A.shape[0], dtype=bool)
        if not np.all(np.abs(A[off]) == 1):
            raise ValueError("off-diagonal entries must be +1 or -1")

    def __neg__(self) -> "SeidelMatrix":
        return SeidelMatrix(-self.entries)

    def submatrix(self, indices) -> "SeidelMatrix":
        idx = list(indices)
        return SeidelMatrix(self.entries[np.ix_(idx, idx)])

    def switched(self, signs) -> "SeidelMatrix":
        """Conjugate by diag(signs); geometrically, reverse line orientations."""
        d = np.asarray(signs, dtype=np.int64)
        if d.shape != (self.n,) or not np.all(np.abs(d) == 1):
            raise ValueError("signs must be a +-1 vector of matching length")
        return SeidelMatrix(d[:, None] * self.entries * d[None, :])

    def permuted(self, order) -> "SeidelMatrix":
        idx = list(order)
        return SeidelMatrix(self.entries[np.ix_(idx, idx)])


class RingMatrix(_IntMatrix):
    """Counts of enclosing triangles: entry (k, i) is the number of
    projected triangles with lateral side i that enclose view axis k."""

    @staticmethod
    def _validate(A):
        if np.any(np.diagonal(A) != 0):
            raise ValueError("diagonal must be zero")
        if np.any(A < 0):
            raise ValueError("entries must be non-negative")
        sums = A.sum(axis=1)
        if np.any(sums % 3 != 0):
            raise ValueError("each row sum must be divisible by 3")
        n = A.shape[0]
        if n >= 3 and np.any(sums // 3 > max_rings(n)):
            raise ValueError("a row exceeds the ring bound for this order")

    def rings_per_line(self) -> list[int]:
        return [int(s) // 3 for s in self.entries.sum(axis=1)]

    def submatrix(self, indices) -> np.ndarray:
        # Plain array: a sliced ring matrix is NOT the ring matrix of the
        # sub-configuration, so do not hand back the validated type.
        idx = list(indices)
        return self.entries[np.ix_(idx, idx)].copy()


class SpiralityMatrix(_IntMatrix):
    """Symmetric +-1 matrix, invariant under per-line orientation flips."""

    _validate = staticmethod(SeidelMatrix._validate)


def seidel_entries(M) -> np.ndarray:
    """Accept a SeidelMatrix or raw array and return validated entries."""
    if isinstance(M, SeidelMatrix):
        return M.entries
    return SeidelMatrix(M).entries


def ring_entries(M) -> np.ndarray:
    if isinstance(M, RingMatrix):
        return M.entries
    return RingMatrix(M).entries
