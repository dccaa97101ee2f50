"""Extraction of the characteristic matrices of a configuration.

Four matrices are read off a configuration of oriented lines: the raw pair
handedness matrix, its sign (the chirality matrix), the ring matrix of
enclosing projected triangles, and the spirality matrix.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .errors import DegenerateProjection, OrthogonalPair, ZeroChirality
from .geometry import PARALLEL_TOL, Configuration, HANDEDNESS_SIGN
from .matrices import RingMatrix, SeidelMatrix, SpiralityMatrix

# A projected view is rejected when two projected lines are parallel within
# this tolerance or the view point sits this close to a projected line.
PROJECTION_TOL = 1e-9

INTERSECTION_TOL = 1e-12


def _lines_of(config) -> tuple[np.ndarray, np.ndarray]:
    if isinstance(config, Configuration):
        return config.points(), config.directions()
    points, directions = config
    return np.asarray(points, dtype=float), np.asarray(directions, dtype=float)


def chirality_raw(config) -> np.ndarray:
    """Symmetric matrix of raw pair products (n_i x n_j).(v_i - v_j).

    Accepts a Configuration or a (points, directions) pair of arrays.  The
    matrix has rank at most 6 for any set of lines, so its determinant
    vanishes for seven or more lines.
    """
    points, dirs = _lines_of(config)
    n = len(points)
    out = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            w = np.cross(dirs[i], dirs[j])
            wn = np.linalg.norm(w)
            if wn <= PARALLEL_TOL:
                from .errors import DegenerateParallel

                raise DegenerateParallel(i, j, wn)
            out[i, j] = out[j, i] = HANDEDNESS_SIGN * float(w @ (points[i] - points[j]))
    return out


def chirality_matrix(config, zero_tol: float = 1e-12) -> SeidelMatrix:
    """Sign of the raw handedness matrix, entry by entry."""
    raw = chirality_raw(config)
    n = raw.shape[0]
    entries = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            v = raw[i, j]
            if abs(v) < zero_tol:
                raise ZeroChirality(i, j, v)
            entries[i, j] = entries[j, i] = 1 if v > 0 else -1
    return SeidelMatrix(entries)


def spirality_matrix(config, ortho_tol: float = 1e-12) -> SpiralityMatrix:
    """Orientation-free handedness: -P_ij * sign(n_i . n_j).

    Reversing any line's stored orientation flips both factors, so the
    matrix is unchanged.
    """
    points, dirs = _lines_of(config)
    P = chirality_matrix((points, dirs)).entries
    n = len(points)
    entries = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            d = float(dirs[i] @ dirs[j])
            if abs(d) < ortho_tol:
                raise OrthogonalPair(i, j, d)
            s = -P[i, j] * (1 if d > 0 else -1)
            entries[i, j] = entries[j, i] = s
    return SpiralityMatrix(entries)


def _projection_basis(n_k: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # Any orthonormal pair spanning the plane orthogonal to n_k works; the
    # ring matrix is basis independent.
    pick = np.array([1.0, 0.0, 0.0]) if abs(n_k[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    e1 = np.cross(n_k, pick)
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(n_k, e1)
    return e1, e2


def projected_view(points, dirs, k, tol=PROJECTION_TOL):
    """Project all other lines on the plane orthogonal to line k.

    Returns (others, q, d): the original indices, 2D points, and 2D
    directions of the projected lines, with the view axis at the origin.
    Raises DegenerateProjection when a projected line passes through the
    origin or two projected lines are parallel, both within tol.
    """
    n_k = dirs[k]
    e1, e2 = _projection_basis(n_k)
    others = [m for m in range(len(points)) if m != k]
    q = np.empty((len(others), 2))
    d = np.empty((len(others), 2))
    for row, m in enumerate(others):
        rel = points[m] - points[k]
        q[row] = (rel @ e1, rel @ e2)
        dm = np.array([dirs[m] @ e1, dirs[m] @ e2])
        norm = np.linalg.norm(dm)
        if norm <= tol:
            raise DegenerateProjection(k, (m,), "projected direction vanishes")
        d[row] = dm / norm
        # Distance from the view point (origin) to the projected line.
        dist = abs(d[row, 0] * q[row, 1] - d[row, 1] * q[row, 0])
        if dist <= tol:
            raise DegenerateProjection(k, (m,), "view point lies on a projected line")
    for r1 in range(len(others)):
        for r2 in range(r1 + 1, len(others)):
            cross = abs(d[r1, 0] * d[r2, 1] - d[r1, 1] * d[r2, 0])
            if cross <= tol:
                raise DegenerateProjection(
                    k, (others[r1], others[r2]), "projected lines are parallel"
                )
    return others, q, d


def _origin_in_triangle(q, d, rows) -> bool:
    # The origin lies strictly inside the triangle bounded by three lines
    # iff, for each line, it is on the same side as the opposite vertex.
    for m in rows:
        j, l = [r for r in rows if r != m]
        denom = d[j, 0] * d[l, 1] - d[j, 1] * d[l, 0]
        diff = q[l] - q[j]
        tj = (diff[0] * d[l, 1] - diff[1] * d[l, 0]) / denom
        vx = q[j, 0] + tj * d[j, 0]
        vy = q[j, 1] + tj * d[j, 1]
        side_origin = d[m, 0] * (-q[m, 1]) - d[m, 1] * (-q[m, 0])
        side_vertex = d[m, 0] * (vy - q[m, 1]) - d[m, 1] * (vx - q[m, 0])
        if side_origin * side_vertex <= 0.0:
            return False
    return True


def enclosing_triangles(config, tol=PROJECTION_TOL) -> dict[int, list[tuple[int, int, int]]]:
    """For each view axis k, the triples of other lines whose projected
    triangle strictly encloses it.

    This is the per-triple form of the ring matrix; sub-configuration ring
    counts are sums over the triples falling inside the subset.
    """
    points, dirs = _lines_of(config)
    n = len(points)
    out = {}
    for k in range(n):
        others, q, d = projected_view(points, dirs, k, tol)
        hits = []
        for rows in combinations(range(len(others)), 3):
            if _origin_in_triangle(q, d, rows):
                hits.append(tuple(others[r] for r in rows))
        out[k] = hits
    return out


def ring_matrix(config, tol=PROJECTION_TOL) -> RingMatrix:
    """Counts of projected triangles enclosing each view axis.

    Entry (k, i) counts the triangles with lateral side i (formed with two
    further lines) that strictly contain the projection point of line k; a
    row sum is three times the number of rings around line k.
    """
    points, dirs = _lines_of(config)
    return ring_matrix_from_triples(enclosing_triangles((points, dirs), tol),
                                    len(points))


def ring_matrix_from_triples(triples_by_view, n: int) -> RingMatrix:
    """Assemble the ring matrix from precomputed enclosing triples."""
    entries = np.zeros((n, n), dtype=np.int64)
    for k, triples in triples_by_view.items():
        for tri in triples:
            for i in tri:
                entries[k, i] += 1
    return RingMatrix(entries)


def subset_ring_counts(triples_by_view, subset) -> np.ndarray:
    """Ring matrix of a sub-configuration, from precomputed triple data.

    Triangle containment depends only on the four lines involved, so the
    sub-configuration's ring matrix is the triple count restricted to the
    subset (NOT a slice of the full ring matrix).
    """
    idx = {g: s for s, g in enumerate(subset)}
    m = len(subset)
    entries = np.zeros((m, m), dtype=np.int64)
    members = set(subset)
    for k in subset:
        for tri in triples_by_view[k]:
            if all(t in members for t in tri):
                for i in tri:
                    entries[idx[k], idx[i]] += 1
    return entries
