"""Oriented lines, elliptic cylinders, and pairwise contact metrics.

A line is stored as two spherical angles (t, p) for its unit direction and
the point (x, y, 0) where it punctures the z=0 plane.  An elliptic cylinder
adds a roll angle omega about the axis and semi-axes a >= b > 0; round
cylinders are the a == b case.  All lengths are unit-free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import DegenerateParallel, IndeterminateContact, NotTangent

# Pairs with |n_i x n_j| at or below this are treated as parallel, never as
# zero-handedness: every pair formula divides by this magnitude implicitly.
PARALLEL_TOL = 1e-9

# Global sign of the pair handedness product: the raw value is
# HANDEDNESS_SIGN * (n_i x n_j).(v_i - v_j).  The counterclockwise picture
# fixes handedness only relative to a frame convention, so the sign is
# calibrated once against the reference ten-knot, whose published scalar
# invariants (direct vs mirror) single out -1.
HANDEDNESS_SIGN = -1.0


def direction_vector(t: float, p: float) -> np.ndarray:
    """Unit direction (sin t cos p, sin t sin p, cos t)."""
    st = math.sin(t)
    return np.array([st * math.cos(p), st * math.sin(p), math.cos(t)])


def axis_rotation(p: float, t: float) -> np.ndarray:
    """Rotation Rz(p) @ Ry(t) mapping +z to direction_vector(t, p)."""
    cp, sp = math.cos(p), math.sin(p)
    ct, st = math.cos(t), math.sin(t)
    rz = np.array([[cp, -sp, 0.0], [sp, cp, 0.0], [0.0, 0.0, 1.0]])
    ry = np.array([[ct, 0.0, st], [0.0, 1.0, 0.0], [-st, 0.0, ct]])
    return rz @ ry


@dataclass(frozen=True)
class OrientedLine:
    """An oriented line: direction angles plus its puncture of the z=0 plane."""

    t: float
    p: float
    x: float = 0.0
    y: float = 0.0

    @property
    def direction(self) -> np.ndarray:
        return direction_vector(self.t, self.p)

    @property
    def point(self) -> np.ndarray:
        return np.array([self.x, self.y, 0.0])

    @staticmethod
    def from_direction(n, point=(0.0, 0.0, 0.0)) -> "OrientedLine":
        """Build from a direction vector and any point on the line.

        The line must not be horizontal off the z=0 plane, since the stored
        point is its z=0 puncture.
        """
        n = np.asarray(n, dtype=float)
        n = n / np.linalg.norm(n)
        point = np.asarray(point, dtype=float)
        t = math.acos(max(-1.0, min(1.0, n[2])))
        p = math.atan2(n[1], n[0]) if abs(n[2]) < 1.0 else 0.0
        if abs(n[2]) < 1e-15:
            if abs(point[2]) > 1e-12:
                raise ValueError("horizontal line never punctures the z=0 plane")
            v = point
        else:
            v = point - (point[2] / n[2]) * n
        return OrientedLine(t=t, p=p, x=float(v[0]), y=float(v[1]))


@dataclass(frozen=True)
class EllipticCylinder:
    """An infinite cylinder with elliptic cross-section around a line."""

    line: OrientedLine
    omega: float = 0.0
    a: float = 1.0
    b: float = 1.0

    def __post_init__(self):
        if not (self.a >= self.b > 0.0):
            raise ValueError(f"semi-axes must satisfy a >= b > 0, got {self.a}, {self.b}")

    @property
    def direction(self) -> np.ndarray:
        return self.line.direction

    @property
    def point(self) -> np.ndarray:
        return self.line.point

    @property
    def is_round(self) -> bool:
        return self.a == self.b

    def surface_point(self, alpha: float, s: float = 0.0) -> np.ndarray:
        na, nb = section_frame(self)
        return (
            self.point
            + s * self.direction
            + self.a * math.cos(alpha) * na
            + self.b * math.sin(alpha) * nb
        )


def round_cylinder(t, p, x, y, r) -> EllipticCylinder:
    return EllipticCylinder(line=OrientedLine(t, p, x, y), omega=0.0, a=r, b=r)


@dataclass(frozen=True)
class Configuration:
    """An ordered collection of cylinders sharing one coordinate frame."""

    cylinders: tuple[EllipticCylinder, ...]
    label: str = ""

    def __post_init__(self):
        cyls = tuple(self.cylinders)
        if len(cyls) < 2:
            raise ValueError("a configuration needs at least 2 cylinders")
        object.__setattr__(self, "cylinders", cyls)

    def __len__(self) -> int:
        return len(self.cylinders)

    @property
    def n(self) -> int:
        return len(self.cylinders)

    def directions(self) -> np.ndarray:
        return np.array([c.direction for c in self.cylinders])

    def points(self) -> np.ndarray:
        return np.array([c.point for c in self.cylinders])

    def degenerate_pairs(self, tol: float = PARALLEL_TOL) -> list[tuple[int, int]]:
        """Pairs whose axes are parallel within tol; nonempty flags the
        configuration degenerate."""
        ns = self.directions()
        bad = []
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if np.linalg.norm(np.cross(ns[i], ns[j])) <= tol:
                    bad.append((i, j))
        return bad

    @property
    def is_degenerate(self) -> bool:
        return bool(self.degenerate_pairs())


def section_frame(cyl: EllipticCylinder) -> tuple[np.ndarray, np.ndarray]:
    """Unit vectors along the major and minor semi-axes of the cross-section.

    Both are orthogonal to the axis direction; the roll angle omega turns the
    pair (major toward minor) inside the cross-section plane.
    """
    rot = axis_rotation(cyl.line.p, cyl.line.t)
    co, so = math.cos(cyl.omega), math.sin(cyl.omega)
    na = rot @ np.array([co, so, 0.0])
    nb = rot @ np.array([-so, co, 0.0])
    return na, nb


def chirality_product(li: OrientedLine, lj: OrientedLine, indices=(0, 1)) -> float:
    """Raw handedness of a line pair: (n_i x n_j).(v_i - v_j).

    Antisymmetric under swapping either the arguments or the cross product
    alone; swapping both (as a swap of the pair does) leaves it unchanged,
    so the assembled matrix is symmetric.
    """
    ni, nj = li.direction, lj.direction
    w = np.cross(ni, nj)
    wn = np.linalg.norm(w)
    if wn <= PARALLEL_TOL:
        raise DegenerateParallel(indices[0], indices[1], wn)
    return HANDEDNESS_SIGN * float(w @ (li.point - lj.point))


def half_width(cyl: EllipticCylinder, w) -> float:
    """Support half-width of the cross-section along w.

    Equals max over alpha of |w . rho(alpha)| for the elliptic section
    rho = a*Na*cos(alpha) + b*Nb*sin(alpha); in closed form
    sqrt(a^2 (Na.w)^2 + b^2 (Nb.w)^2).  For a round cylinder and w
    orthogonal to the axis this is r |w|.
    """
    w = np.asarray(w, dtype=float)
    na, nb = section_frame(cyl)
    return math.hypot(cyl.a * float(na @ w), cyl.b * float(nb @ w))


def contact_alpha(cyl: EllipticCylinder, w) -> float:
    """Section angle alpha maximizing w . rho(alpha).

    The opposite tangency point is alpha + pi.  At the returned angle the
    section tangent d(rho)/d(alpha) is orthogonal to w.
    """
    w = np.asarray(w, dtype=float)
    na, nb = section_frame(cyl)
    A = cyl.a * float(na @ w)
    B = cyl.b * float(nb @ w)
    scale = max(cyl.a, cyl.b) * float(np.linalg.norm(w))
    if math.hypot(A, B) <= 1e-14 * max(scale, 1e-300):
        raise IndeterminateContact(
            "probe direction is orthogonal to the whole cross-section"
        )
    return math.atan2(B, A)


def _pair_normal(ci: EllipticCylinder, cj: EllipticCylinder, indices) -> np.ndarray:
    w = np.cross(ci.direction, cj.direction)
    wn = np.linalg.norm(w)
    if wn <= PARALLEL_TOL:
        raise DegenerateParallel(indices[0], indices[1], wn)
    return w


def tangency_gap(ci: EllipticCylinder, cj: EllipticCylinder, indices=(0, 1)) -> float:
    """Projected clearance of a cylinder pair along the common normal.

    Viewed along the plane spanned by the two axes, the cylinders are two
    stripes; the gap is the distance between the projected axes minus the sum
    of the stripe half-widths.  Positive means separated, zero tangent,
    negative overlapping.  The returned value carries a factor |n_i x n_j|.
    """
    w = _pair_normal(ci, cj, indices)
    sep = abs(float(w @ (ci.point - cj.point)))
    return sep - (half_width(ci, w) + half_width(cj, w))


def signed_tangency_residual(
    ci: EllipticCylinder, cj: EllipticCylinder, target_sign: int, indices=(0, 1)
) -> float:
    """Signed contact equation for one pair.

    target_sign * (half widths sum) - (n_i x n_j).(v_i - v_j): zero exactly
    when the pair is tangent AND realizes the requested handedness sign.
    """
    w = _pair_normal(ci, cj, indices)
    widths = half_width(ci, w) + half_width(cj, w)
    rhs = HANDEDNESS_SIGN * float(w @ (ci.point - cj.point))
    return target_sign * widths - rhs


def contact_point(
    ci: EllipticCylinder, cj: EllipticCylinder, indices=(0, 1), residual_tol=1e-4
) -> np.ndarray:
    """Common point of a tangent pair.

    Picks the section angle on each cylinder facing the other one, then
    closes the two surface curves with a least-squares solve along the axes.
    """
    w = _pair_normal(ci, cj, indices)
    d = float(w @ (ci.point - cj.point))
    side = 1.0 if d > 0 else -1.0
    # Contact offsets point from each axis toward the other cylinder.
    ai = contact_alpha(ci, -side * w)
    aj = contact_alpha(cj, side * w)
    nai, nbi = section_frame(ci)
    naj, nbj = section_frame(cj)
    rho_i = ci.a * math.cos(ai) * nai + ci.b * math.sin(ai) * nbi
    rho_j = cj.a * math.cos(aj) * naj + cj.b * math.sin(aj) * nbj
    ni, nj = ci.direction, cj.direction
    A = np.column_stack([ni, -nj])
    rhs = (cj.point + rho_j) - (ci.point + rho_i)
    (si, sj), *_ = np.linalg.lstsq(A, rhs, rcond=None)
    pi = ci.point + si * ni + rho_i
    pj = cj.point + sj * nj + rho_j
    residual = float(np.linalg.norm(pi - pj))
    if residual > residual_tol:
        raise NotTangent(residual)
    return 0.5 * (pi + pj)


def mirror(config: Configuration) -> Configuration:
    """Point-reflect the configuration: negate every puncture point,
    preserving directions, rolls, and semi-axes.

    The image of every cylinder pair has the opposite handedness, so the
    chirality matrix flips sign while ring counts are preserved.
    """
    flipped = tuple(
        replace(c, line=replace(c.line, x=-c.line.x, y=-c.line.y))
        for c in config.cylinders
    )
    return Configuration(cylinders=flipped, label=config.label)
