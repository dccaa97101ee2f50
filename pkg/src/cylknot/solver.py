"""Numerical construction of mutually tangent cylinder configurations.

Unknowns are packed per constraint profile (round/elliptic, equal/free)
behind a gauge that pins cylinder 0 to the z axis through the origin and
fixes the overall scale.  One signed contact equation per pair is driven to
zero by damped least squares with random restarts; solutions are re-checked
geometrically and classified before being returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InfeasibleDof, NoConvergence, ValidationFailure
from .geometry import (
    HANDEDNESS_SIGN,
    Configuration,
    EllipticCylinder,
    OrientedLine,
)
from .invariants import InvariantReport, dof, invariant_report
from .matrices import RingMatrix, SeidelMatrix, seidel_entries
from .topomatrix import chirality_matrix, ring_matrix

PAIR_PENALTY = 1.0e6
PARALLEL_EPS = 1e-9
ABS_SMOOTHING = 1e-12
# Soft barrier keeping axis pairs away from parallel during optimization;
# purely an optimizer device (validation independently requires
# |n_i x n_j| > 1e-6, and real knots sit far above this floor).
BARRIER_FLOOR = 0.05
BARRIER_WEIGHT = 3.0

_FIELDS = ("t", "p", "x", "y", "om", "la", "lb")

GAUGE_NOTE = ("cylinder 0 on the z axis through the origin; scale unit: "
              "first semi-axis (equal/free-elliptic) or first radius")


@dataclass(frozen=True)
class SolveProblem:
    """Target and budget of one construction run.

    target_P None means free-sign mode: the solver may realize any
    handedness pattern (the absolute-value contact equations, smoothed).
    aspect_ratio fixes b/a in the equal_elliptic profile; leave None to let
    the solver choose it.
    """

    n: int
    profile: str
    target_P: SeidelMatrix | None = None
    aspect_ratio: float | None = None
    seed: int = 0
    max_restarts: int = 100
    max_iterations: int = 400
    tolerance: float = 1e-10
    warm_start: Configuration | None = None

    def __post_init__(self):
        if self.profile not in ("equal_round", "free_round", "equal_elliptic", "free_elliptic"):
            raise ValueError(f"unknown profile {self.profile!r}")
        if self.target_P is not None and self.target_P.n != self.n:
            raise ValueError("target matrix order differs from n")


@dataclass(frozen=True)
class SolveResult:
    config: Configuration
    residual_norm: float
    realized_P: SeidelMatrix
    realized_R: RingMatrix
    report: InvariantReport
    gauge: str = GAUGE_NOTE


@dataclass(frozen=True)
class ValidationReport:
    passed: bool
    max_gap: float
    min_axis_cross: float
    failures: tuple[str, ...]
    report: InvariantReport | None


class _Packing:
    """Maps the flat unknown vector to per-cylinder parameter arrays."""

    def __init__(self, n: int, profile: str, aspect_ratio: float | None):
        self.n = n
        self.profile = profile
        self.aspect_ratio = aspect_ratio
        self.slot = {f: np.full(n, -1, dtype=int) for f in _FIELDS}
        self.shared_lb = -1
        k = 0
        per_cyl = {
            "equal_round": ("t", "p", "x", "y"),
            "free_round": ("t", "p", "x", "y", "la"),
            "equal_elliptic": ("t", "p", "x", "y", "om"),
            "free_elliptic": ("t", "p", "x", "y", "om", "la", "lb"),
        }[profile]
        for i in range(n):
            for f in per_cyl:
                if i == 0 and f in ("t", "p", "x", "y", "la"):
                    continue  # gauge: axis 0 on z through origin, unit scale
                self.slot[f][i] = k
                k += 1
        if profile == "free_elliptic":
            self.slot["lb"][0] = k
            k += 1
        if profile == "equal_elliptic" and aspect_ratio is None:
            self.shared_lb = k
            k += 1
        self.size = k

    def unpack(self, x: np.ndarray):
        n = self.n
        out = {}
        for f, default in (("t", 0.0), ("p", 0.0), ("x", 0.0), ("y", 0.0), ("om", 0.0)):
            idx = self.slot[f]
            vals = np.full(n, default)
            hit = idx >= 0
            vals[hit] = x[idx[hit]]
            out[f] = vals
        if self.profile in ("equal_round",):
            a = np.ones(n)
            b = np.ones(n)
        elif self.profile == "free_round":
            la = np.zeros(n)
            hit = self.slot["la"] >= 0
            la[hit] = x[self.slot["la"][hit]]
            a = b = np.exp(la)
        elif self.profile == "equal_elliptic":
            a = np.ones(n)
            if self.aspect_ratio is not None:
                b = np.full(n, self.aspect_ratio)
            else:
                b = np.full(n, math.exp(x[self.shared_lb]))
        else:  # free_elliptic
            la = np.zeros(n)
            hit = self.slot["la"] >= 0
            la[hit] = x[self.slot["la"][hit]]
            lb = x[self.slot["lb"]]
            a = np.exp(la)
            b = np.exp(lb)
        out["a"] = a
        out["b"] = b
        return out

    def pack_config(self, config: Configuration) -> np.ndarray:
        """Unknown vector for a configuration (gauge-normalized first)."""
        config = gauge_normalize(config)
        x = np.zeros(self.size)
        for i, cyl in enumerate(config.cylinders):
            vals = {
                "t": cyl.line.t, "p": cyl.line.p, "x": cyl.line.x, "y": cyl.line.y,
                "om": cyl.omega, "la": math.log(cyl.a), "lb": math.log(cyl.b),
            }
            for f in _FIELDS:
                k = self.slot[f][i]
                if k >= 0:
                    x[k] = vals[f]
        if self.shared_lb >= 0:
            x[self.shared_lb] = math.log(config.cylinders[0].b / config.cylinders[0].a)
        return x


def gauge_normalize(config: Configuration) -> Configuration:
    """Rigidly move and rescale a configuration into the solver gauge.

    Cylinder 0 ends on the z axis through the origin with unit major
    semi-axis; the contact equations are invariant under all three moves.
    """
    from .geometry import axis_rotation, section_frame

    c0 = config.cylinders[0]
    rot = axis_rotation(c0.line.p, c0.line.t).T  # maps axis 0 to +z
    shift = c0.line.point
    scale = c0.a
    cyls = []
    for cyl in config.cylinders:
        n = rot @ cyl.direction
        point = (rot @ (cyl.point - shift)) / scale
        t = math.acos(max(-1.0, min(1.0, n[2])))
        p = math.atan2(n[1], n[0]) if abs(n[2]) < 1.0 - 1e-15 else 0.0
        # Roll angle in the new frame: decompose the rotated major axis on
        # the new in-section basis.
        na_new = rot @ section_frame(cyl)[0]
        ct, st = math.cos(t), math.sin(t)
        cp, sp = math.cos(p), math.sin(p)
        u = np.array([ct * cp, ct * sp, -st])
        w2 = np.array([-sp, cp, 0.0])
        om = math.atan2(float(na_new @ w2), float(na_new @ u))
        if abs(n[2]) > 1e-15:
            v = point - (point[2] / n[2]) * n
        elif abs(point[2]) < 1e-12:
            v = point
        else:
            raise ValueError("cannot gauge a horizontal line off the z=0 plane")
        cyls.append(
            EllipticCylinder(
                line=OrientedLine(t=t, p=p, x=float(v[0]), y=float(v[1])),
                omega=om, a=cyl.a / scale, b=cyl.b / scale,
            )
        )
    return Configuration(tuple(cyls), label=config.label)


def _geometry_arrays(params):
    t, p, om = params["t"], params["p"], params["om"]
    st, ct = np.sin(t), np.cos(t)
    sp, cp = np.sin(p), np.cos(p)
    so, co = np.sin(om), np.cos(om)
    n = np.stack([st * cp, st * sp, ct], axis=1)
    u = np.stack([ct * cp, ct * sp, -st], axis=1)          # d n / d t
    w2 = np.stack([-sp, cp, np.zeros_like(sp)], axis=1)    # d n / d p / sin t
    m = np.stack([-cp, -sp, np.zeros_like(sp)], axis=1)    # d w2 / d p
    na = u * co[:, None] + w2 * so[:, None]
    nb = -u * so[:, None] + w2 * co[:, None]
    v = np.stack([params["x"], params["y"], np.zeros_like(params["x"])], axis=1)
    return {"n": n, "u": u, "w2": w2, "m": m, "na": na, "nb": nb, "v": v,
            "st": st, "ct": ct, "so": so, "co": co}


def _pair_indices(n: int):
    I, J = np.triu_indices(n, k=1)
    return I, J


def _signs_for(problem: SolveProblem):
    if problem.target_P is None:
        return None
    A = seidel_entries(problem.target_P)
    I, J = _pair_indices(problem.n)
    return A[I, J].astype(float)


def residual_vector(problem: SolveProblem, x: np.ndarray) -> np.ndarray:
    """Signed contact residuals, one per cylinder pair.

    Targeted mode: sign * (half-width sum) - handedness product, per pair.
    Free-sign mode: half-width sum - smoothed |handedness product|.
    Near-parallel pairs contribute a large constant penalty instead.
    """
    pk = _Packing(problem.n, problem.profile, problem.aspect_ratio)
    return _residuals(problem, pk, x)[0]


def residual_jacobian(problem: SolveProblem, x: np.ndarray) -> np.ndarray:
    """Analytic Jacobian of residual_vector (rows: pairs, cols: unknowns)."""
    pk = _Packing(problem.n, problem.profile, problem.aspect_ratio)
    return _residuals(problem, pk, x, want_jacobian=True)[1]


def _residuals(problem, pk, x, want_jacobian=False, normalized=False,
               barrier=False):
    """Contact residuals and their Jacobian.

    With normalized=True every pair equation is divided by |n_i x n_j|,
    turning it into a signed clearance with the dimension of a length.  The
    optimizer uses that form: the raw equations all scale with |n_i x n_j|,
    which rewards collapsing axes toward parallel, a spurious attractor.
    With barrier=True one extra row per pair pushes |n_i x n_j| above a
    small floor (zero whenever the pair is comfortably non-parallel).
    """
    params = pk.unpack(x)
    g = _geometry_arrays(params)
    n_vec, v = g["n"], g["v"]
    a, b = params["a"], params["b"]
    na, nb = g["na"], g["nb"]
    signs = _signs_for(problem)
    I, J = _pair_indices(problem.n)
    npairs = len(I)
    rows = npairs * 2 if barrier else npairs
    res = np.zeros(rows)
    jac = np.zeros((rows, pk.size)) if want_jacobian else None
    sigma = HANDEDNESS_SIGN

    dn = {"t": g["u"], "p": g["w2"] * g["st"][:, None]}
    # Frame derivatives per cylinder.
    dna = {
        "t": -g["n"] * g["co"][:, None],
        "p": g["w2"] * (g["ct"] * g["co"])[:, None] + g["m"] * g["so"][:, None],
        "om": nb,
    }
    dnb = {
        "t": g["n"] * g["so"][:, None],
        "p": -g["w2"] * (g["ct"] * g["so"])[:, None] + g["m"] * g["co"][:, None],
        "om": -na,
    }

    for row in range(npairs):
        i, j = int(I[row]), int(J[row])
        w = np.cross(n_vec[i], n_vec[j])
        wn = np.linalg.norm(w)
        if wn <= PARALLEL_EPS:
            res[row] = PAIR_PENALTY
            if barrier:
                res[npairs + row] = BARRIER_WEIGHT
            continue
        Ai = a[i] * (na[i] @ w)
        Bi = b[i] * (nb[i] @ w)
        Aj = a[j] * (na[j] @ w)
        Bj = b[j] * (nb[j] @ w)
        hi = math.hypot(Ai, Bi)
        hj = math.hypot(Aj, Bj)
        dv = v[i] - v[j]
        rhs = sigma * float(w @ dv)
        if signs is None:
            smooth = math.sqrt(rhs * rhs + ABS_SMOOTHING**2)
            raw = (hi + hj) - smooth
        else:
            raw = signs[row] * (hi + hj) - rhs
        res[row] = raw / wn if normalized else raw
        if not want_jacobian:
            continue

        s_pair = 1.0 if signs is None else signs[row]
        drhs_scale = (rhs / math.sqrt(rhs * rhs + ABS_SMOOTHING**2)) if signs is None else 1.0
        hi_safe = hi if hi > 1e-300 else 1.0
        hj_safe = hj if hj > 1e-300 else 1.0
        need_wgrad = normalized or (barrier and wn < BARRIER_FLOOR)
        wgrad = np.zeros(pk.size) if need_wgrad else None  # d|w|/dtheta row

        def accumulate(cyl, h_own, A_own, B_own, na_own, nb_own, a_own, b_own,
                       h_oth, A_oth, B_oth, na_oth, nb_oth, a_oth, b_oth, dv_sign):
            # Derivatives with respect to cyl's parameters; the partner
            # cylinder only enters through w = n_i x n_j.
            for f in ("t", "p"):
                k = pk.slot[f][cyl]
                if k < 0:
                    continue
                if cyl == i:
                    dw = np.cross(dn[f][cyl], n_vec[j])
                else:
                    dw = np.cross(n_vec[i], dn[f][cyl])
                dA_own = a_own * (dna[f][cyl] @ w + na_own @ dw)
                dB_own = b_own * (dnb[f][cyl] @ w + nb_own @ dw)
                dh_own = (A_own * dA_own + B_own * dB_own) / h_own
                dA_oth = a_oth * (na_oth @ dw)
                dB_oth = b_oth * (nb_oth @ dw)
                dh_oth = (A_oth * dA_oth + B_oth * dB_oth) / h_oth
                drhs = sigma * float(dw @ dv)
                jac[row, k] += s_pair * (dh_own + dh_oth) - drhs_scale * drhs
                if need_wgrad:
                    wgrad[k] += float(w @ dw) / wn
            k = pk.slot["om"][cyl]
            if k >= 0:
                dA_own = a_own * (dna["om"][cyl] @ w)
                dB_own = b_own * (dnb["om"][cyl] @ w)
                jac[row, k] += s_pair * (A_own * dA_own + B_own * dB_own) / h_own
            for f, sgn in (("x", dv_sign), ("y", dv_sign)):
                k = pk.slot[f][cyl]
                if k >= 0:
                    comp = 0 if f == "x" else 1
                    jac[row, k] += -drhs_scale * sigma * sgn * w[comp]
            k = pk.slot["la"][cyl]
            if k >= 0:
                if pk.profile == "free_round":
                    # a and b both carry exp(la): dh/dla = h
                    jac[row, k] += s_pair * h_own
                else:
                    jac[row, k] += s_pair * (A_own * A_own) / h_own
            k = pk.slot["lb"][cyl]
            if k >= 0:
                jac[row, k] += s_pair * (B_own * B_own) / h_own
            if pk.shared_lb >= 0:
                jac[row, pk.shared_lb] += s_pair * (B_own * B_own) / h_own

        accumulate(i, hi_safe, Ai, Bi, na[i], nb[i], a[i], b[i],
                   hj_safe, Aj, Bj, na[j], nb[j], a[j], b[j], 1.0)
        accumulate(j, hj_safe, Aj, Bj, na[j], nb[j], a[j], b[j],
                   hi_safe, Ai, Bi, na[i], nb[i], a[i], b[i], -1.0)
        if want_jacobian and normalized:
            jac[row] = jac[row] / wn - (raw / wn**2) * wgrad
        if barrier and wn < BARRIER_FLOOR:
            res[npairs + row] = BARRIER_WEIGHT * (BARRIER_FLOOR - wn) / BARRIER_FLOOR
            if want_jacobian:
                jac[npairs + row] = -(BARRIER_WEIGHT / BARRIER_FLOOR) * wgrad
    return res, jac


def _length_scale(pk, x) -> float:
    return float(np.max(pk.unpack(x)["a"]))


def _levenberg_marquardt(problem, pk, x0):
    """Damped least squares with multiplicative damping (x3 / /3).

    Runs on the clearance (normalized) residuals.  The damped step solves
    the augmented system [J; sqrt(lam) I] in the least-squares sense, which
    stays well conditioned in the flat gauge directions; a minimum-norm
    Gauss-Newton step is tried as a final polish when damping stagnates.
    """
    x = x0.copy()
    npairs = problem.n * (problem.n - 1) // 2
    res, _ = _residuals(problem, pk, x, normalized=True, barrier=True)
    cost = float(res @ res)
    lam = 1e-3
    m = pk.size
    eye = np.eye(m)
    zeros = np.zeros(m)

    def _converged(r, xx):
        contact_ok = np.max(np.abs(r[:npairs])) < problem.tolerance * _length_scale(pk, xx)
        return contact_ok and np.all(r[npairs:] == 0.0)

    for _ in range(problem.max_iterations):
        if _converged(res, x):
            return x, True
        _, J = _residuals(problem, pk, x, want_jacobian=True, normalized=True,
                          barrier=True)
        accepted = False
        for _ in range(40):
            A = np.vstack([J, math.sqrt(lam) * eye])
            b = -np.concatenate([res, zeros])
            delta = np.linalg.lstsq(A, b, rcond=None)[0]
            trial = x + delta
            tres, _ = _residuals(problem, pk, trial, normalized=True, barrier=True)
            tcost = float(tres @ tres)
            if tcost < cost:
                x, res, cost = trial, tres, tcost
                lam = max(lam / 3.0, 1e-14)
                accepted = True
                break
            lam *= 3.0
            if lam > 1e12:
                break
        if not accepted:
            # Minimum-norm Gauss-Newton polish across the gauge null space.
            delta = np.linalg.lstsq(J, -res, rcond=1e-12)[0]
            tres, _ = _residuals(problem, pk, x + delta, normalized=True,
                                 barrier=True)
            if float(tres @ tres) < cost:
                x = x + delta
                res = tres
                cost = float(tres @ tres)
                continue
            break
    return x, bool(_converged(res, x))


def _decode(problem, pk, x) -> Configuration:
    params = pk.unpack(x)
    cyls = []
    for i in range(problem.n):
        a, b, om = float(params["a"][i]), float(params["b"][i]), float(params["om"][i])
        if b > a:
            a, b = b, a
            om += math.pi / 2.0  # same ellipse, axes relabeled
        cyls.append(
            EllipticCylinder(
                line=OrientedLine(float(params["t"][i]), float(params["p"][i]),
                                  float(params["x"][i]), float(params["y"][i])),
                omega=om, a=a, b=b,
            )
        )
    return Configuration(tuple(cyls), label=f"solved-{problem.profile}-n{problem.n}")


def _random_start(problem, pk, rng) -> np.ndarray:
    x = np.zeros(pk.size)
    for i in range(problem.n):
        k = pk.slot["t"][i]
        if k >= 0:
            x[k] = math.acos(rng.uniform(-1.0, 1.0))
        k = pk.slot["p"][i]
        if k >= 0:
            x[k] = rng.uniform(0.0, 2.0 * math.pi)
        for f in ("x", "y"):
            k = pk.slot[f][i]
            if k >= 0:
                x[k] = rng.uniform(-2.0, 2.0)
        k = pk.slot["om"][i]
        if k >= 0:
            x[k] = rng.uniform(0.0, 2.0 * math.pi)
        k = pk.slot["la"][i]
        if k >= 0:
            x[k] = rng.uniform(math.log(0.3), math.log(1.5))
        k = pk.slot["lb"][i]
        if k >= 0:
            la = x[pk.slot["la"][i]] if pk.slot["la"][i] >= 0 else 0.0
            x[k] = la + rng.uniform(math.log(0.05), 0.0)
    if pk.shared_lb >= 0:
        x[pk.shared_lb] = rng.uniform(math.log(0.05), math.log(0.9))
    return x


def solve(problem: SolveProblem) -> SolveResult:
    """Construct a configuration meeting the contact equations.

    Tries the warm start first when given, then random restarts with
    deterministic per-restart seeds; each converged candidate must pass
    geometric validation (and realize the target matrix, when targeted)
    before being returned.  Raises NoConvergence with the best attempt
    attached once the restart budget is exhausted.
    """
    if problem.target_P is not None and dof(problem.n, problem.profile) < 0:
        raise InfeasibleDof(problem.n, problem.profile, dof(problem.n, problem.profile))
    pk = _Packing(problem.n, problem.profile, problem.aspect_ratio)
    best = None
    best_norm = math.inf
    attempt = 0
    for x0 in _starts(problem, pk):
        attempt += 1
        x, converged = _levenberg_marquardt(problem, pk, x0)
        res, _ = _residuals(problem, pk, x, normalized=True)
        norm = float(np.max(np.abs(res))) / _length_scale(pk, x)
        if converged:
            result = _classify(problem, pk, x, norm)
            if result is not None:
                try:
                    validate(result, target_P=problem.target_P)
                    return result
                except ValidationFailure:
                    pass
        if norm < best_norm:
            best_norm = norm
            best = _classify(problem, pk, x, norm, strict=False)
    raise NoConvergence(best, f"no valid solution in {attempt} starts "
                              f"(best residual {best_norm:.3e})")


def _starts(problem, pk):
    if problem.warm_start is not None:
        yield pk.pack_config(problem.warm_start)
    for k in range(problem.max_restarts):
        rng = np.random.default_rng([problem.seed, k])
        yield _random_start(problem, pk, rng)


def _classify(problem, pk, x, norm, strict=True) -> SolveResult | None:
    from .errors import CylknotError

    try:
        config = _decode(problem, pk, x)
        P = chirality_matrix(config)
        R = ring_matrix(config)
        report = invariant_report(P, R)
    except (CylknotError, ValueError):
        if strict:
            return None
        try:
            config = _decode(problem, pk, x)
        except ValueError:
            return None
        P = R = report = None
    if strict and problem.target_P is not None and P != problem.target_P:
        return None
    return SolveResult(config=config, residual_norm=norm, realized_P=P,
                       realized_R=R, report=report)


def validate(result: SolveResult, target_P: SeidelMatrix | None = None,
             gap_tol: float = 1e-8, cross_tol: float = 1e-6) -> ValidationReport:
    """Re-check a solution geometrically, in extended precision.

    Recomputes every pairwise gap with long doubles and requires
    |gap| < gap_tol * (largest semi-axis), positive semi-axes, and
    non-parallel axes; attaches the invariant report.  Raises
    ValidationFailure listing the offending pairs otherwise.
    """
    cyls = result.config.cylinders
    n = len(cyls)
    ld = np.longdouble
    t = np.array([c.line.t for c in cyls], dtype=ld)
    p = np.array([c.line.p for c in cyls], dtype=ld)
    om = np.array([c.omega for c in cyls], dtype=ld)
    a = np.array([c.a for c in cyls], dtype=ld)
    b = np.array([c.b for c in cyls], dtype=ld)
    x = np.array([c.line.x for c in cyls], dtype=ld)
    y = np.array([c.line.y for c in cyls], dtype=ld)
    st, ct, sp, cp = np.sin(t), np.cos(t), np.sin(p), np.cos(p)
    so, co = np.sin(om), np.cos(om)
    nv = np.stack([st * cp, st * sp, ct], axis=1)
    u = np.stack([ct * cp, ct * sp, -st], axis=1)
    w2 = np.stack([-sp, cp, np.zeros_like(sp)], axis=1)
    na = u * co[:, None] + w2 * so[:, None]
    nb = -u * so[:, None] + w2 * co[:, None]
    v = np.stack([x, y, np.zeros_like(x)], axis=1)
    scale = float(a.max())
    failures = []
    max_gap = 0.0
    min_cross = math.inf
    for i in range(n):
        for j in range(i + 1, n):
            w = np.cross(nv[i], nv[j])
            wn = float(np.sqrt(w @ w))
            min_cross = min(min_cross, wn)
            if wn <= cross_tol:
                failures.append(f"pair ({i},{j}): axes nearly parallel (|cross|={wn:.2e})")
                continue
            hi = np.sqrt((a[i] * (na[i] @ w)) ** 2 + (b[i] * (nb[i] @ w)) ** 2)
            hj = np.sqrt((a[j] * (na[j] @ w)) ** 2 + (b[j] * (nb[j] @ w)) ** 2)
            gap = float(abs(w @ (v[i] - v[j])) - (hi + hj)) / wn
            max_gap = max(max_gap, abs(gap))
            if abs(gap) > gap_tol * scale:
                failures.append(f"pair ({i},{j}): gap {gap:.3e} exceeds {gap_tol * scale:.1e}")
    if np.any(b <= 0):
        failures.append("non-positive semi-axis")
    if target_P is not None and result.realized_P != target_P:
        failures.append("realized chirality matrix differs from the target")
    if failures:
        raise ValidationFailure(failures)
    return ValidationReport(passed=True, max_gap=max_gap, min_axis_cross=min_cross,
                            failures=(), report=result.report)


def plucker_rank_check(config: Configuration) -> list[tuple[tuple[int, ...], float]]:
    """All principal sub-determinants of the normalized pair-product matrix
    for orders 7 and up.

    Any set of lines embeds in the six-dimensional space of line
    coordinates, so every such determinant vanishes (up to rounding) for a
    genuine configuration: 46 values at n=9, 176 at n=10.
    """
    from itertools import combinations

    from .topomatrix import chirality_raw

    raw = chirality_raw(config)
    n = raw.shape[0]
    if n < 7:
        raise ValueError("needs at least 7 lines")
    raw = raw / np.abs(raw).max()
    out = []
    for k in range(7, n + 1):
        for subset in combinations(range(n), k):
            sub = raw[np.ix_(subset, subset)]
            out.append((subset, abs(float(np.linalg.det(sub)))))
    return out
