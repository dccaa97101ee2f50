"""File formats: configuration documents, matrix text, reports, meshes.

Configurations are JSON documents with a label and one record per cylinder;
floats are written with 17 significant digits so a write/read round trip is
bit exact.  Matrices use a plain text format: the order on the first line,
then one row of integers per line.
"""

from __future__ import annotations

import json
import math
import os

import numpy as np

from .errors import ParseError
from .geometry import Configuration, EllipticCylinder, OrientedLine, section_frame
from .invariants import InvariantReport

_CYL_FIELDS = ("t", "p", "x", "y", "omega", "a", "b")


def _g17(v: float) -> str:
    return format(float(v), ".17g")


def configuration_text(config: Configuration) -> str:
    lines = ["{", f'  "label": {json.dumps(config.label)},', '  "cylinders": [']
    records = []
    for c in config.cylinders:
        vals = (c.line.t, c.line.p, c.line.x, c.line.y, c.omega, c.a, c.b)
        pairs = ", ".join(f'"{k}": {_g17(v)}' for k, v in zip(_CYL_FIELDS, vals))
        records.append("    {" + pairs + "}")
    lines.append(",\n".join(records))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_configuration(config: Configuration, path) -> None:
    with open(path, "w") as f:
        f.write(configuration_text(config))


def read_configuration(path) -> Configuration:
    try:
        with open(path) as f:
            doc = json.load(f)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read configuration {path}: {exc}") from exc
    try:
        cylinders = tuple(
            EllipticCylinder(
                line=OrientedLine(float(r["t"]), float(r["p"]),
                                  float(r["x"]), float(r["y"])),
                omega=float(r["omega"]), a=float(r["a"]), b=float(r["b"]),
            )
            for r in doc["cylinders"]
        )
        return Configuration(cylinders, label=str(doc.get("label", "")))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed configuration document {path}: {exc}") from exc


def matrix_text(M) -> str:
    A = np.asarray(getattr(M, "entries", M))
    lines = [str(A.shape[0])]
    for row in A:
        lines.append(" ".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"


def write_matrix(M, path) -> None:
    with open(path, "w") as f:
        f.write(matrix_text(M))


def read_matrix(path) -> np.ndarray:
    try:
        with open(path) as f:
            tokens = f.read().split("\n")
    except OSError as exc:
        raise ParseError(f"cannot read matrix {path}: {exc}") from exc
    try:
        n = int(tokens[0].strip())
        rows = []
        for line in tokens[1:]:
            if line.strip():
                rows.append([int(v) for v in line.split()])
        A = np.array(rows, dtype=np.int64)
        if A.shape != (n, n):
            raise ValueError(f"expected {n}x{n}, got {A.shape}")
        return A
    except (ValueError, IndexError) as exc:
        raise ParseError(f"malformed matrix file {path}: {exc}") from exc


def report_text(report: InvariantReport) -> str:
    d = report.as_dict()
    lines = []
    for key, value in d.items():
        if isinstance(value, float):
            lines.append(f"{key} = {_g17(value)}")
        elif isinstance(value, list):
            lines.append(f"{key} = {' '.join(str(v) for v in value)}")
        else:
            lines.append(f"{key} = {value}")
    return "\n".join(lines) + "\n"


def census_table_text(records) -> str:
    header = "invariant\tcount\tknottable\tinvariant_n\tinvariant_n_mirror\tpair_sum"
    lines = [header]
    for r in records:
        lines.append(
            f"{r.invariant:.5f}\t{r.count}\t{int(r.knottable)}\t"
            f"{r.invariant_n:.5f}\t{r.invariant_n_mirror:.5f}\t{r.pair_sum:.5f}"
        )
    return "\n".join(lines) + "\n"


def mesh_text(config: Configuration, length: float, segments: int) -> str:
    """Wavefront-style mesh of the cylinders, sides only, truncated to
    +-length/2 along each axis; deterministic vertex ordering."""
    if segments < 3:
        raise ValueError("segments must be at least 3")
    out = []
    base = 0
    for k, cyl in enumerate(config.cylinders):
        na, nb = section_frame(cyl)
        axis = cyl.direction
        center = cyl.point
        out.append(f"g cylinder_{k}")
        ring = []
        for m in range(segments):
            alpha = 2.0 * math.pi * m / segments
            rho = cyl.a * math.cos(alpha) * na + cyl.b * math.sin(alpha) * nb
            ring.append(rho)
        for s in (-length / 2.0, length / 2.0):
            for rho in ring:
                pt = center + s * axis + rho
                out.append(f"v {_g17(pt[0])} {_g17(pt[1])} {_g17(pt[2])}")
        for m in range(segments):
            m2 = (m + 1) % segments
            a0, a1 = base + 1 + m, base + 1 + m2
            b0, b1 = base + 1 + segments + m, base + 1 + segments + m2
            out.append(f"f {a0} {a1} {b1}")
            out.append(f"f {a0} {b1} {b0}")
        base += 2 * segments
    return "\n".join(out) + "\n"


def write_mesh(config: Configuration, length: float, segments: int, path) -> None:
    with open(path, "w") as f:
        f.write(mesh_text(config, length, segments))
