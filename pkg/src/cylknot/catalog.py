"""Built-in library of published matrices, plus structure search on them.

Names follow the literature convention: K5 is the complete-graph pattern of
five lines, P<det> are chirality matrices labeled by determinant (Pm125 has
determinant minus 125), M11 is the unique order-11 survivor of the forbidden
sub-matrix sieve, and R<order> are ring matrices of specific configurations.

The search half of the module decides switching equivalence of Seidel
matrices, finds switching-equivalent diagonal sub-matrices, locates a
monochromatic five-clique in any matrix of order 19 or more, and applies the
forbidden-structure rules to whole configurations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import OrderError, OrderMismatch
from .exact import det_bareiss
from .geometry import Configuration, EllipticCylinder, OrientedLine
from .matrices import RingMatrix, SeidelMatrix, seidel_entries
from .topomatrix import chirality_matrix, enclosing_triangles


def _ints(block: str) -> np.ndarray:
    rows = [[int(v) for v in line.split()] for line in block.strip().splitlines()]
    return np.array(rows, dtype=np.int64)


def _seidel(block: str) -> SeidelMatrix:
    return SeidelMatrix(_ints(block))


def _ring(block: str) -> RingMatrix:
    return RingMatrix(_ints(block))


# Complete +1 pattern of five lines; with it as a diagonal sub-matrix a
# configuration can never reach mutual touching.
K5 = _seidel("""
0  1  1  1  1
1  0  1  1  1
1  1  0  1  1
1  1  1  0  1
1  1  1  1  0
""")

# Order-7 chirality matrix of determinant 250 (mirror -250); the second
# forbidden pattern for mutual touching.
P250 = _seidel("""
 0  1  1 -1 -1 -1  1
 1  0  1  1  1 -1  1
 1  1  0  1  1 -1  1
-1  1  1  0  1 -1 -1
-1  1  1  1  0  1  1
-1 -1 -1 -1  1  0  1
 1  1  1 -1  1  1  0
""")

# Chirality matrix of the unique knot of seven equal round cylinders
# (determinant 18; the mirror has -18).
P7 = _seidel("""
0  1  1  1  1  1  1
1  0  1  1  1 -1  1
1  1  0 -1 -1 -1  1
1  1 -1  0 -1  1  1
1  1 -1 -1  0  1 -1
1 -1 -1  1  1  0  1
1  1  1  1 -1  1  0
""")

# Ring matrix of that seven-cylinder knot; the all-4 row encodes 8 rings.
R7 = _ring("""
0 1 1 4 1 1 4
4 0 4 4 4 4 4
0 0 0 0 0 0 0
0 0 0 0 0 0 0
1 1 4 4 0 1 1
1 1 1 1 4 0 4
0 0 0 0 0 0 0
""")

# Direction-free companion matrix of P7 (worked construction example).
Q7 = _ints("""
6  4  0  2  0  2  4
4  6  2  0 -2 -2  2
0  2  6 -2  0  2  2
2  0 -2  6 -2  2  4
0 -2  0 -2  6  0  0
2 -2  2  2  0  6  0
4  2  2  4  0  0  6
""")

# The single order-11 chirality matrix free of K5 and P250
# (determinant 57122 = 2 * 13^4).
M11 = _seidel("""
 0  1 -1  1  1 -1  1 -1  1 -1 -1
 1  0  1  1 -1  1 -1  1  1 -1 -1
-1  1  0  1  1  1 -1  1 -1 -1 -1
 1  1  1  0  1  1  1 -1 -1 -1  1
 1 -1  1  1  0  1  1 -1 -1  1 -1
-1  1  1  1  1  0  1  1  1  1  1
 1 -1 -1  1  1  1  0  1  1  1  1
-1  1  1 -1 -1  1  1  0  1  1 -1
 1  1 -1 -1 -1  1  1  1  0 -1  1
-1 -1 -1 -1  1  1  1  1 -1  0 -1
-1 -1 -1  1 -1  1  1 -1  1 -1  0
""")

# Order-8 matrix of determinant 1625 = 13 * 5^3: the only order-8 matrix
# holding four determinant -125 sub-matrices while avoiding K5 and P250.
P1625 = _seidel("""
 0 -1 -1 -1 -1  1 -1 -1
-1  0 -1  1  1  1 -1  1
-1 -1  0 -1 -1 -1 -1  1
-1  1 -1  0 -1  1  1  1
-1  1 -1 -1  0 -1 -1 -1
 1  1 -1  1 -1  0 -1  1
-1 -1 -1  1 -1 -1  0 -1
-1  1  1  1 -1  1 -1  0
""")

# The same class rewritten to expose its four-fold rotation symmetry: two
# monochrome 4x4 diagonal blocks and a single +1 cycling through the
# off-diagonal block.
P1625_C4 = _seidel("""
 0 -1 -1 -1 -1 -1  1 -1
-1  0 -1 -1 -1 -1 -1  1
-1 -1  0 -1  1 -1 -1 -1
-1 -1 -1  0 -1  1 -1 -1
-1 -1  1 -1  0  1  1  1
-1 -1 -1  1  1  0  1  1
 1 -1 -1 -1  1  1  0  1
-1  1 -1 -1  1  1  1  0
""")

# Extreme matrix of order 6 (P^2 = 5I), determinant -125; removing one
# cylinder from each four-fold cycle of P1625_C4 leaves this matrix.
Pm125 = _seidel("""
 0 -1 -1 -1 -1  1
-1  0 -1  1 -1 -1
-1 -1  0 -1  1 -1
-1  1 -1  0  1  1
-1 -1  1  1  0  1
 1 -1 -1  1  1  0
""")

# Ring matrix shared by the only two six-cross classes of determinant -125
# that can reach mutual touching: three knotted lines, three free ones.
R6a = _ring("""
0 1 1 3 3 1
0 0 0 0 0 0
3 1 0 1 1 3
0 0 0 0 0 0
1 3 3 1 0 1
0 0 0 0 0 0
""")

# Ring matrix of the fully knotted six-cross (chiral tetrahedral symmetry,
# the six-piece wooden star); forbidden for mutual touching.
R6b = _ring("""
0 1 3 1 1 3
3 0 1 3 1 1
1 3 0 1 3 1
1 1 3 0 1 3
3 1 1 3 0 1
1 3 1 1 3 0
""")

# Ring matrix of the four-fold symmetric eight-cross built on P1625.
R8 = _ring("""
0 0 0 0 0 0 0 0
5 0 7 7 3 5 3 3
0 0 0 0 0 0 0 0
3 3 5 0 7 7 3 5
0 0 0 0 0 0 0 0
3 5 3 3 5 0 7 7
0 0 0 0 0 0 0 0
7 7 3 5 3 3 5 0
""")

# Chirality matrix (determinant 0) of a knot of nine equal elliptic
# cylinders of aspect ratio 0.025.
P9 = _seidel("""
 0 -1 -1 -1 -1 -1 -1 -1 -1
-1  0 -1 -1  1 -1 -1  1 -1
-1 -1  0  1  1 -1 -1 -1  1
-1 -1  1  0 -1 -1  1 -1  1
-1  1  1 -1  0 -1  1  1  1
-1 -1 -1 -1 -1  0  1 -1  1
-1 -1 -1  1  1  1  0 -1  1
-1  1 -1 -1  1 -1 -1  0  1
-1 -1  1  1  1  1  1  1  0
""")

# Ring matrix of that nine-cylinder knot.
R9 = _ring("""
0  2  2 10  2  5  5  2  2
8  0  7  8  7  8  7  8  7
0  0  0  0  0  0  0  0  0
0  0  0  0  0  0  0  0  0
0  0  0  0  0  0  0  0  0
0  0  0  0  0  0  0  0  0
3  3  6  3  9  9  0  3  6
4  3 12  4  3  3  3  0  4
6  6  6 10 10  5  5  6  0
""")

# Chirality matrix (determinant -25) of the reference ten-cylinder knot,
# recomputed from the solved parameters below; this pair of matrices
# reproduces the knot's published determinant and both scalar invariants.
P10 = _seidel("""
 0  1  1  1  1  1  1  1  1  1
 1  0  1  1  1 -1  1  1 -1  1
 1  1  0 -1 -1 -1  1  1 -1 -1
 1  1 -1  0 -1  1  1 -1 -1 -1
 1  1 -1 -1  0  1 -1 -1  1  1
 1 -1 -1  1  1  0  1 -1 -1 -1
 1  1  1  1 -1  1  0 -1 -1  1
 1  1  1 -1 -1 -1 -1  0 -1  1
 1 -1 -1 -1  1 -1 -1 -1  0  1
 1  1 -1 -1  1 -1  1  1  1  0
""")

# Ring matrix of the reference ten-cylinder knot, recomputed likewise.
R10 = _ring("""
 0  2  2 12  2  2  6  6  2  2
 9  0  9  9  9  9  9  9  9  9
 0  0  0  0  0  0  0  0  0  0
 0  0  0  0  0  0  0  0  0  0
 2  2 12  6  0  2  2  2  6  2
 1  1  1  1  7  0  7  1  1  1
 0  0  0  0  0  0  0  0  0  0
 5  5  7  5  7 13 13  0  7  7
 9  5  5 15  5  9  5  5  0  5
10  6 14  4  8  4  6  4  4  0
""")


@dataclass(frozen=True)
class NamedMatrix:
    """A published matrix with its name and a one-line description."""

    name: str
    matrix: object
    source: str


NAMED_MATRICES: dict[str, NamedMatrix] = {
    m.name: m
    for m in [
        NamedMatrix("K5", K5, "forbidden pattern: complete +1 clique of five lines"),
        NamedMatrix("P250", P250, "forbidden order-7 chirality matrix, determinant 250"),
        NamedMatrix("P7", P7, "chirality matrix of the unique equal-round 7-knot, determinant 18"),
        NamedMatrix("R7", R7, "ring matrix of the unique equal-round 7-knot"),
        NamedMatrix("Q7", Q7, "direction-free companion matrix of P7"),
        NamedMatrix("M11", M11, "only order-11 matrix free of K5 and P250, determinant 57122"),
        NamedMatrix("P1625", P1625, "order-8 matrix of determinant 1625 holding four -125 sub-matrices"),
        NamedMatrix("P1625_C4", P1625_C4, "same switching class as P1625, four-fold symmetric form"),
        NamedMatrix("Pm125", Pm125, "extreme order-6 matrix, determinant -125, P^2 = 5I"),
        NamedMatrix("R6a", R6a, "ring matrix of the knottable determinant -125 six-cross classes"),
        NamedMatrix("R6b", R6b, "ring matrix of the fully knotted six-cross (wooden star)"),
        NamedMatrix("R8", R8, "ring matrix of the four-fold symmetric eight-cross"),
        NamedMatrix("P9", P9, "chirality matrix of the equal-elliptic 9-knot, determinant 0"),
        NamedMatrix("R9", R9, "ring matrix of the equal-elliptic 9-knot"),
        NamedMatrix("P10", P10, "chirality matrix of the reference 10-knot, determinant -25"),
        NamedMatrix("R10", R10, "ring matrix of the reference 10-knot"),
    ]
}


# Solved parameters of the reference ten-cylinder knot: per cylinder the
# direction angles t, p; the puncture point x, y; the roll angle omega; and
# the semi-axes a, b.  Cylinder 0 is the gauge: axis on z through the origin.
TEN_KNOT_PARAMS = [
    # t            p             x              y              omega         a             b
    (0.0,          0.0,          0.0,           0.0,           3.1254845844, 0.8756395562, 0.8756395562),
    (0.8888266921, 4.8105113254, 1.718837714,  -1.0154516939,  3.0137625571, 1.1107047384, 0.7276292249),
    (1.7307454079, 4.3698637441, 15.8387596901, 35.4191212761, 3.798746922,  2.989157107,  1.4262671635),
    (0.6710427219, 2.1610133993, 0.4876982243, -4.7627389073,  2.9915865287, 1.8316025399, 1.3574498777),
    (1.9722582511, 3.3409580456, 6.3213598491, -0.9629547593,  2.460123252,  1.8438264359, 0.8079920149),
    (0.5053571239, 3.5602584953, 3.410770679,   0.0642137547,  3.1415926536, 0.8219266058, 0.4523138356),
    (2.0636231502, -0.0462841434, 4.9265275262, 3.7039199491,  3.1391795035, 3.0522525128, 3.0522524955),
    (2.7052117458, -0.3157789613, 2.3817940085, 0.3228529593,  3.1415926536, 0.2147737114, 0.1709326871),
    (2.3433579644, 4.2721078026, 0.3516109986, -2.2031892116,  1.4094265204, 0.3864418576, 0.010000001),
    (1.1462686715, 3.7874981154, -1.7994972106, -3.0922913208, 1.9871990245, 0.5582558938, 0.0100000003),
]


def ten_knot_configuration() -> Configuration:
    """The reference knot of ten mutually tangent elliptic cylinders."""
    cylinders = tuple(
        EllipticCylinder(line=OrientedLine(t, p, x, y), omega=omega, a=a, b=b)
        for (t, p, x, y, omega, a, b) in TEN_KNOT_PARAMS
    )
    return Configuration(cylinders=cylinders, label="ten-knot")


@dataclass(frozen=True)
class ContainmentWitness:
    """Recipe turning a diagonal sub-matrix into a target matrix.

    Applying switch_signs to the subset sub-matrix and then reordering rows
    and columns by permutation reproduces polarity * target exactly.
    """

    subset: tuple[int, ...]
    switch_signs: tuple[int, ...]
    permutation: tuple[int, ...]
    polarity: int = 1

    def apply(self, M) -> np.ndarray:
        A = seidel_entries(M)
        idx = list(self.subset)
        sub = A[np.ix_(idx, idx)]
        d = np.array(self.switch_signs, dtype=np.int64)
        switched = d[:, None] * sub * d[None, :]
        order = list(self.permutation)
        return switched[np.ix_(order, order)]

    def reproduces(self, M, target) -> bool:
        return np.array_equal(self.apply(M), self.polarity * seidel_entries(target))


def _triple_sign(A, i, j, k) -> int:
    return int(A[i, j] * A[j, k] * A[i, k])


def _vertex_triple_profile(A) -> list[int]:
    # Number of negative triples through each vertex: invariant under
    # switching, permuted along with the vertices.
    n = A.shape[0]
    counts = [0] * n
    for i, j, k in combinations(range(n), 3):
        if _triple_sign(A, i, j, k) < 0:
            counts[i] += 1
            counts[j] += 1
            counts[k] += 1
    return counts


def _switch_signs_for(A_perm, B) -> tuple[int, ...] | None:
    # Signs d with d_r d_c A_perm[r,c] == B[r,c], anchored at d_0 = 1.
    n = B.shape[0]
    d = np.ones(n, dtype=np.int64)
    d[1:] = A_perm[0, 1:] * B[0, 1:]
    if np.array_equal(d[:, None] * A_perm * d[None, :], B):
        return tuple(int(v) for v in d)
    return None


def switching_equivalent(A, B) -> ContainmentWitness | None:
    """Witness that B = D (permuted A) D for some signs D and permutation.

    Exact search: a backtracking assignment of vertices guided by the triple
    products of the two matrices (which classify switching classes), after
    cheap determinant and triple-count prefilters.  Returns None when the
    matrices lie in different classes.
    """
    A = seidel_entries(A)
    B = seidel_entries(B)
    n = A.shape[0]
    if B.shape[0] != n:
        raise OrderMismatch(f"orders differ: {n} vs {B.shape[0]}")
    if det_bareiss(A) != det_bareiss(B):
        return None
    prof_a = _vertex_triple_profile(A)
    prof_b = _vertex_triple_profile(B)
    if sorted(prof_a) != sorted(prof_b):
        return None

    image = [-1] * n  # image[r] = vertex of A playing B's row r
    used = [False] * n

    def extend(r: int) -> bool:
        if r == n:
            return True
        for a_vertex in range(n):
            if used[a_vertex] or prof_a[a_vertex] != prof_b[r]:
                continue
            ok = True
            for c1 in range(r):
                for c2 in range(c1 + 1, r):
                    if _triple_sign(A, image[c1], image[c2], a_vertex) != _triple_sign(
                        B, c1, c2, r
                    ):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                image[r] = a_vertex
                used[a_vertex] = True
                if extend(r + 1):
                    return True
                used[a_vertex] = False
                image[r] = -1
        return False

    if not extend(0):
        return None
    perm = tuple(image)
    A_perm = A[np.ix_(perm, perm)]
    signs = _switch_signs_for(A_perm, B)
    if signs is None:  # n < 3 has no triples; fall back to sign search
        for flip in range(2 ** max(n - 1, 0)):
            d = np.array([1] + [1 - 2 * ((flip >> i) & 1) for i in range(n - 1)])
            if np.array_equal(d[:, None] * A_perm * d[None, :], B):
                signs = tuple(int(v) for v in d)
                break
        if signs is None:
            return None
    # Witness stores signs in subset positions: sign at subset slot perm[r]
    # must equal the sign applied to target row r.
    subset_signs = [0] * n
    for r, a_vertex in enumerate(perm):
        subset_signs[a_vertex] = signs[r]
    return ContainmentWitness(
        subset=tuple(range(n)),
        switch_signs=tuple(subset_signs),
        permutation=perm,
    )


def _monochromatic_subset_witness(A, subset) -> ContainmentWitness | None:
    # Fast test: with d_0 = 1 and d_j = A[s0, sj], the subset is a +1 clique
    # iff all switched products are +1, a -1 clique iff all are -1.
    idx = list(subset)
    sub = A[np.ix_(idx, idx)]
    d = sub[0].copy()
    d[0] = 1
    switched = d[:, None] * sub * d[None, :]
    off = ~np.eye(len(idx), dtype=bool)
    if np.all(switched[off] == 1):
        polarity = 1
    elif np.all(switched[off] == -1):
        # Re-anchor so the witness reproduces -target exactly.
        polarity = -1
    else:
        return None
    return ContainmentWitness(
        subset=tuple(subset),
        switch_signs=tuple(int(v) for v in d),
        permutation=tuple(range(len(idx))),
        polarity=polarity,
    )


def _is_monochromatic_target(T) -> bool:
    off = ~np.eye(T.shape[0], dtype=bool)
    return np.all(T[off] == T[0, 1])


def contains_submatrix(M, T, find_all: bool = False):
    """Diagonal sub-matrix of M switching-equivalent to T, if any.

    Scans index subsets in lexicographic order; with find_all the list of
    every witnessing subset is returned (one witness per subset).  Complete
    +-1 clique targets use a direct sign-consistency test instead of the
    general class search.
    """
    A = seidel_entries(M)
    T = seidel_entries(T)
    n, m = A.shape[0], T.shape[0]
    if m > n:
        raise OrderError(f"target order {m} exceeds matrix order {n}")
    mono = _is_monochromatic_target(T)
    want_polarity = int(T[0, 1]) if mono else 1
    det_t = None if mono else det_bareiss(T)
    found = []
    for subset in combinations(range(n), m):
        if mono:
            w = _monochromatic_subset_witness(A, subset)
            if w is not None and w.polarity == want_polarity:
                w = ContainmentWitness(w.subset, w.switch_signs, w.permutation, 1)
                found.append(w)
        else:
            idx = list(subset)
            sub = A[np.ix_(idx, idx)]
            if det_bareiss(sub) != det_t:
                continue
            inner = switching_equivalent(sub, T)
            if inner is not None:
                perm = tuple(subset[v] for v in inner.permutation)
                signs = inner.switch_signs
                w = ContainmentWitness(
                    subset=tuple(subset),
                    switch_signs=signs,
                    permutation=inner.permutation,
                )
                found.append(w)
        if found and not find_all:
            return found[0]
    if find_all:
        return found
    return None


def find_k5(M) -> ContainmentWitness:
    """Monochromatic five-clique in a Seidel matrix of order >= 19.

    Switch row 0 positive; the remaining order-(n-1) matrix has at least 18
    vertices, so it contains a monochromatic four-clique (Ramsey R(4,4)=18),
    which row 0 extends to a five-clique.  Always succeeds; polarity -1
    marks an all-minus clique (the mirror pattern).
    """
    A = seidel_entries(M)
    n = A.shape[0]
    if n < 19:
        raise OrderError(f"guarantee needs order >= 19, got {n}")
    d = A[0].copy()
    d[0] = 1
    S = d[:, None] * A * d[None, :]
    for quad in combinations(range(1, n), 4):
        vals = [S[i, j] for i, j in combinations(quad, 2)]
        if all(v == 1 for v in vals):
            subset = (0, *quad)
            return ContainmentWitness(
                subset=subset,
                switch_signs=tuple(int(d[i]) for i in subset),
                permutation=tuple(range(5)),
                polarity=1,
            )
        if all(v == -1 for v in vals):
            subset = (0, *quad)
            signs = [-int(d[0])] + [int(d[i]) for i in quad]
            return ContainmentWitness(
                subset=subset,
                switch_signs=tuple(signs),
                permutation=tuple(range(5)),
                polarity=-1,
            )
    raise AssertionError("Ramsey guarantee violated: no monochromatic K4 found")


@dataclass(frozen=True)
class KnottabilityVerdict:
    """Outcome of the forbidden-structure rules on a configuration."""

    kind: str  # possible | forbidden_4cross | forbidden_free5cross | forbidden_submatrix
    subset: tuple[int, ...] | None = None
    matrix_name: str | None = None
    witness: ContainmentWitness | None = None
    note: str = ""

    @property
    def possible(self) -> bool:
        return self.kind == "possible"


def _knottability_from_parts(P: SeidelMatrix, triples_by_view, n: int) -> KnottabilityVerdict:
    triple_sets = {k: set(v) for k, v in triples_by_view.items()}
    # Rule 1: a four-line sub-configuration with two encaged lines can never
    # reach mutual touching (the see-saw obstruction).
    for quad in combinations(range(n), 4):
        members = set(quad)
        encaged = 0
        for k in quad:
            tri = tuple(sorted(members - {k}))
            if tri in triple_sets[k]:
                encaged += 1
        if encaged >= 2:
            return KnottabilityVerdict(
                kind="forbidden_4cross",
                subset=quad,
                note=f"{encaged} encaged lines in the four-line sub-configuration",
            )
    # Rule 2: five lines that are all free among themselves cannot all touch.
    for quint in combinations(range(n), 5):
        members = set(quint)
        if all(
            not any(set(tri) <= members for tri in triple_sets[k]) for k in quint
        ):
            return KnottabilityVerdict(
                kind="forbidden_free5cross",
                subset=quint,
                note="sub-configuration ring matrix recomputed on the subset is zero",
            )
    # Rule 3: forbidden chirality patterns, in either mirror polarity.
    A = P.entries
    for name, target in (("K5", K5), ("P250", P250)):
        if target.n > n:
            continue
        for polarity, label in ((1, name), (-1, name + "_mirror")):
            t = target.entries * polarity
            w = contains_submatrix(A, t)
            if w is not None:
                return KnottabilityVerdict(
                    kind="forbidden_submatrix",
                    subset=w.subset,
                    matrix_name=label,
                    witness=w,
                )
    return KnottabilityVerdict(kind="possible")


def knottability_filter(config: Configuration) -> KnottabilityVerdict:
    """Apply the forbidden-structure rules to a configuration.

    Checks, in order: a four-line sub-configuration with two rings, a
    five-line sub-configuration whose own ring matrix is zero, and the
    forbidden chirality patterns K5 and P250 (either mirror polarity).
    Sub-configuration ring counts are recomputed geometrically on the
    subset, not sliced from the full ring matrix.
    """
    P = chirality_matrix(config)
    triples = enclosing_triangles(config)
    return _knottability_from_parts(P, triples, config.n)
