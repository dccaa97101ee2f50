"""Exception types shared across the package."""


class CylknotError(Exception):
    """Base class for all domain errors raised by cylknot."""


class DegenerateParallel(CylknotError):
    """Two axes are parallel within tolerance; pair quantities are undefined."""

    def __init__(self, i, j, cross_norm):
        self.pair = (i, j)
        self.cross_norm = cross_norm
        super().__init__(
            f"axes {i} and {j} are parallel within tolerance "
            f"(|n_i x n_j| = {cross_norm:.3e})"
        )


class ZeroChirality(CylknotError):
    """A pair of lines intersects, so its handedness sign is undefined."""

    def __init__(self, i, j, value):
        self.pair = (i, j)
        self.value = value
        super().__init__(f"lines {i} and {j} intersect (pair product {value:.3e})")


class IndeterminateContact(CylknotError):
    """The probe direction is orthogonal to the whole cross-section."""


class NotTangent(CylknotError):
    """Contact point requested for a pair that is not tangent."""

    def __init__(self, residual):
        self.residual = residual
        super().__init__(f"surfaces do not meet (closure residual {residual:.3e})")


class DegenerateProjection(CylknotError):
    """A view along one axis hits a parallel or incident projected line."""

    def __init__(self, viewpoint, lines, reason):
        self.viewpoint = viewpoint
        self.lines = tuple(lines)
        super().__init__(
            f"projection along line {viewpoint} degenerate for lines "
            f"{tuple(lines)}: {reason}"
        )


class OrthogonalPair(CylknotError):
    """Two axes are orthogonal within tolerance; spirality is undefined."""

    def __init__(self, i, j, dot):
        self.pair = (i, j)
        super().__init__(
            f"axes {i} and {j} are orthogonal within tolerance (n_i.n_j = {dot:.3e})"
        )


class SingularRingMatrix(CylknotError):
    """The resolvent used by a scalar invariant is exactly singular."""


class OrderMismatch(CylknotError):
    """Matrices passed to a binary operation have different orders."""


class OrderError(CylknotError):
    """A containment target is larger than the matrix searched."""


class DegenerateParams(CylknotError):
    """Construction parameters produce parallel or coincident axes."""


class InfeasibleDof(CylknotError):
    """The requested profile has fewer parameters than contact constraints."""

    def __init__(self, n, profile, count):
        self.n = n
        self.profile = profile
        self.count = count
        super().__init__(
            f"profile {profile!r} with n={n} has {count} degrees of freedom"
        )


class NoConvergence(CylknotError):
    """The solver exhausted its restart budget; carries the best attempt."""

    def __init__(self, best, message="no restart reached tolerance"):
        self.best = best
        super().__init__(message)


class ValidationFailure(CylknotError):
    """A solved configuration failed re-validation; lists offending pairs."""

    def __init__(self, failures):
        self.failures = list(failures)
        super().__init__("; ".join(str(f) for f in self.failures))


class ParseError(CylknotError):
    """A configuration or matrix file could not be parsed."""
