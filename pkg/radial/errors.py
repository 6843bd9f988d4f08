"""Exception hierarchy shared by the solver modules and the CLI."""


class RadialError(Exception):
    """Base class for every error raised by the radial package.

    Attributes:
        exit_code: Process exit status the CLI uses for this error family.
    """

    exit_code = 1


class ConfigError(RadialError, ValueError):
    """Run configuration could not be parsed or validated.

    Attributes:
        line: 1-based line of the offending key, when it came from a file.
        field: Name of the offending key or flag.
    """

    exit_code = 2

    def __init__(
        self, message: str, line: int | None = None, field: str | None = None
    ) -> None:
        """Prefix the message with its line and field.

        Args:
            message: Description of the problem.
            line: Source line, when known.
            field: Offending key or flag.
        """
        self.line = line
        self.field = field
        prefix = ""
        if line is not None:
            prefix += f"line {line}: "
        if field is not None:
            prefix += f"{field}: "
        super().__init__(prefix + message)


class SolverError(RadialError, RuntimeError):
    """A numerical search failed to produce a level."""

    exit_code = 3


class BracketError(SolverError):
    """Energy bracket does not isolate the requested level.

    Attributes:
        n: Requested node count.
        nodes_lo: Node count observed at the lower bracket energy.
        nodes_hi: Node count observed at the upper bracket energy.
    """

    def __init__(self, n: int, nodes_lo: int, nodes_hi: int) -> None:
        """Record the observed node counts.

        Args:
            n: Requested node count.
            nodes_lo: Nodes at the lower energy.
            nodes_hi: Nodes at the upper energy.
        """
        self.n = n
        self.nodes_lo = nodes_lo
        self.nodes_hi = nodes_hi
        super().__init__(
            f"bracket does not isolate level n={n}: "
            f"node counts {nodes_lo} (lower) and {nodes_hi} (upper)"
        )


class ConvergenceError(SolverError):
    """Root refinement ran out of iterations or lost its sign change."""


class DomainError(RadialError, ValueError):
    """Arguments are outside the mathematical domain of an operation."""

    exit_code = 4


class NoBoundStateError(DomainError):
    """Requested level is not bound.

    Attributes:
        n: Requested quantum number.
        max_n: Largest bound quantum number, -1 when none is bound.
    """

    def __init__(self, n: int, max_n: int) -> None:
        """Record the bound range.

        Args:
            n: Requested quantum number.
            max_n: Largest bound quantum number.
        """
        self.n = n
        self.max_n = max_n
        super().__init__(
            f"level n={n} is not bound; bound levels are n <= {max_n}"
        )


class NoClassicalRegionError(DomainError):
    """Energy admits no classically permitted region."""


class SingularityError(DomainError):
    """Evaluation at a singular point of the effective potential."""


class UnsupportedModelError(DomainError):
    """Operation is not defined for the given model or boundary condition."""


class LogResonanceError(DomainError):
    """Frobenius recursion needs logarithmic terms at the resonance index.

    Attributes:
        ell: Angular momentum of the series.
        k: Resonance index 2*ell + 1.
        residual: Nonzero consistency sum found at the resonance.
    """

    def __init__(self, ell: int, k: int, residual: float) -> None:
        """Record where the recursion breaks down.

        Args:
            ell: Angular momentum.
            k: Resonance index.
            residual: Consistency sum.
        """
        self.ell = ell
        self.k = k
        self.residual = residual
        super().__init__(
            f"no pure power series for ell={ell}, lambda={-ell}: "
            f"consistency sum at k={k} is {residual:.6g}"
        )
