"""Numerov shooting solver for the radial equation under selectable origin conditions."""

import logging
import math
from collections.abc import Callable

import numpy as np
from numpy.polynomial import polynomial as npoly

from radial import potential
from radial.analytic import morse_level, morse_parameters
from radial.config import Config
from radial.errors import (
    BracketError,
    ConvergenceError,
    DomainError,
    UnsupportedModelError,
)
from radial.frobenius import series_coefficients
from radial.models import (
    BoundaryCondition,
    Morse,
    PotentialModel,
    RadialGrid,
    ShootingResult,
    TaylorSeries,
)
from radial.specfun import integrate_samples

logger = logging.getLogger(__name__)

RESCALE_LIMIT = 1e150
FULL_LINE_SEED = 1e-12
START_SERIES_ORDER = 4
MIN_POINTS = 64
_BRACKET_RETRIES = 6


def _numerov_steps(
    q: list[float], h: float, y0: float, y1: float
) -> tuple[list[float], int]:
    """Run the Numerov recurrence over ``q`` from two starting values.

    Values are rescaled in place whenever they exceed ``RESCALE_LIMIT``, so
    the shape is kept while infinities are avoided.

    Args:
        q: Samples of q(r) in ``u'' = q u``.
        h: Grid step.
        y0: Value at the first sample.
        y1: Value at the second sample.

    Returns:
        ``(samples, nodes)`` where ``nodes`` counts sign changes.
    """
    h12 = h * h / 12.0
    f = [1.0 - h12 * qi for qi in q]
    ys = [y0, y1]
    sign = math.copysign(1.0, y1) if y1 != 0.0 else math.copysign(1.0, y0)
    nodes = 1 if y0 * y1 < 0 else 0
    for i in range(1, len(q) - 1):
        y_next = ((12.0 - 10.0 * f[i]) * ys[i] - f[i - 1] * ys[i - 1]) / f[i + 1]
        if abs(y_next) > RESCALE_LIMIT:
            ys = [y / RESCALE_LIMIT for y in ys]
            y_next /= RESCALE_LIMIT
        if y_next != 0.0 and math.copysign(1.0, y_next) != sign:
            nodes += 1
            sign = -sign
        ys.append(y_next)
    return ys, nodes


def numerov_integrate(
    q: Callable[[np.ndarray], np.ndarray] | np.ndarray,
    grid: RadialGrid,
    y0: float,
    y1: float,
) -> np.ndarray:
    """Integrate ``u'' = q(r) u`` across ``grid`` from two starting values.

    Args:
        q: Function of r, or its samples on ``grid``.
        grid: Uniform grid.
        y0: u at ``grid.r_start``.
        y1: u at ``grid.r_start + h``.

    Returns:
        Samples of u on the grid; their overall scale is arbitrary once a
        rescale has happened.
    """
    if y0 == 0.0 and y1 == 0.0:
        raise DomainError("starting values must not both be zero")
    values = q(grid.points()) if callable(q) else np.asarray(q, dtype=float)
    values = np.broadcast_to(np.asarray(values, dtype=float), (grid.count,))
    samples, _ = _numerov_steps(values.tolist(), grid.h, y0, y1)
    return np.asarray(samples)


def _decay_pad(
    model: PotentialModel,
    hbar: float,
    start: float,
    energy: float,
    direction: float,
    width: float,
    cfg: Config,
) -> float:
    """Distance past a turning point where the WKB decay reaches the target.

    Args:
        model: Potential model.
        hbar: Reduced Planck constant.
        start: Turning point.
        energy: Energy used for the decay rate.
        direction: +1 outward, -1 inward.
        width: Classical width; the pad never exceeds ``width_pad`` widths.
        cfg: Numerical defaults.

    Returns:
        Padding length.
    """
    limit = cfg.width_pad * width
    steps = 256 * max(1, math.ceil(cfg.width_pad))
    dist = np.linspace(limit / steps, limit, steps)
    v = potential.evaluate(model, start + direction * dist)
    kappa = np.sqrt(np.maximum(2.0 * model.m * (v - energy), 0.0)) / hbar
    decay = np.cumsum(kappa) * (limit / steps)
    reached = np.nonzero(decay >= cfg.decay_target)[0]
    return float(dist[reached[0]]) if reached.size else limit


def _step_size(
    model: PotentialModel,
    hbar: float,
    energy: float,
    r_start: float,
    span: float,
    cfg: Config,
) -> float:
    """Default step: span/steps_per_span, capped by the local wavelength.

    Args:
        model: Potential model.
        hbar: Reduced Planck constant.
        energy: Highest energy the grid must resolve.
        r_start: Grid start.
        span: Grid length.
        cfg: Numerical defaults.

    Returns:
        Grid step.
    """
    _, v_min = potential.well_minimum(model)
    k_max = math.sqrt(max(2.0 * model.m * (energy - v_min), 0.0)) / hbar
    h = span / cfg.steps_per_span
    if k_max > 0:
        h = min(h, cfg.max_phase_step / k_max)
    v_edge = max(
        potential.evaluate(model, r_start), potential.evaluate(model, r_start + span)
    )
    q_edge = 2.0 * model.m * (v_edge - v_min) / hbar**2
    if q_edge > 0:
        h = min(h, math.sqrt(6.0 / q_edge))
    return h


def build_grid(
    model: PotentialModel,
    bc: BoundaryCondition,
    hbar: float,
    energy: float,
    h: float | None = None,
    config: Config | None = None,
) -> RadialGrid:
    """Size a grid around the classical region at ``energy``.

    The outer end lies past the outer turning point by the WKB decay length
    (at most ``width_pad`` classical widths). Full-line grids get the same
    padding below the continued inner turning point; the others start at 0.

    Args:
        model: Potential model.
        bc: Origin condition.
        hbar: Reduced Planck constant.
        energy: Highest energy of interest.
        h: Explicit step, or None for the default.
        config: Numerical defaults.

    Returns:
        RadialGrid whose step tiles the interval exactly.
    """
    cfg = config or Config()
    full_line = bc is BoundaryCondition.full_line
    inner, outer = potential.turning_points(model, energy, clamp=not full_line)
    fit = potential.parabolic_fit(model)
    width = max(outer - inner, math.sqrt(hbar / (fit.m * fit.omega)))
    r_end = outer + _decay_pad(model, hbar, outer, energy, +1.0, width, cfg)
    r_start = 0.0
    if full_line:
        r_start = inner - _decay_pad(model, hbar, inner, energy, -1.0, width, cfg)
    span = r_end - r_start
    step = h if h is not None else _step_size(model, hbar, energy, r_start, span, cfg)
    count = max(math.ceil(span / step - 1e-9) + 1, MIN_POINTS)
    if count == MIN_POINTS and h is None:
        step = span / (MIN_POINTS - 1)
    r_end = r_start + (count - 1) * step
    return RadialGrid(r_start=r_start, r_end=r_end, h=step, count=count)


class _Shooter:
    """Outward and inward Numerov integrations of one problem on one grid."""

    def __init__(
        self,
        model: PotentialModel,
        ell: int,
        hbar: float,
        bc: BoundaryCondition,
        grid: RadialGrid,
    ) -> None:
        """Tabulate the effective potential on ``grid``.

        Args:
            model: Potential model.
            ell: Angular momentum quantum number.
            hbar: Reduced Planck constant.
            bc: Origin condition.
            grid: Grid shared by every trial energy.
        """
        self.model = model
        self.ell = ell
        self.hbar = hbar
        self.bc = bc
        self.grid = grid
        self.r = grid.points()
        self.scale = 2.0 * model.m / hbar**2
        self.v = np.zeros_like(self.r)
        if ell > 0:
            self.v[1:] = potential.effective_potential(model, ell, hbar, self.r[1:])
        else:
            self.v = potential.evaluate(model, self.r)
        self.taylor: TaylorSeries = potential.taylor_at_origin(model, START_SERIES_ORDER)
        self.head = max(1, math.ceil(math.sqrt(ell * (ell + 1) / 6.0))) if ell else 0

    def q(self, energy: float) -> list[float]:
        """q(r) = (2m/ħ²)(V_eff − E) on the grid.

        Args:
            energy: Trial energy.

        Returns:
            Samples of q.
        """
        return (self.scale * (self.v - energy)).tolist()

    def _series(self, energy: float, lam: int, radii: list[float]) -> list[float]:
        """Evaluate the low-order Frobenius start at small radii.

        Args:
            energy: Trial energy.
            lam: Indicial root.
            radii: Radii close to the origin.

        Returns:
            Series values.
        """
        sol = series_coefficients(
            self.taylor, self.model.m, self.hbar, self.ell, lam, energy,
            order=START_SERIES_ORDER,
        )
        return [float(npoly.polyval(r, sol.coefficients)) * r**lam for r in radii]

    def outward(self, energy: float, stop: int | None = None) -> tuple[list[float], int]:
        """Integrate from the grid start up to index ``stop`` inclusive.

        Args:
            energy: Trial energy.
            stop: Last index, the grid end when None.

        Returns:
            ``(samples, nodes)``.
        """
        q = self.q(energy)
        end = len(q) if stop is None else stop + 1
        h = self.grid.h
        if self.bc is BoundaryCondition.full_line:
            return _numerov_steps(q[:end], h, 0.0, FULL_LINE_SEED)
        if self.bc is BoundaryCondition.neumann:
            return _numerov_steps(q[:end], h, 1.0, self._series(energy, 0, [h])[0])
        s = self.head
        if s == 0:
            return _numerov_steps(q[:end], h, 0.0, self._series(energy, 1, [h])[0])
        start = self._series(energy, self.ell + 1, [i * h for i in range(1, s + 2)])
        tail, nodes = _numerov_steps(q[s:end], h, start[-2], start[-1])
        return [0.0, *start[:-2], *tail], nodes

    def inward(self, energy: float, stop: int) -> list[float]:
        """Integrate from the grid end down to index ``stop`` inclusive.

        Args:
            energy: Trial energy.
            stop: First index kept.

        Returns:
            Samples on indices ``stop..count-1``.
        """
        q = self.q(energy)[stop:]
        samples, _ = _numerov_steps(q[::-1], self.grid.h, 0.0, FULL_LINE_SEED)
        return samples[::-1]

    def nodes(self, energy: float) -> int:
        """Sign changes of the full outward solution.

        Args:
            energy: Trial energy.

        Returns:
            Node count.
        """
        return self.outward(energy)[1]

    def mismatch(self, energy: float, match: int) -> float:
        """Scaled Wronskian of the outward and inward solutions at ``match``.

        Args:
            energy: Trial energy.
            match: Matching index.

        Returns:
            Casoratian divided by ``h · max|y_out| · max|y_in|``.
        """
        out, _ = self.outward(energy, match + 1)
        inn = self.inward(energy, match)
        casoratian = inn[1] * out[match] - out[match + 1] * inn[0]
        norm = self.grid.h * max(map(abs, out)) * max(map(abs, inn))
        return casoratian / norm


def _isolate(
    shooter: _Shooter, n: int, e_lo: float, e_hi: float, cfg: Config
) -> tuple[float, float, int]:
    """Bisect on node count until the bracket holds exactly level n.

    Args:
        shooter: Problem on its grid.
        n: Target node count.
        e_lo: Lower energy.
        e_hi: Upper energy.
        cfg: Numerical defaults.

    Returns:
        ``(lo, hi, iterations)`` with ``nodes(lo) == n`` and ``nodes(hi) == n+1``.
    """
    n_lo, n_hi = shooter.nodes(e_lo), shooter.nodes(e_hi)
    if n_lo > n or n_hi < n + 1:
        raise BracketError(n, n_lo, n_hi)
    for iteration in range(cfg.max_iterations):
        if n_lo == n and n_hi == n + 1:
            return e_lo, e_hi, iteration
        mid = 0.5 * (e_lo + e_hi)
        n_mid = shooter.nodes(mid)
        if n_mid <= n:
            e_lo, n_lo = mid, n_mid
        else:
            e_hi, n_hi = mid, n_mid
    raise ConvergenceError(f"node bisection did not isolate level n={n}")


def _illinois(
    func: Callable[[float], float], lo: float, hi: float, cfg: Config
) -> tuple[float, int]:
    """Refine a sign change of ``func`` by the Illinois variant of regula falsi.

    Args:
        func: Continuous function with opposite signs at ``lo`` and ``hi``.
        lo: Lower end.
        hi: Upper end.
        cfg: Numerical defaults.

    Returns:
        ``(root, iterations)``.
    """
    f_lo, f_hi = func(lo), func(hi)
    if f_lo == 0.0:
        return lo, 0
    if f_hi == 0.0:
        return hi, 0
    if f_lo * f_hi > 0:
        raise ConvergenceError(f"matching function has no sign change on [{lo}, {hi}]")
    side = 0
    for iteration in range(1, cfg.max_iterations + 1):
        root = (lo * f_hi - hi * f_lo) / (f_hi - f_lo)
        f_root = func(root)
        logger.debug("illinois %d: E=%.15g W=%.3e", iteration, root, f_root)
        if f_root == 0.0 or abs(f_root) < cfg.match_tol:
            return root, iteration
        if f_root * f_lo < 0:
            hi, f_hi = root, f_root
            if side == -1:
                f_lo *= 0.5
            side = -1
        else:
            lo, f_lo = root, f_root
            if side == 1:
                f_hi *= 0.5
            side = 1
        if hi - lo < cfg.energy_tol * max(1.0, abs(root)):
            return root, iteration
    raise ConvergenceError(f"matching did not converge on [{lo}, {hi}]")


def _count_nodes(u: np.ndarray) -> int:
    """Interior sign changes ignoring samples below 1e-10 of the peak.

    Args:
        u: Samples.

    Returns:
        Node count.
    """
    significant = u[np.abs(u) > 1e-10 * np.max(np.abs(u))]
    return int(np.count_nonzero(np.diff(np.sign(significant))))


def _origin_values(
    u: np.ndarray, grid: RadialGrid, bc: BoundaryCondition, ell: int
) -> tuple[float, float]:
    """u(0) and u'(0) of normalized samples.

    Args:
        u: Normalized samples.
        grid: Their grid.
        bc: Origin condition.
        ell: Angular momentum quantum number.

    Returns:
        ``(u0, du0)``.
    """
    h = grid.h
    if bc is BoundaryCondition.dirichlet:
        if ell > 0:
            return 0.0, 0.0
        du0 = (-25 * u[0] + 48 * u[1] - 36 * u[2] + 16 * u[3] - 3 * u[4]) / (12 * h)
        return 0.0, float(du0)
    if bc is BoundaryCondition.neumann:
        return float(u[0]), 0.0
    r = grid.points()
    if not r[0] <= 0.0 <= r[-1]:
        return 0.0, 0.0
    centre = int(np.clip(np.argmin(np.abs(r)), 2, r.size - 3))
    window = slice(centre - 2, centre + 3)
    coeffs = npoly.polyfit(r[window], u[window], 4)
    return float(coeffs[0]), float(coeffs[1])


def _assemble(shooter: _Shooter, energy: float, match: int) -> np.ndarray:
    """Join outward and inward solutions at ``match`` and normalize.

    Args:
        shooter: Problem on its grid.
        energy: Converged energy.
        match: Matching index.

    Returns:
        Normalized samples with the first significant lobe positive.
    """
    out, _ = shooter.outward(energy, match)
    inn = shooter.inward(energy, match)
    ratio = out[match] / inn[0] if inn[0] != 0.0 else 0.0
    u = np.asarray(out[:match] + [ratio * y for y in inn])
    u /= math.sqrt(integrate_samples(shooter.r, u * u))
    first = np.nonzero(np.abs(u) > 1e-3 * np.max(np.abs(u)))[0][0]
    return -u if u[first] < 0 else u


def eigenvalue_search(
    model: PotentialModel,
    ell: int,
    hbar: float,
    bc: BoundaryCondition,
    n: int,
    e_lo: float,
    e_hi: float,
    h: float | None = None,
    config: Config | None = None,
) -> ShootingResult:
    """Find the level with n nodes inside ``[e_lo, e_hi]``.

    Node-count bisection isolates the level, then the outward and inward
    solutions are matched at the outer turning point.

    Args:
        model: Potential model.
        ell: Angular momentum quantum number; ``ell > 0`` needs Dirichlet.
        hbar: Reduced Planck constant.
        bc: Origin condition.
        n: Node count of the wanted level.
        e_lo: Lower bracket energy.
        e_hi: Upper bracket energy.
        h: Explicit grid step.
        config: Numerical defaults.

    Returns:
        Normalized ShootingResult.
    """
    cfg = config or Config()
    if not e_lo < e_hi:
        raise DomainError(f"bracket needs e_lo < e_hi, got [{e_lo}, {e_hi}]")
    if ell > 0 and bc is not BoundaryCondition.dirichlet:
        raise UnsupportedModelError(
            f"ell={ell} is only solvable with the dirichlet condition"
        )
    grid = build_grid(model, bc, hbar, e_hi, h, cfg)
    shooter = _Shooter(model, ell, hbar, bc, grid)
    lo, hi, bisections = _isolate(shooter, n, e_lo, e_hi, cfg)
    _, outer = potential.turning_points(model, 0.5 * (lo + hi))
    match = int(np.clip(np.searchsorted(shooter.r, outer), 2, grid.count - 3))
    energy, refinements = _illinois(lambda e: shooter.mismatch(e, match), lo, hi, cfg)
    u = _assemble(shooter, energy, match)
    nodes = _count_nodes(u)
    if nodes != n:
        raise ConvergenceError(
            f"solution at E={energy:.12g} has {nodes} nodes, wanted {n}"
        )
    u0, du0 = _origin_values(u, grid, bc, ell)
    logger.debug(
        "%s n=%d E=%.15g after %d+%d iterations",
        bc.value, n, energy, bisections, refinements,
    )
    return ShootingResult(
        n=n,
        energy=energy,
        bc=bc,
        ell=ell,
        grid=grid,
        samples=u.tolist(),
        u0=u0,
        du0=du0,
        iterations=bisections + refinements,
    )


def _auto_bracket(
    model: PotentialModel, ell: int, hbar: float, n: int
) -> tuple[float, float]:
    """Energies below and above level n for callers without a bracket.

    Args:
        model: Potential model.
        ell: Angular momentum quantum number.
        hbar: Reduced Planck constant.
        n: Level wanted.

    Returns:
        ``(e_lo, e_hi)``.
    """
    _, v_min = potential.well_minimum(model)
    if isinstance(model, Morse):
        e_n = morse_level(model, hbar, n)
        _, max_n = morse_parameters(model, hbar)
        upper = morse_level(model, hbar, n + 1) if n < max_n else 0.0
        return v_min, 0.5 * (e_n + upper)
    omega = potential.parabolic_fit(model).omega
    return v_min, v_min + (2 * n + ell + 2) * hbar * omega


def find_level(
    model: PotentialModel,
    ell: int,
    hbar: float,
    bc: BoundaryCondition,
    n: int,
    h: float | None = None,
    config: Config | None = None,
) -> ShootingResult:
    """Solve for level n with an automatic bracket.

    The upper energy is widened when it holds too few nodes.

    Args:
        model: Potential model.
        ell: Angular momentum quantum number.
        hbar: Reduced Planck constant.
        bc: Origin condition.
        n: Level wanted.
        h: Explicit grid step.
        config: Numerical defaults.

    Returns:
        Normalized ShootingResult.
    """
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    e_lo, e_hi = _auto_bracket(model, ell, hbar, n)
    for _ in range(_BRACKET_RETRIES):
        try:
            return eigenvalue_search(model, ell, hbar, bc, n, e_lo, e_hi, h, config)
        except BracketError as exc:
            if exc.nodes_hi >= n + 1:
                raise
            e_hi = 0.5 * e_hi if isinstance(model, Morse) else e_hi + (e_hi - e_lo)
            logger.debug("widening bracket for n=%d to e_hi=%.6g", n, e_hi)
    return eigenvalue_search(model, ell, hbar, bc, n, e_lo, e_hi, h, config)


def wronskian_limit(res1: ShootingResult, res2: ShootingResult) -> float:
    """Return ``u1(0)u2'(0) − u2(0)u1'(0)`` from the stored origin values.

    Args:
        res1: First half-line result.
        res2: Second half-line result.

    Returns:
        The Wronskian at the origin.
    """
    if BoundaryCondition.full_line in (res1.bc, res2.bc):
        raise DomainError("the origin is not a boundary of full-line results")
    return res1.u0 * res2.du0 - res2.u0 * res1.du0
