"""Numerov shooting solver for the radial equation with the full potential.

    u''(r) = [ l(l+1)/r^2 + 2 m (V(r) - E) ] u(r),     m = mu / hbar^2

The outward solution from the origin is counted for nodes; the node count is
non-decreasing in E and jumps from n to n+1 exactly at the n-th eigenvalue of
the box [r_min, r_max] with u(r_max) = 0. Bisection on the node count isolates
that jump, then Brent's method on the sign of u(r_max) pins the energy.

The returned wavefunction is assembled from an outward solve up to the
outermost classical turning point and an inward solve from r_max, since the
outward solution alone is swamped by the growing mode in the forbidden region.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .ansatz import EnergyLevel, QuantumNumbers, RadialFunction, ansatz_energy
from .errors import ConvergenceFailure, DomainError, NetCoulombVanishes, NoBoundState
from .potentials import Form, PotentialParams, effective_potential

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda fn: fn

_RESCALE = 1e200


@njit(cache=True)
def _shoot(w, c, y0, y1):
    """Outward Numerov sweep; returns (sign changes, u at the last point)."""
    nodes = 0
    for i in range(1, w.shape[0] - 1):
        y2 = (c[i] * y1 - w[i - 1] * y0) / w[i + 1]
        if (y2 < 0.0 and y1 > 0.0) or (y2 > 0.0 and y1 < 0.0):
            nodes += 1
        if abs(y2) > _RESCALE:
            y1 /= _RESCALE
            y2 /= _RESCALE
        y0 = y1
        y1 = y2
    return nodes, y1


@njit(cache=True)
def _outward(w, c, y0, y1, stop):
    y = np.zeros(stop + 1)
    y[0] = y0
    y[1] = y1
    for i in range(1, stop):
        y[i + 1] = (c[i] * y[i] - w[i - 1] * y[i - 1]) / w[i + 1]
    return y


@njit(cache=True)
def _inward(w, c, start):
    """Inward sweep from u(r_max) = 0; entries below ``start`` are left at zero."""
    n = w.shape[0]
    y = np.zeros(n)
    y[n - 2] = 1.0
    for i in range(n - 2, start, -1):
        y[i - 1] = (c[i] * y[i] - w[i + 1] * y[i + 1]) / w[i - 1]
        if abs(y[i - 1]) > _RESCALE:
            for j in range(i - 1, n):
                y[j] /= _RESCALE
    return y


@dataclass(frozen=True)
class RadialGrid:
    r_min: float
    r_max: float
    num_points: int

    def __post_init__(self):
        if not (math.isfinite(self.r_min) and math.isfinite(self.r_max)):
            raise ValueError("grid bounds must be finite")
        if not 0 < self.r_min < self.r_max:
            raise ValueError(f"need 0 < r_min < r_max, got {self.r_min}, {self.r_max}")
        if self.r_min > 1e-4 * self.r_max:
            raise ValueError("r_min must be <= 1e-4 * r_max")
        if int(self.num_points) != self.num_points or self.num_points < 1000:
            raise ValueError(f"num_points must be an integer >= 1000, got {self.num_points}")

    @property
    def h(self) -> float:
        return (self.r_max - self.r_min) / (self.num_points - 1)

    def points(self) -> np.ndarray:
        return np.linspace(self.r_min, self.r_max, int(self.num_points))

    def doubled(self) -> "RadialGrid":
        return RadialGrid(self.r_min, self.r_max, 2 * self.num_points)


@dataclass(frozen=True)
class SolverConfig:
    e_lo: float
    e_hi: float
    tol: float = 1e-9
    max_iter: int = 200

    def __post_init__(self):
        if not self.e_lo < self.e_hi:
            raise ValueError(f"need e_lo < e_hi, got {self.e_lo}, {self.e_hi}")
        if not self.tol > 0:
            raise ValueError("tol must be > 0")


@dataclass(frozen=True)
class OracleResult:
    level: EnergyLevel
    node_count: int
    u: RadialFunction
    tail_value: float
    grid: RadialGrid
    bracket: tuple[float, float]
    iterations: int

    @property
    def energy(self) -> float:
        return self.level.value


class _Shooter:
    """Energy-independent pieces of one (potential, l, grid) problem."""

    def __init__(self, params: PotentialParams, l: int, form: Form, grid: RadialGrid):
        self.params = params
        self.l = l
        self.form = form
        self.grid = grid
        self.r = grid.points()
        self.veff = np.asarray(effective_potential(params, l, self.r, form), dtype=float)
        if not np.all(np.isfinite(self.veff)):
            raise DomainError("effective potential is not finite on the grid")
        self.h = self.r[1] - self.r[0]
        self.two_m = 2.0 * params.mass_factor
        # second-order Frobenius start, u ~ r^(l+1) (1 - m Z r / (l+1))
        slope = -params.mass_factor * params.derived.s2 / (l + 1)
        r0, r1 = self.r[0], self.r[1]
        if abs(slope * r1) < 0.5:
            self.y0 = r0 ** (l + 1) * (1.0 + slope * r0)
            self.y1 = r1 ** (l + 1) * (1.0 + slope * r1)
        else:
            self.y0 = r0 ** (l + 1)
            self.y1 = r1 ** (l + 1)
        self.evaluations = 0

    def coefficients(self, energy: float):
        f = (self.h * self.h / 12.0) * self.two_m * (energy - self.veff)
        return 1.0 + f, 2.0 - 10.0 * f

    def shoot(self, energy: float) -> tuple[int, float]:
        self.evaluations += 1
        w, c = self.coefficients(energy)
        nodes, tail = _shoot(w, c, self.y0, self.y1)
        return int(nodes), float(tail)

    def nodes(self, energy: float) -> int:
        return self.shoot(energy)[0]

    def wavefunction(self, energy: float) -> tuple[np.ndarray, float]:
        w, c = self.coefficients(energy)
        npts = self.r.size
        allowed = np.nonzero(self.veff < energy)[0]
        match = int(allowed[-1]) if allowed.size else npts // 2
        match = min(max(match, 2), npts - 3)
        out = _outward(w, c, self.y0, self.y1, match)
        inward = _inward(w, c, match)
        if inward[match] == 0.0:
            raise ConvergenceFailure("inward solution vanishes at the matching point")
        u = inward * (out[match] / inward[match])
        u[: match + 1] = out
        norm = math.sqrt(float(np.trapezoid(u * u, self.r)))
        return u / norm, 1.0 / norm


def _count_sign_changes(u: np.ndarray) -> int:
    s = np.sign(u[1:-1])
    s = s[s != 0]
    return int(np.count_nonzero(s[1:] != s[:-1]))


def solve_bound(params: PotentialParams, qn: QuantumNumbers, form: Form,
                grid: RadialGrid, cfg: SolverConfig) -> OracleResult:
    shooter = _Shooter(params, qn.l, form, grid)
    n = qn.n
    lo, hi = cfg.e_lo, cfg.e_hi
    n_lo, n_hi = shooter.nodes(lo), shooter.nodes(hi)
    if n_lo > n or n_hi <= n:
        raise NoBoundState(
            f"no level with {n} nodes in [{lo:.6g}, {hi:.6g}] (node counts {n_lo}, {n_hi})"
        )

    iterations = 0
    while (n_lo != n or n_hi != n + 1) and hi - lo > cfg.tol:
        iterations += 1
        if iterations > cfg.max_iter:
            raise ConvergenceFailure("node bisection did not isolate the level", bracket=(lo, hi))
        mid = 0.5 * (lo + hi)
        k = shooter.nodes(mid)
        if k > n:
            hi, n_hi = mid, k
        else:
            lo, n_lo = mid, k

    if hi - lo > cfg.tol:
        try:
            energy, info = brentq(lambda e: shooter.shoot(e)[1], lo, hi, xtol=cfg.tol / 4,
                                  rtol=4 * np.finfo(float).eps, maxiter=cfg.max_iter,
                                  full_output=True, disp=False)
        except ValueError as exc:
            raise ConvergenceFailure(str(exc), bracket=(lo, hi)) from exc
        if not info.converged:
            raise ConvergenceFailure("tail-sign refinement did not converge", bracket=(lo, hi))
        iterations += info.iterations
    else:
        energy = 0.5 * (lo + hi)

    u, norm_constant = shooter.wavefunction(energy)
    radial = RadialFunction(grid=shooter.r, values=u, norm_constant=norm_constant, normalizable=True)
    return OracleResult(
        level=EnergyLevel(value=float(energy), qn=qn, method="oracle", params=params),
        node_count=_count_sign_changes(u),
        u=radial,
        tail_value=float(abs(u[-2])),
        grid=grid,
        bracket=(lo, hi),
        iterations=iterations,
    )


def _coulomb_scale(params: PotentialParams) -> float:
    dc = params.derived
    return max(abs(params.c), abs(dc.s1), abs(dc.s2))


def auto_grid(params: PotentialParams, qn: QuantumNumbers, e_guess: float,
              form: Form = "full") -> RadialGrid:
    """Uniform grid reaching 35 decay lengths past the origin.

    The decay constant is kappa = sqrt(2 mu (a - e_guess)) / hbar. Spacing keeps
    h * kappa < 0.01 and h below 1% of the Bohr radius of the 1/r strengths.
    For the expanded potential r_max is capped at 2 / alpha.
    """
    if not e_guess < params.a:
        raise ValueError(f"e_guess must lie below the asymptote a={params.a}, got {e_guess}")
    kappa = math.sqrt(2.0 * params.mu * (params.a - e_guess)) / params.hbar
    r_max = 35.0 / kappa
    if form == "expanded" and params.alpha > 0:
        r_max = min(r_max, 2.0 / params.alpha)
    r_min = min(1e-6, 1e-4 * r_max)
    h = 0.01 / kappa
    z = _coulomb_scale(params)
    if z > 0:
        h = min(h, 0.01 / (params.mass_factor * z))
    num_points = max(1000, math.ceil((r_max - r_min) / h) + 2)
    return RadialGrid(r_min=r_min, r_max=r_max, num_points=min(num_points, 2_000_000))


def default_bracket(params: PotentialParams, l: int, form: Form, grid: RadialGrid) -> tuple[float, float]:
    """Energy window certain to contain every bound level below the asymptote a.

    Uses V >= a - Z/r with Z the summed attractive 1/r strengths, whose
    hydrogenic ground state bounds the spectrum from below.
    """
    dc = params.derived
    m = params.mass_factor
    if form == "full":
        z = max(params.c, 0.0) + max(dc.s1, 0.0)
        e_lo = params.a - 0.5 * m * z * z
    else:
        r = grid.points()
        x = params.alpha * r
        extra = dc.s1 * params.alpha * (1.0 - x / 2.0 + x * x / 6.0)
        z = max(dc.s2, 0.0)
        e_lo = params.a - 0.5 * m * z * z + min(float(extra.min()), 0.0)
    e_lo -= 1e-6 * (1.0 + abs(e_lo))
    return e_lo, params.a


def bracket_scan(params: PotentialParams, l: int, form: Form, grid: RadialGrid,
                 e_range: tuple[float, float], steps: int = 100) -> list[tuple[tuple[float, float], int]]:
    """Sweep energies and report every interval where the node count jumps.

    Each entry is ((E_lo, E_hi), n): the interval holds the level with n nodes.
    """
    if steps < 10:
        raise ValueError("steps must be >= 10")
    shooter = _Shooter(params, l, form, grid)
    energies = np.linspace(e_range[0], e_range[1], steps + 1)
    counts = [shooter.nodes(float(e)) for e in energies]
    found = []
    for i in range(steps):
        for k in range(counts[i], counts[i + 1]):
            found.append(((float(energies[i]), float(energies[i + 1])), k))
    return found


def _initial_guess(params: PotentialParams, qn: QuantumNumbers) -> float:
    guesses = []
    try:
        guesses.append(ansatz_energy(params, qn).value)
    except NetCoulombVanishes:
        pass
    m = params.mass_factor
    for z in (params.derived.s2, params.c, -params.d):
        if z > 0:
            guesses.append(params.a - 0.5 * m * z * z / qn.principal**2)
    below = [g for g in guesses if g < params.a]
    if not below:
        raise NoBoundState("potential has no attractive 1/r tail to bind a level")
    return min(below)


def solve_level(params: PotentialParams, qn: QuantumNumbers, form: Form = "full",
                tol: float = 1e-9, max_iter: int = 200, e_guess: float | None = None) -> OracleResult:
    """solve_bound with an automatic grid and bracket.

    The grid is rebuilt around the solved energy until it is at least as
    wide and as fine as auto_grid would pick for that energy.
    """
    guess = _initial_guess(params, qn) if e_guess is None else e_guess
    grid = auto_grid(params, qn, guess, form)
    for _ in range(6):
        cfg = SolverConfig(*default_bracket(params, qn.l, form, grid), tol=tol, max_iter=max_iter)
        result = solve_bound(params, qn, form, grid, cfg)
        e = result.energy
        if not e < params.a:
            break
        wanted = auto_grid(params, qn, e, form)
        if wanted.r_max <= grid.r_max * (1 + 1e-9) and grid.h <= wanted.h * (1 + 1e-9):
            break
        r_min = min(grid.r_min, wanted.r_min)
        r_max = max(grid.r_max, wanted.r_max)
        h = min(grid.h, wanted.h)
        grid = RadialGrid(r_min, r_max, max(1000, math.ceil((r_max - r_min) / h) + 1))
    return result
