"""Closed-form bound states from the exponential ansatz.

The reduced radial function is written u(r) = f(r) exp(g(r)) with

    g(r) = -A r^2 / 2 + B r + delta ln r

and the Taylor-expanded potential is inserted into the radial equation.
Matching powers of r gives

    r^-2 :  delta (delta - 1) = l (l + 1)            ->  delta = l + 1
    r^-1 :  B delta = -m (ab + c - d)
    r^1  :  A B     =  m (ab - d) alpha^2 / 2
    r^2  :  A^2     =  m (ab - d) alpha^3 / 3
    r^0  :  energy

with m = mu / hbar^2. The r^1 and r^2 lines both fix A; the energy formulas
follow from the r^1 line, so that one is used and the r^2 mismatch is kept as
``AnsatzParams.residual``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .errors import NetCoulombVanishes, UnsupportedExcitedWavefunction
from .potentials import PotentialParams

Method = Literal["ansatz", "oracle"]

_L_LETTERS = "spdfghik"


@dataclass(frozen=True)
class QuantumNumbers:
    """Radial node count ``n`` and orbital quantum number ``l``."""

    n: int = 0
    l: int = 0

    def __post_init__(self):
        for name in ("n", "l"):
            v = getattr(self, name)
            if isinstance(v, bool) or int(v) != v or v < 0:
                raise ValueError(f"{name} must be a non-negative integer, got {v!r}")
            object.__setattr__(self, name, int(v))

    @property
    def principal(self) -> int:
        return self.n + self.l + 1

    @property
    def label(self) -> str:
        return f"{self.principal}{_L_LETTERS[self.l]}" if self.l < len(_L_LETTERS) else f"N={self.principal},l={self.l}"

    @classmethod
    def from_label(cls, label: str) -> "QuantumNumbers":
        """Decode a spectroscopic label such as ``"3d"`` into (n=0, l=2)."""
        m = re.fullmatch(r"\s*(\d+)\s*([a-zA-Z])\s*", label)
        if not m:
            raise ValueError(f"bad spectroscopic label {label!r}")
        principal = int(m.group(1))
        l = _L_LETTERS.find(m.group(2).lower())
        if l < 0 or principal < l + 1:
            raise ValueError(f"bad spectroscopic label {label!r}")
        return cls(n=principal - l - 1, l=l)


@dataclass(frozen=True)
class AnsatzParams:
    A: float
    B: float
    delta: float
    residual: float
    extrapolated: bool = False


@dataclass(frozen=True)
class EnergyLevel:
    value: float
    qn: QuantumNumbers
    method: Method
    params: PotentialParams
    extrapolated: bool = False

    def __post_init__(self):
        if not np.isfinite(self.value):
            raise ValueError(f"energy must be finite, got {self.value!r}")
        if self.method not in ("ansatz", "oracle"):
            raise ValueError(f"unknown method {self.method!r}")


@dataclass(frozen=True, eq=False)
class RadialFunction:
    """Reduced radial wavefunction u(r) = r psi(r) sampled on a grid."""

    grid: np.ndarray
    values: np.ndarray
    norm_constant: float
    normalizable: bool = True
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        grid = np.asarray(self.grid, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if grid.ndim != 1 or grid.size == 0:
            raise ValueError("grid must be a non-empty 1-d array")
        if grid.shape != values.shape:
            raise ValueError("grid and values must have the same shape")
        if np.any(grid <= 0) or np.any(np.diff(grid) <= 0):
            raise ValueError("grid must be strictly ascending with r > 0")
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "values", values)

    def norm(self) -> float:
        """Trapezoidal integral of u^2 over the stored grid."""
        return float(np.trapezoid(self.values**2, self.grid))

    def psi(self) -> np.ndarray:
        return self.values / self.grid


def _net_coulomb(params: PotentialParams) -> float:
    s2 = params.derived.s2
    if s2 == 0.0:
        raise NetCoulombVanishes("ab + c - d = 0: no 1/r term to fix the linear exponent B")
    return s2


def match_coefficients(params: PotentialParams, qn: QuantumNumbers) -> AnsatzParams:
    s2 = _net_coulomb(params)
    m = params.mass_factor
    s1 = params.derived.s1
    alpha = params.alpha
    delta = float(qn.l + 1)
    B = -m * s2 / (qn.l + qn.n + 1)
    if alpha == 0.0:
        A = 0.0
        residual = 0.0
    else:
        A = m * s1 * alpha**2 / (2.0 * B)
        residual = abs(A * A - m * s1 * alpha**3 / 3.0)
    return AnsatzParams(A=A, B=B, delta=delta, residual=residual, extrapolated=qn.n >= 2)


def ansatz_energy(params: PotentialParams, qn: QuantumNumbers) -> EnergyLevel:
    """Closed-form E_{nl}.

    n = 0 and n = 1 are the derived results; for n >= 2 the same pattern
    (multiplier 2l + 3 + 2n, denominator (l + n + 1)^2) is continued and the
    level is marked ``extrapolated``.
    """
    s2 = _net_coulomb(params)
    m = params.mass_factor
    s1 = params.derived.s1
    n, l = qn.n, qn.l
    alpha = params.alpha
    value = (
        params.a
        + s1 * alpha
        - (l + 1) * (s1 * alpha**2 / 2.0) * (2 * l + 3 + 2 * n) / (2.0 * m * s2)
        - 2.0 * m * s2**2 / (4.0 * (l + n + 1) ** 2)
    )
    return EnergyLevel(value=value, qn=qn, method="ansatz", params=params, extrapolated=n >= 2)


def is_normalizable(coeffs: AnsatzParams) -> bool:
    return coeffs.A > 0 or (coeffs.A == 0 and coeffs.B < 0)


def ansatz_wavefunction(params: PotentialParams, l: int, grid, n: int = 0) -> RadialFunction:
    """u(r) = N r^(l+1) exp(-A r^2 / 2 + B r) for the nodeless state.

    When A < 0 (or A = 0 with B >= 0) the function grows without bound; it is
    still sampled, with N = 1 and ``normalizable=False``.
    """
    if n != 0:
        raise UnsupportedExcitedWavefunction("closed-form wavefunctions are only available for n = 0")
    r = np.asarray(grid, dtype=float)
    if r.size == 0:
        raise ValueError("grid is empty")
    coeffs = match_coefficients(params, QuantumNumbers(0, l))
    with np.errstate(over="ignore"):
        raw = r ** (l + 1) * np.exp(-0.5 * coeffs.A * r * r + coeffs.B * r)
    normalizable = is_normalizable(coeffs)
    norm_constant = 1.0
    if normalizable:
        norm_constant = 1.0 / np.sqrt(np.trapezoid(raw**2, r))
    return RadialFunction(
        grid=r,
        values=norm_constant * raw,
        norm_constant=float(norm_constant),
        normalizable=normalizable,
        meta={"A": coeffs.A, "B": coeffs.B, "residual": coeffs.residual},
    )
