"""Varshni-Hellmann potential family.

    V(r) = a + (d - ab) exp(-alpha r) / r - c / r

Hellmann (a = b = 0), Varshni (c = d = 0), Yukawa (a = b = c = 0) and pure
Coulomb are special cases. All functions accept a scalar ``r`` or a numpy
array and return the same kind.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Literal

import numpy as np

from .errors import DomainError

Form = Literal["full", "expanded"]
FORMS = ("full", "expanded")


@dataclass(frozen=True)
class DerivedConstants:
    ab: float
    s1: float  # ab - d
    s2: float  # ab + c - d, net strength of the -1/r tail near the origin

    @classmethod
    def from_params(cls, p: "PotentialParams") -> "DerivedConstants":
        ab = p.a * p.b
        return cls(ab=ab, s1=ab - p.d, s2=ab + p.c - p.d)


@dataclass(frozen=True)
class PotentialParams:
    """Potential constants plus the mass and hbar of the unit convention in use.

    The defaults (mu=0.5, hbar=1) are the hbar = 2 mu = 1 convention used by
    most benchmark tables.
    """

    a: float = 0.0
    b: float = 0.0
    c: float = 0.0
    d: float = 0.0
    alpha: float = 0.0
    mu: float = 0.5
    hbar: float = 1.0

    def __post_init__(self):
        for name in ("a", "b", "c", "d", "alpha", "mu", "hbar"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise DomainError(f"{name} must be finite, got {value!r}")
        if self.alpha < 0:
            raise DomainError(f"alpha must be >= 0, got {self.alpha}")
        if self.mu <= 0:
            raise DomainError(f"mu must be > 0, got {self.mu}")
        if self.hbar <= 0:
            raise DomainError(f"hbar must be > 0, got {self.hbar}")

    @property
    def derived(self) -> DerivedConstants:
        return DerivedConstants.from_params(self)

    @property
    def mass_factor(self) -> float:
        """mu / hbar**2; the radial equation only ever sees 2 * mass_factor."""
        return self.mu / self.hbar**2

    def with_(self, **changes) -> "PotentialParams":
        return replace(self, **changes)


def _check_r(r):
    arr = np.asarray(r, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr <= 0):
        raise DomainError("r must be finite and > 0")
    return arr


def _out(value, r):
    return float(value) if np.ndim(r) == 0 else value


def eval_full(params: PotentialParams, r):
    rr = _check_r(r)
    p = params
    v = p.a + (p.d - p.a * p.b) * np.exp(-p.alpha * rr) / rr - p.c / rr
    return _out(v, r)


def eval_expanded(params: PotentialParams, r, order: int = 3):
    """Potential with exp(-alpha r) replaced by its Taylor polynomial.

    ``order`` is the highest power of (alpha r) kept. At order 3 this is

        a + (d-ab)/r + (ab-d) alpha - (ab-d) alpha^2 r / 2
          + (ab-d) alpha^3 r^2 / 6 - c/r
    """
    if isinstance(order, bool) or not isinstance(order, (int, np.integer)) or not 0 <= order <= 3:
        raise ValueError(f"order must be an integer in 0..3, got {order!r}")
    rr = _check_r(r)
    p = params
    x = p.alpha * rr
    series = np.ones_like(rr)
    term = np.ones_like(rr)
    for k in range(1, order + 1):
        term = term * (-x) / k
        series = series + term
    v = p.a + (p.d - p.a * p.b) * series / rr - p.c / rr
    return _out(v, r)


def eval_potential(params: PotentialParams, r, form: Form = "full"):
    if form == "full":
        return eval_full(params, r)
    if form == "expanded":
        return eval_expanded(params, r, 3)
    raise ValueError(f"form must be one of {FORMS}, got {form!r}")


def effective_potential(params: PotentialParams, l: int, r, form: Form = "full"):
    """Potential plus the centrifugal barrier l(l+1) hbar^2 / (2 mu r^2)."""
    if l < 0 or int(l) != l:
        raise ValueError(f"l must be a non-negative integer, got {l!r}")
    rr = _check_r(r)
    v = eval_potential(params, rr, form)
    with np.errstate(divide="ignore", over="ignore"):
        v = v + l * (l + 1) * params.hbar**2 / (2.0 * params.mu * rr * rr)
    return _out(v, r)


# --- named special cases -------------------------------------------------


def hellmann(c: float, d: float, alpha: float, mu: float = 0.5, hbar: float = 1.0) -> PotentialParams:
    return PotentialParams(a=0.0, b=0.0, c=c, d=d, alpha=alpha, mu=mu, hbar=hbar)


def varshni(a: float, b: float, alpha: float, mu: float = 0.5, hbar: float = 1.0) -> PotentialParams:
    return PotentialParams(a=a, b=b, c=0.0, d=0.0, alpha=alpha, mu=mu, hbar=hbar)


def yukawa(strength: float, g: float | None = None, alpha: float | None = None,
           mu: float = 1.0, hbar: float = 1.0) -> PotentialParams:
    """Attractive Yukawa potential -strength * exp(-alpha r) / r.

    ``strength`` is the attractive coupling as usually quoted (positive);
    it is stored as d = -strength. Give either the screening ``alpha``
    directly or the reduced screening ``g`` with alpha = g * strength.
    """
    if (g is None) == (alpha is None):
        raise ValueError("give exactly one of g or alpha")
    if alpha is None:
        alpha = g * strength
    return PotentialParams(a=0.0, b=0.0, c=0.0, d=-strength, alpha=alpha, mu=mu, hbar=hbar)


def coulomb(c: float, mu: float = 0.5, hbar: float = 1.0) -> PotentialParams:
    return PotentialParams(a=0.0, b=0.0, c=c, d=0.0, alpha=0.0, mu=mu, hbar=hbar)


_SPECIAL_CASES = {
    "hellmann": hellmann,
    "varshni": varshni,
    "yukawa": yukawa,
    "coulomb": coulomb,
}


def special_case(kind: str, **strengths) -> PotentialParams:
    try:
        factory = _SPECIAL_CASES[kind]
    except KeyError:
        raise ValueError(f"unknown potential kind {kind!r}; expected one of {sorted(_SPECIAL_CASES)}") from None
    return factory(**strengths)
