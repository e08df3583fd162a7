"""Numeric geometric verifiers: certificates and falsifiers on sampling grids.

Everything here is evidence, not proof.  A positivity margin computed over
a finite grid certifies an inequality only on the sampled set; a convexity
probe that finds a line crossed more than twice genuinely falsifies
direction convexity (up to sampling resolution of the traced curve), but a
probe that finds nothing proves nothing.  Certificates record the grid
minimum and the witness point attaining it.

The direction-convexity machinery:

* ``rz_certificate`` evaluates Re{e^{i mu}(1 - 2 z e^{-i mu} cos nu
  + z^2 e^{-2i mu}) phi'(z)} (real direction) or the same with leading
  factor -i e^{i mu} (imaginary direction); nonnegativity on the disk is
  the classical slope criterion for convexity in that direction.
* ``rz_search`` scans a (mu, nu) lattice for the best margin.
* ``direction_convexity_probe`` traces the image of a near-boundary circle
  and counts sign changes of the coordinate orthogonal to test lines.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .analytic import AnalyticExpr
from .errors import SeriesMismatch, ZeroValue
from .numkernel import GaussRational
from .shear import HarmonicMap

__all__ = [
    "Grid", "RZParams", "Certificate", "default_grid",
    "jacobian_min", "rz_certificate", "rz_search",
    "direction_convexity_probe", "starlike_derivative",
    "u_class_margin", "m_theta_check", "boundary_trace",
]

TOL_MARGIN = 1e-9
DEADBAND = 1e-8


@dataclass(frozen=True)
class Grid:
    """Polar sampling grid: radii x equally spaced angles."""
    radii: tuple[float, ...]
    angles_count: int

    def __post_init__(self):
        if list(self.radii) != sorted(self.radii):
            raise ValueError("radii must be sorted ascending")
        if self.radii and not (0 < self.radii[0] and self.radii[-1] < 1):
            raise ValueError("radii must lie in (0, 1)")

    @property
    def r_max(self) -> float:
        return self.radii[-1]

    @property
    def points(self) -> np.ndarray:
        return _grid_points(self.radii, self.angles_count)


@lru_cache(maxsize=32)
def _grid_points(radii: tuple, angles_count: int) -> np.ndarray:
    angles = np.exp(2j * np.pi * np.arange(angles_count) / angles_count)
    return (np.asarray(radii)[:, None] * angles[None, :]).ravel()


def default_grid(radii_count: int = 64, angles: int = 256,
                 r_max: float = 0.999) -> Grid:
    radii = tuple(r_max * (k + 1) / radii_count for k in range(radii_count))
    return Grid(radii, angles)


@dataclass(frozen=True)
class RZParams:
    mu: float
    nu: float

    def __post_init__(self):
        if not (0 <= self.mu < 2 * math.pi and 0 <= self.nu <= math.pi):
            raise ValueError("mu in [0, 2pi), nu in [0, pi] required")


@dataclass(frozen=True)
class Certificate:
    """Grid minimum of a defining quantity plus the point attaining it."""
    kind: str
    margin: float
    witness: complex | None = None
    params: RZParams | None = None

    def to_json(self) -> dict:
        out = {"kind": self.kind, "margin": self.margin}
        if self.witness is not None:
            out["witness"] = [self.witness.real, self.witness.imag]
        if self.params is not None:
            out["params"] = {"mu": self.params.mu, "nu": self.params.nu}
        return out


def _min_certificate(kind, values, zs, params=None) -> Certificate:
    i = int(np.argmin(values))
    return Certificate(kind, float(values[i]), complex(zs[i]), params)


def jacobian_min(F: HarmonicMap, grid: Grid) -> Certificate:
    """Grid minimum of |h'|^2 - |g'|^2; positive means sense-preserving
    on the sampled set."""
    zs = grid.points
    hp = F.h_prime(zs)
    gp = F.g_prime(zs)
    vals = np.abs(hp) ** 2 - np.abs(gp) ** 2
    return _min_certificate("jacobian", vals, zs)


def _rz_values(phi: AnalyticExpr, mu: float, nu: float, axis: str,
               zs: np.ndarray) -> np.ndarray:
    pp = phi.derivative().eval(zs)
    w = (np.exp(1j * mu) - 2 * math.cos(nu) * zs
         + np.exp(-1j * mu) * zs * zs) * pp
    return w.real if axis == "real" else w.imag


def rz_certificate(phi: AnalyticExpr, p: RZParams, axis: str,
                   grid: Grid) -> Certificate:
    """Slope-criterion margin for one (mu, nu) choice."""
    if axis not in ("real", "imag"):
        raise ValueError("axis must be 'real' or 'imag'")
    zs = grid.points
    vals = _rz_values(phi, p.mu, p.nu, axis, zs)
    return _min_certificate(f"rz_{axis}", vals, zs, p)


def rz_search(phi: AnalyticExpr, axis: str, grid: Grid,
              mu_steps: int = 96, nu_steps: int = 48,
              tol: float = TOL_MARGIN) -> Certificate | None:
    """Scan the (mu, nu) lattice; return the best-margin certificate if its
    margin clears -tol, else None.

    The lattice has ``mu_steps`` points on [0, 2pi) and ``nu_steps``
    intervals on [0, pi] (endpoints included), so the classical choices
    0, pi/3, pi/2, 2pi/3 and pi are all exactly representable with the
    defaults.
    """
    zs = grid.points
    pp = phi.derivative().eval(zs)
    p0, p1, p2 = pp, zs * pp, zs * zs * pp
    if axis == "real":
        a, b = p0.real + p2.real, p2.imag - p0.imag
        c = p1.real
    else:
        a, b = p0.imag + p2.imag, p0.real - p2.real
        c = p1.imag
    best = None
    for i in range(mu_steps):
        mu = 2 * math.pi * i / mu_steps
        base = math.cos(mu) * a + math.sin(mu) * b
        for j in range(nu_steps + 1):
            nu = math.pi * j / nu_steps
            vals = base - 2 * math.cos(nu) * c
            k = int(np.argmin(vals))
            margin = float(vals[k])
            if best is None or margin > best.margin:
                best = Certificate(f"rz_{axis}", margin, complex(zs[k]),
                                   RZParams(mu, nu))
    if best is not None and best.margin >= -tol:
        return best
    return None


def _trace_samples(F, r: float, samples: int) -> np.ndarray:
    zs = r * np.exp(2j * np.pi * np.arange(samples) / samples)
    return np.asarray(F.eval(zs))


def direction_convexity_probe(F, direction: str, r: float = 0.999,
                              lines: int = 64, samples: int = 4096) -> bool:
    """Falsifier for convexity in the given direction.

    Traces F on |z| = r and, for test lines parallel to the direction
    placed at quantiles of the orthogonal coordinate, counts cyclic sign
    changes of that coordinate along the curve.  More than two sign
    changes on some line means the line meets the image in more than one
    chord: returns False.  True means "not falsified", never a proof.
    """
    if direction not in ("real", "imag"):
        raise ValueError("direction must be 'real' or 'imag'")
    w = _trace_samples(F, r, samples)
    coord = w.imag if direction == "real" else w.real
    qs = (np.arange(lines) + 0.5) / lines
    levels = np.quantile(coord, qs)
    for c in levels:
        v = coord - c
        sig = v[np.abs(v) > DEADBAND]
        if sig.size < 2:
            continue
        signs = np.sign(sig)
        changes = int(np.sum(signs != np.roll(signs, 1)))
        if changes > 2:
            return False
    return True


def starlike_derivative(F: HarmonicMap, t: float, r: float) -> float:
    """Re{Df(z)/f(z)} at z = r e^{it}, Df = z f_z - conj(z) f_zbar.

    As r -> 1 this approximates the boundary derivative of arg f(e^{it});
    a negative value near the boundary refutes starlikeness there.
    """
    z = r * complex(math.cos(t), math.sin(t))
    val = F.eval(z)
    if abs(val) < 1e-12:
        raise ZeroValue("f(z) vanishes at the sample point")
    df = z * F.h_prime(z) - np.conjugate(z * F.g_prime(z))
    return float((df / val).real)


def u_class_margin(f: AnalyticExpr, grid: Grid) -> Certificate:
    """Grid minimum of 1 - |f'(z) (z/f(z))^2 - 1|.

    A positive margin is consistent with membership in the class of maps
    with |f'(z)(z/f(z))^2 - 1| < 1; a negative margin refutes it.
    """
    zs = grid.points
    fv = f.eval(zs)
    if np.min(np.abs(fv)) < 1e-14:
        raise ZeroValue("f vanishes on the grid away from the origin")
    fp = f.derivative().eval(zs)
    vals = 1.0 - np.abs(fp * (zs / fv) ** 2 - 1.0)
    return _min_certificate("u_class", vals, zs)


def m_theta_check(F: HarmonicMap, theta: float, grid: Grid) -> Certificate:
    """Membership evidence for the class with g' = e^{i theta} z h' and
    Re(1 + z h''/h') > -1/2.

    The dilatation identity is checked exactly on series for theta in
    {0, pi} and to 1e-12 per coefficient otherwise; failure raises
    SeriesMismatch.  The margin is the grid minimum of
    Re(1 + z h''/h') + 1/2.
    """
    n1 = max(F.order - 1, 0)
    lhs = F.g_series.derivative().truncate(n1)
    hp = F.h_series.derivative().truncate(n1)
    zhp = _mul_by_z(hp, n1)
    if theta == 0.0 or theta == math.pi:
        sign = 1 if theta == 0.0 else -1
        if lhs != zhp.scale(sign):
            raise SeriesMismatch("g' != e^{i theta} z h' as exact series")
    else:
        w = complex(math.cos(theta), math.sin(theta))
        for n in range(n1 + 1):
            if abs(complex(lhs.coeff(n)) - w * complex(zhp.coeff(n))) > 1e-12:
                raise SeriesMismatch("g' != e^{i theta} z h' within 1e-12")
    zs = grid.points
    vals = np.asarray(F.curvature_term(zs)).real + 0.5
    return _min_certificate("m_theta", vals, zs)


def _mul_by_z(s, order):
    """Series of z * s(z), truncated at the same order."""
    from .numkernel import Series
    return Series([GaussRational(0), *s.coeffs], order=order)


def boundary_trace(F, r: float, samples: int = 1024) -> np.ndarray:
    """Closed polyline F(r e^{2 pi i k / samples}), k = 0..samples-1."""
    if not (0 < r < 1):
        raise ValueError("trace radius must lie in (0, 1)")
    return _trace_samples(F, r, samples)
