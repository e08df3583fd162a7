"""Shear construction of harmonic maps from direction-convex conformal maps.

A sense-preserving harmonic map f = h + conj(g) is built from a conformal
map that is convex in one direction plus a dilatation omega = g'/h':

* real direction:  phi = h - g,  h = integral of phi'/(1 - omega);
* imaginary direction:  psi = h + g,  h = integral of psi'/(1 + omega).

The integration is carried out on exact truncated series, so the returned
map satisfies h - g = phi (resp. h + g = psi) and g' = omega * h' exactly
to the working order.  Closed forms for h and g are attached afterwards
where they are known; evaluation prefers closed forms and falls back to
the shear recipe (phi, omega) so that h' and g' stay evaluable arbitrarily
close to the boundary even when h itself has no closed form.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .analytic import AnalyticExpr
from .errors import DilatationTooLarge, NotNormalized, SeriesMismatch
from .numkernel import GaussRational, Series

__all__ = ["HarmonicMap", "shear_real", "shear_imag", "dilatation_check", "harmonic_eval"]

_SERIES_EVAL_RADIUS = 0.9


@dataclass(frozen=True)
class HarmonicMap:
    """Pair (h, g) with dilatation omega; f = h + conj(g).

    ``source`` holds the conformal map the shear was built from (phi for
    axis="real", psi for axis="imag") when the map came out of a shear.
    """

    h_series: Series
    g_series: Series
    omega: AnalyticExpr
    h_expr: AnalyticExpr | None = None
    g_expr: AnalyticExpr | None = None
    source: AnalyticExpr | None = None
    axis: str = "real"

    def __post_init__(self):
        if self.h_series.coeff(0) != 0 or self.h_series.coeff(1) != 1:
            raise NotNormalized("h must satisfy h(0)=0, h'(0)=1")
        if self.g_series.coeff(0) != 0:
            raise NotNormalized("g must satisfy g(0)=0")
        n = self.order
        if self.h_expr is not None and self.h_expr.series(n) != self.h_series:
            raise SeriesMismatch("closed form for h disagrees with its series")
        if self.g_expr is not None and self.g_expr.series(n) != self.g_series:
            raise SeriesMismatch("closed form for g disagrees with its series")

    @property
    def order(self) -> int:
        return self.h_series.order

    def with_exprs(self, h_expr=None, g_expr=None) -> "HarmonicMap":
        return replace(self, h_expr=h_expr or self.h_expr, g_expr=g_expr or self.g_expr)

    @property
    def in_sh0(self) -> bool:
        """True when g'(0) = 0, i.e. the map is normalized in the b1 = 0 class."""
        return self.g_series.order >= 1 and self.g_series.coeff(1) == 0

    # -- evaluation routes --------------------------------------------------

    def _require_series_radius(self, z):
        if np.max(np.abs(np.asarray(z))) > _SERIES_EVAL_RADIUS:
            raise ValueError(
                "series evaluation only trusted for |z| <= 0.9; "
                "attach closed forms to evaluate closer to the boundary"
            )

    def eval_h(self, z):
        if self.h_expr is not None:
            return self.h_expr.eval(z)
        self._require_series_radius(z)
        return self.h_series.eval(z)

    def eval_g(self, z):
        if self.g_expr is not None:
            return self.g_expr.eval(z)
        self._require_series_radius(z)
        return self.g_series.eval(z)

    def eval(self, z):
        """f(z) = h(z) + conj(g(z))."""
        return self.eval_h(z) + np.conjugate(self.eval_g(z))

    def eval_masked(self, zs: np.ndarray):
        """Vectorized f(z) with near-pole points masked out, for plotting."""
        zs = np.asarray(zs, dtype=complex)
        if self.h_expr is not None and self.g_expr is not None:
            hv, ok_h = self.h_expr.eval_masked(zs)
            gv, ok_g = self.g_expr.eval_masked(zs)
            return hv + np.conjugate(gv), ok_h & ok_g
        return self.eval(zs), np.ones(zs.shape, dtype=bool)

    def h_prime(self, z):
        if self.h_expr is not None:
            return self.h_expr.derivative().eval(z)
        if self.source is not None:
            sp = self.source.derivative().eval(z)
            om = self.omega.eval(z)
            return sp / (1 - om) if self.axis == "real" else sp / (1 + om)
        self._require_series_radius(z)
        return self.h_series.derivative().eval(z)

    def g_prime(self, z):
        if self.g_expr is not None:
            return self.g_expr.derivative().eval(z)
        return self.omega.eval(z) * self.h_prime(z)

    def curvature_term(self, z):
        """1 + z h''(z)/h'(z), the quantity bounded below in the M(theta) class."""
        if self.h_expr is not None:
            d1 = self.h_expr.derivative()
            d2 = d1.derivative()
            return 1 + z * d2.eval(z) / d1.eval(z)
        if self.source is not None:
            sp = self.source.derivative()
            spp = sp.derivative()
            om = self.omega.eval(z)
            omp = self.omega.derivative().eval(z)
            log_deriv = spp.eval(z) / sp.eval(z)
            if self.axis == "real":
                log_deriv = log_deriv + omp / (1 - om)
            else:
                log_deriv = log_deriv - omp / (1 + om)
            return 1 + z * log_deriv
        self._require_series_radius(z)
        d1 = self.h_series.derivative()
        return 1 + z * d1.derivative().eval(z) / d1.eval(z)


def _check_shear_inputs(conformal: AnalyticExpr, omega: AnalyticExpr, order: int):
    if order < 1:
        raise ValueError("shear order must be >= 1")
    s = conformal.series(order)
    if s.coeff(0) != 0 or s.coeff(1) != 1:
        raise NotNormalized("conformal input must satisfy f(0)=0, f'(0)=1")
    om = omega.series(order - 1 if order > 1 else 0)
    if om.coeff(0) != 0:
        raise NotNormalized("dilatation must satisfy omega(0)=0")
    radii = np.linspace(0.999 / 16, 0.999, 16)
    angles = np.exp(2j * np.pi * np.arange(64) / 64)
    zs = (radii[:, None] * angles[None, :]).ravel()
    if np.max(np.abs(omega.eval(zs))) >= 1 - 1e-9:
        raise DilatationTooLarge("|omega| reaches 1 on the sampling grid")
    return s


def shear_real(phi: AnalyticExpr, omega: AnalyticExpr, order: int = 64) -> HarmonicMap:
    """Shear along the real direction: h - g = phi, g' = omega h'.

    h is the exact series antiderivative of phi'/(1 - omega); g = h - phi.
    """
    s_phi = _check_shear_inputs(phi, omega, order)
    n1 = order - 1
    hp = s_phi.derivative() * (Series.one(n1) - omega.series(n1)).reciprocal()
    h = hp.antiderivative()
    g = h - s_phi
    return HarmonicMap(h, g, omega, source=phi, axis="real")


def shear_imag(psi: AnalyticExpr, omega: AnalyticExpr, order: int = 64) -> HarmonicMap:
    """Shear along the imaginary direction: h + g = psi, g' = omega h'.

    h is the exact series antiderivative of psi'/(1 + omega); g = psi - h.
    """
    s_psi = _check_shear_inputs(psi, omega, order)
    n1 = order - 1
    hp = s_psi.derivative() * (Series.one(n1) + omega.series(n1)).reciprocal()
    h = hp.antiderivative()
    g = s_psi - h
    return HarmonicMap(h, g, omega, source=psi, axis="imag")


def dilatation_check(F: HarmonicMap) -> bool:
    """Exact test of g' = omega * h' as truncated series."""
    n1 = max(min(F.h_series.order, F.g_series.order) - 1, 0)
    lhs = F.g_series.derivative().truncate(n1)
    rhs = F.omega.series(n1) * F.h_series.derivative().truncate(n1)
    return lhs == rhs


def harmonic_eval(F: HarmonicMap, z):
    """f(z) = h(z) + conj(g(z)); closed forms preferred, series fallback."""
    return F.eval(z)
