"""The function atlas: every named map with closed forms and expected flags.

Families
--------
S_Z      the nine univalent maps with integer coefficients
T1, T2   the twelve additional maps with half-integer coefficients
         (T2 = the two that are not close-to-convex)
S1, T3   the subsets of S_Z and T1 convex in the real direction
T4       the six non-conformal half-integer maps convex in real direction
T5       the nine conformal half-integer maps convex in imaginary direction
T6       the two non-conformal half-integer maps convex in imaginary direction
PROOF_*  every shear the two case analyses construct (30 real-direction,
         18 imaginary-direction), under our own sequential numbering

Membership of a function in several families is represented by one entry
per (family, function) pair; family-qualified ids carry an ``s1_``/``t3_``/
``t5_`` prefix.  Shear-generated entries are named ``f<k>_cv1`` and
``f<k>_cvi``; closed forms for h are attached exactly where a hand
integration is on record, the rest stay series-only through their recipe.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .analytic import AnalyticExpr, Poly
from .errors import UnknownId
from .exprtext import format_expr
from .numkernel import GaussRational, Series
from .shear import HarmonicMap, shear_imag, shear_real

__all__ = [
    "BoundaryDescriptor", "FlagSet", "ShearRecipe", "CatalogEntry",
    "catalog_build", "catalog_lookup", "catalog_ids", "export_atlas",
    "DEFAULT_ORDER",
]

DEFAULT_ORDER = 64

F = Fraction


def _gr(re, im=0) -> GaussRational:
    return GaussRational(F(re), F(im))


def P(*cs) -> Poly:
    return Poly(cs)


ONE = P(1)
Z = P(0, 1)
I = GaussRational(0, 1)


def rat(c, num, den=None) -> AnalyticExpr:
    return AnalyticExpr.rational(c, num, den or ONE)


def lg(c, arg) -> AnalyticExpr:
    return AnalyticExpr.log(c, arg)


def _sum(*parts: AnalyticExpr) -> AnalyticExpr:
    out = parts[0]
    for p in parts[1:]:
        out = out + p
    return out


# surd values a + b*sqrt(3), stored exactly as (a, b)
def _surd(a, b=0) -> tuple[Fraction, Fraction]:
    return (F(a), F(b))


@dataclass(frozen=True)
class BoundaryDescriptor:
    """Exact description of the image boundary, where one is on record.

    ``params`` holds (a, b) pairs meaning a + b*sqrt(3); their meaning is
    kind-specific:

    * slit_lines: ray anchors on the slit line(s);
    * parabola: coefficients (A, B, C) of A*u + B*v^2 + C = 0;
    * curve / cusped: anchors of the trace formula, informational.
    """
    kind: str
    params: tuple = ()

    def to_json(self) -> dict:
        return {"kind": self.kind,
                "params": [[str(a), str(b)] for (a, b) in self.params]}


@dataclass(frozen=True)
class FlagSet:
    """Expected classification flags; None means not asserted anywhere."""
    integer_coeffs: bool
    half_integer_coeffs: bool
    cv_real: bool | None = None
    cv_imag: bool | None = None
    starlike: bool | None = None
    u_class: bool | None = None
    boundary: BoundaryDescriptor | None = None

    def __post_init__(self):
        if self.integer_coeffs and not self.half_integer_coeffs:
            raise ValueError("integer coefficients imply half-integer coefficients")

    def to_json(self) -> dict:
        out = {
            "integer_coeffs": self.integer_coeffs,
            "half_integer_coeffs": self.half_integer_coeffs,
            "cv_real": self.cv_real,
            "cv_imag": self.cv_imag,
            "starlike": self.starlike,
            "u_class": self.u_class,
        }
        if self.boundary is not None:
            out["boundary"] = self.boundary.to_json()
        return out


@dataclass(frozen=True)
class ShearRecipe:
    """How a harmonic entry is produced: source id, omega = sign*z, axis."""
    source_id: str
    omega_sign: int
    axis: str  # "real" | "imag"


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    family: str
    h: AnalyticExpr | None
    g: AnalyticExpr | None
    omega: AnalyticExpr | None
    expected: FlagSet
    recipe: ShearRecipe | None = None
    note: str = ""
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def is_conformal(self) -> bool:
        return self.omega is None

    def h_series(self, order: int = DEFAULT_ORDER) -> Series:
        return self.harmonic_map(order).h_series

    def g_series(self, order: int = DEFAULT_ORDER) -> Series:
        return self.harmonic_map(order).g_series

    def harmonic_map(self, order: int = DEFAULT_ORDER) -> HarmonicMap:
        """Materialize the entry as a HarmonicMap at the given order.

        Conformal entries get g = 0 and omega = 0; recipe entries are
        sheared on demand and cross-checked against any closed forms.
        """
        cached = self._cache.get(order)
        if cached is not None:
            return cached
        if self.is_conformal:
            fm = HarmonicMap(
                h_series=self.h.series(order),
                g_series=Series.zero(order),
                omega=AnalyticExpr.zero(),
                h_expr=self.h,
                g_expr=AnalyticExpr.zero(),
            )
        elif self.recipe is not None:
            source = catalog_lookup(self.recipe.source_id).h
            shear = shear_real if self.recipe.axis == "real" else shear_imag
            fm = shear(source, self.omega, order)
            if self.h is not None:
                fm = fm.with_exprs(h_expr=self.h,
                                   g_expr=self.g if self.g is not None else None)
        else:
            fm = HarmonicMap(
                h_series=self.h.series(order),
                g_series=self.g.series(order),
                omega=self.omega,
                h_expr=self.h,
                g_expr=self.g,
            )
        self._cache[order] = fm
        return fm

    def convexity_source(self, direction: str) -> AnalyticExpr:
        """The conformal map whose direction convexity controls the entry's.

        h - g for the real direction, h + g for the imaginary direction;
        for conformal entries both reduce to the entry itself.
        """
        if self.is_conformal:
            return self.h
        if self.recipe is not None and (
                (direction == "real") == (self.recipe.axis == "real")):
            return catalog_lookup(self.recipe.source_id).h
        if self.h is None or self.g is None:
            raise ValueError(f"{self.id}: no closed form for h -/+ g")
        return self.h - self.g if direction == "real" else self.h + self.g


# ---------------------------------------------------------------------------
# base conformal entries
# ---------------------------------------------------------------------------

_SLIT = "slit_lines"

# id -> (expr, family, cv_real, cv_imag, boundary)
_CONFORMAL = {
    # the nine integer-coefficient maps
    "identity":        (rat(1, Z), "S_Z", True, True, None),
    "halfplane":       (rat(1, Z, P(1, -1)), "S_Z", True, True, None),
    "halfplane_r":     (rat(1, Z, P(1, 1)), "S_Z", True, True, None),
    "vslits":          (rat(1, Z, P(1, 0, -1)), "S_Z", False, True,
                        BoundaryDescriptor(_SLIT, (_surd(F(1, 2)),))),
    "hslits":          (rat(1, Z, P(1, 0, 1)), "S_Z", True, False,
                        BoundaryDescriptor(_SLIT, (_surd(F(1, 2)),))),
    "koebe":           (rat(1, Z, P(1, -2, 1)), "S_Z", True, False,
                        BoundaryDescriptor(_SLIT, (_surd(F(-1, 4)),))),
    "koebe_r":         (rat(1, Z, P(1, 2, 1)), "S_Z", True, False,
                        BoundaryDescriptor(_SLIT, (_surd(F(1, 4)),))),
    "hslits_wide":     (rat(1, Z, P(1, -1, 1)), "S_Z", True, False,
                        BoundaryDescriptor(_SLIT, (_surd(F(-1, 3)), _surd(1)))),
    "hslits_wide_r":   (rat(1, Z, P(1, 1, 1)), "S_Z", True, False,
                        BoundaryDescriptor(_SLIT, (_surd(-1), _surd(F(1, 3))))),
    # the ten extra half-integer maps that are close-to-convex
    "cardioid_r":      (rat(F(1, 2), P(0, 2, -1)), "T1", True, False, None),
    "cardioid":        (rat(F(1, 2), P(0, 2, 1)), "T1", True, False, None),
    "halfplane_avg":   (rat(F(1, 2), P(0, 2, -1), P(1, -1)), "T1", True, True, None),
    "halfplane_avg_r": (rat(F(1, 2), P(0, 2, 1), P(1, 1)), "T1", True, True, None),
    "vslits_avg":      (rat(F(1, 2), P(0, 2, 0, -1), P(1, 0, -1)), "T1", False, True, None),
    "hslits_avg":      (rat(F(1, 2), P(0, 2, 0, 1), P(1, 0, 1)), "T1", True, False, None),
    "offset_vslits":   (rat(F(1, 2), P(0, 2, -1), P(1, 0, -1)), "T1", False, True,
                        BoundaryDescriptor(_SLIT, (_surd(F(1, 4)), _surd(0, F(1, 4))))),
    "offset_vslits_r": (rat(F(1, 2), P(0, 2, 1), P(1, 0, -1)), "T1", False, True,
                        BoundaryDescriptor(_SLIT, (_surd(F(-1, 4)), _surd(0, F(1, 4))))),
    "parabola":        (rat(F(1, 2), P(0, 2, -1), P(1, -2, 1)), "T1", True, False,
                        BoundaryDescriptor("parabola", (_surd(8), _surd(16), _surd(3)))),
    "parabola_r":      (rat(F(1, 2), P(0, 2, 1), P(1, 2, 1)), "T1", True, False,
                        BoundaryDescriptor("parabola", (_surd(-8), _surd(16), _surd(3)))),
    # the two half-integer maps that are not close-to-convex
    "hslits_wide_avg":   (rat(F(1, 2), P(0, 2, -1, 1), P(1, -1, 1)), "T2", False, False, None),
    "hslits_wide_avg_r": (rat(F(1, 2), P(0, 2, 1, 1), P(1, 1, 1)), "T2", False, False, None),
}

_S1 = ("identity", "halfplane", "halfplane_r", "hslits",
       "koebe", "koebe_r", "hslits_wide", "hslits_wide_r")
_T3 = ("cardioid_r", "cardioid", "halfplane_avg", "halfplane_avg_r",
       "hslits_avg", "parabola", "parabola_r")
_T5 = ("identity", "halfplane", "halfplane_r", "vslits",
       "halfplane_avg", "halfplane_avg_r", "vslits_avg",
       "offset_vslits", "offset_vslits_r")

# shear sources, in case-analysis order: 15 real-direction, 9 imaginary-direction
_CV1_SOURCES = ("identity", "halfplane", "halfplane_r", "hslits",
                "koebe", "koebe_r", "hslits_wide", "hslits_wide_r",
                "cardioid_r", "cardioid", "halfplane_avg", "halfplane_avg_r",
                "hslits_avg", "parabola", "parabola_r")
_CVI_SOURCES = _T5

# shear outputs with half-integer coefficients, by sequential index
_CV1_HALF_INTEGER = {3, 6, 10, 11, 17, 20}
_CVI_HALF_INTEGER = {4, 5}

# closed forms for h taken from the hand integrations on record
_HALF = F(1, 2)
_CV1_H_EXPRS = {
    1: lg(-1, P(1, -1)),
    2: lg(1, P(1, 1)),
    3: _sum(rat(_HALF, ONE, P(1, -2, 1)), rat(-_HALF, ONE)),
    4: _sum(rat(_HALF, Z, P(1, -1)), lg(F(1, 4), P(1, 1)), lg(F(-1, 4), P(1, -1))),
    5: _sum(rat(_HALF, Z, P(1, 1)), lg(F(1, 4), P(1, 1)), lg(F(-1, 4), P(1, -1))),
    6: rat(_HALF, P(0, 2, 1), P(1, 2, 1)),
    7: _sum(rat(_HALF, P(0, 0, 1), P(1, 0, 1)), rat(_HALF, Z, P(1, 0, 1)),
            lg(_gr(0, F(-1, 4)), P(1, I)), lg(_gr(0, F(1, 4)), P(1, -I))),
    8: _sum(rat(-_HALF, P(0, 0, 1), P(1, 0, 1)), rat(_HALF, Z, P(1, 0, 1)),
            lg(_gr(0, F(-1, 4)), P(1, I)), lg(_gr(0, F(1, 4)), P(1, -I))),
    9: rat(1, P(0, 1, F(-1, 2), F(1, 6)), P(1, -3, 3, -1)),
    10: rat(_HALF, P(0, 2, -1), P(1, -2, 1)),
    11: rat(_HALF, P(0, 2, 1), P(1, 2, 1)),
    12: rat(1, P(0, 1, F(1, 2), F(1, 6)), P(1, 3, 3, 1)),
    17: rat(1, Z),
    18: _sum(lg(2, P(1, 1)), rat(-1, Z)),
    19: _sum(lg(-2, P(1, -1)), rat(-1, Z)),
    20: rat(1, Z),
    21: _sum(lg(-_HALF, P(1, -1)), rat(F(1, 4), ONE, P(1, -2, 1)), rat(F(-1, 4), ONE)),
    22: _sum(lg(F(5, 8), P(1, 1)), lg(F(-1, 8), P(1, -1)),
             rat(F(1, 4), ONE, P(1, -1)), rat(F(-1, 4), ONE)),
    23: _sum(lg(F(1, 8), P(1, 1)), lg(F(-5, 8), P(1, -1)), rat(F(1, 4), Z, P(1, 1))),
    24: _sum(lg(_HALF, P(1, 1)), rat(F(-1, 4), ONE, P(1, 2, 1)), rat(F(1, 4), ONE)),
    27: _sum(rat(F(1, 3), ONE, P(1, -3, 3, -1)), rat(F(-1, 3), ONE)),
    28: _sum(rat(F(1, 4), ONE, P(1, -2, 1)), rat(F(1, 4), ONE, P(1, -1)),
             rat(-_HALF, ONE), lg(F(1, 8), P(1, 1)), lg(F(-1, 8), P(1, -1))),
    29: _sum(rat(F(-1, 4), ONE, P(1, 2, 1)), rat(F(-1, 4), ONE, P(1, 1)),
             rat(_HALF, ONE), lg(F(1, 8), P(1, 1)), lg(F(-1, 8), P(1, -1))),
    30: _sum(rat(F(-1, 3), ONE, P(1, 3, 3, 1)), rat(F(1, 3), ONE)),
}

_CVI_H_EXPRS = {
    1: lg(1, P(1, 1)),
    2: lg(-1, P(1, -1)),
    3: _sum(rat(_HALF, Z, P(1, -1)), lg(F(1, 4), P(1, 1)), lg(F(-1, 4), P(1, -1))),
    4: _sum(rat(_HALF, ONE, P(1, -2, 1)), rat(-_HALF, ONE)),
    5: _sum(rat(-_HALF, ONE, P(1, 2, 1)), rat(_HALF, ONE)),
    6: _sum(rat(_HALF, Z, P(1, 1)), lg(F(1, 4), P(1, 1)), lg(F(-1, 4), P(1, -1))),
    9: _sum(lg(F(5, 8), P(1, 1)), lg(F(-1, 8), P(1, -1)), rat(F(1, 4), Z, P(1, -1))),
    10: _sum(rat(F(1, 4), ONE, P(1, -2, 1)), lg(-_HALF, P(1, -1)), rat(F(-1, 4), ONE)),
    11: _sum(rat(F(-1, 4), ONE, P(1, 2, 1)), lg(_HALF, P(1, 1)), rat(F(1, 4), ONE)),
    12: _sum(lg(F(1, 8), P(1, 1)), lg(F(-5, 8), P(1, -1)), rat(F(1, 4), Z, P(1, 1))),
    13: _sum(rat(F(-1, 8), ONE, P(1, 2, 1)), rat(F(1, 8), ONE, P(1, -1)),
             lg(F(-1, 16), P(1, -1)), lg(F(9, 16), P(1, 1))),
    14: _sum(rat(F(1, 8), ONE, P(1, -2, 1)), rat(F(-1, 8), ONE, P(1, 1)),
             lg(F(1, 16), P(1, 1)), lg(F(-9, 16), P(1, -1))),
    15: _sum(lg(F(1, 16), P(1, 1)), lg(F(-1, 16), P(1, -1)),
             rat(F(1, 8), ONE, P(1, -1)), rat(F(-3, 8), ONE, P(1, 2, 1)), rat(F(1, 4), ONE)),
    16: _sum(lg(F(3, 16), P(1, 1)), lg(F(-3, 16), P(1, -1)),
             rat(F(1, 8), ONE, P(1, -2, 1)), rat(F(-3, 8), ONE, P(1, 1)), rat(F(1, 4), ONE)),
    17: _sum(lg(F(3, 16), P(1, 1)), lg(F(-3, 16), P(1, -1)),
             rat(F(-1, 8), ONE, P(1, 2, 1)), rat(F(3, 8), ONE, P(1, -1)), rat(F(-1, 4), ONE)),
    18: _sum(lg(F(1, 16), P(1, 1)), lg(F(-1, 16), P(1, -1)),
             rat(F(3, 8), ONE, P(1, -2, 1)), rat(F(-1, 8), ONE, P(1, 1)), rat(F(-1, 4), ONE)),
}

# cv1 shear index -> (coinciding t4 entry, its cv_imag flag)
_CV1_T4_ID = {
    3: ("t4_re_koebe_im_halfplane", False),
    6: ("t4_re_koebe_r_im_halfplane_r", False),
    10: ("t4_re_halfplane_im_koebe", True),
    11: ("t4_re_halfplane_r_im_koebe_r", True),
    17: ("t4_conj_sq_plus", False),
    20: ("t4_conj_sq_minus", False),
}
# cvi shear index -> (coinciding t6 entry, its cv_real flag)
_CVI_T6_ID = {
    4: ("t6_re_halfplane_im_koebe", True),
    5: ("t6_re_halfplane_r_im_koebe_r", True),
}

_ALIASES = {
    "harmonic_koebe": "f9_cv1",
    "f_plus": "hslits_wide_avg",
    "f_minus": "hslits_wide_avg_r",
}


def _omega_expr(sign: int) -> AnalyticExpr:
    return rat(sign, Z)


def _t4_entries() -> list[CatalogEntry]:
    half = _HALF
    k_m, l_m = P(1, -2, 1), P(1, -1)     # (1-z)^2, 1-z
    k_p, l_p = P(1, 2, 1), P(1, 1)
    z2 = P(0, 0, 1)
    rows = [
        # id suffix, h, g, omega sign, cv_imag, starlike, recipe source
        ("re_koebe_im_halfplane", rat(half, P(0, 2, -1), k_m), rat(half, z2, k_m),
         +1, False, False, "halfplane"),
        ("re_koebe_r_im_halfplane_r", rat(half, P(0, 2, 1), k_p), rat(-half, z2, k_p),
         -1, False, None, "halfplane_r"),
        ("re_halfplane_im_koebe", rat(half, P(0, 2, -1), k_m), rat(-half, z2, k_m),
         -1, True, None, "koebe"),
        ("re_halfplane_r_im_koebe_r", rat(half, P(0, 2, 1), k_p), rat(half, z2, k_p),
         +1, True, None, "koebe_r"),
        ("conj_sq_plus", rat(1, Z), rat(half, z2),
         +1, False, None, "cardioid_r"),
        ("conj_sq_minus", rat(1, Z), rat(-half, z2),
         -1, False, None, "cardioid"),
    ]
    out = []
    for suffix, h, g, sign, cv_imag, starlike, src in rows:
        out.append(CatalogEntry(
            id=f"t4_{suffix}", family="T4", h=h, g=g, omega=_omega_expr(sign),
            expected=FlagSet(False, True, cv_real=True, cv_imag=cv_imag,
                             starlike=starlike),
            recipe=ShearRecipe(src, sign, "real"),
        ))
    return out


def _t6_entries() -> list[CatalogEntry]:
    half = _HALF
    z2 = P(0, 0, 1)
    rows = [
        ("re_halfplane_im_koebe", rat(half, P(0, 2, -1), P(1, -2, 1)),
         rat(-half, z2, P(1, -2, 1)), -1, "halfplane"),
        ("re_halfplane_r_im_koebe_r", rat(half, P(0, 2, 1), P(1, 2, 1)),
         rat(half, z2, P(1, 2, 1)), +1, "halfplane_r"),
    ]
    out = []
    for suffix, h, g, sign, src in rows:
        out.append(CatalogEntry(
            id=f"t6_{suffix}", family="T6", h=h, g=g, omega=_omega_expr(sign),
            expected=FlagSet(False, True, cv_real=True, cv_imag=True),
            recipe=ShearRecipe(src, sign, "imag"),
        ))
    return out


def _proof_entries(axis: str) -> list[CatalogEntry]:
    sources = _CV1_SOURCES if axis == "real" else _CVI_SOURCES
    half_set = _CV1_HALF_INTEGER if axis == "real" else _CVI_HALF_INTEGER
    h_exprs = _CV1_H_EXPRS if axis == "real" else _CVI_H_EXPRS
    twin_ids = _CV1_T4_ID if axis == "real" else _CVI_T6_ID
    tag = "cv1" if axis == "real" else "cvi"
    out = []
    for idx, source_id in enumerate(sources):
        source_expr = _CONFORMAL[source_id][0]
        for sign in (+1, -1):
            k = 2 * idx + (1 if sign > 0 else 2)
            is_half = k in half_set
            h = h_exprs.get(k)
            g = None
            if h is not None:
                g = h - source_expr if axis == "real" else source_expr - h
            twin_id, twin_flag = twin_ids.get(k, (None, None))
            if axis == "real":
                flags = FlagSet(False, is_half, cv_real=True, cv_imag=twin_flag,
                                starlike=False if k == 3 else None)
            else:
                flags = FlagSet(False, is_half, cv_imag=True, cv_real=twin_flag)
            out.append(CatalogEntry(
                id=f"f{k}_{tag}", family=f"PROOF_{tag.upper()}",
                h=h, g=g, omega=_omega_expr(sign), expected=flags,
                recipe=ShearRecipe(source_id, sign, axis),
                note=f"twin:{twin_id}" if twin_id else "",
            ))
    return out


def _conformal_entry(cid, prefix="", family=None) -> CatalogEntry:
    expr, base_family, cv_r, cv_i, boundary = _CONFORMAL[cid]
    in_sz = base_family == "S_Z"
    flags = FlagSet(
        integer_coeffs=in_sz,
        half_integer_coeffs=True,
        cv_real=cv_r,
        cv_imag=cv_i,
        starlike=True if in_sz else None,
        u_class=True if in_sz else (False if base_family == "T2" else None),
        boundary=boundary,
    )
    return CatalogEntry(id=prefix + cid, family=family or base_family, h=expr,
                        g=AnalyticExpr.zero(), omega=None, expected=flags)


_CATALOG: tuple[CatalogEntry, ...] | None = None
_INDEX: dict[str, CatalogEntry] = {}


def catalog_build() -> tuple[CatalogEntry, ...]:
    """Build (once) and return the full immutable catalog."""
    global _CATALOG
    if _CATALOG is not None:
        return _CATALOG
    entries: list[CatalogEntry] = []
    for cid in _CONFORMAL:
        entries.append(_conformal_entry(cid))
    for cid in _S1:
        entries.append(_conformal_entry(cid, prefix="s1_", family="S1"))
    for cid in _T3:
        entries.append(_conformal_entry(cid, prefix="t3_", family="T3"))
    for cid in _T5:
        entries.append(_conformal_entry(cid, prefix="t5_", family="T5"))
    entries.extend(_t4_entries())
    entries.extend(_t6_entries())
    entries.extend(_proof_entries("real"))
    entries.extend(_proof_entries("imag"))
    _CATALOG = tuple(entries)
    _INDEX.clear()
    _INDEX.update({e.id: e for e in entries})
    return _CATALOG


def catalog_lookup(entry_id: str) -> CatalogEntry:
    catalog_build()
    entry_id = _ALIASES.get(entry_id, entry_id)
    try:
        return _INDEX[entry_id]
    except KeyError:
        raise UnknownId(entry_id) from None


def catalog_ids(family: str | None = None) -> list[str]:
    return [e.id for e in catalog_build() if family is None or e.family == family]


def export_atlas() -> dict:
    """JSON-able atlas: id, family, expression text, expected flags."""
    entries = []
    for e in catalog_build():
        entries.append({
            "id": e.id,
            "family": e.family,
            "h": format_expr(e.h) if e.h is not None else None,
            "g": format_expr(e.g) if e.g is not None else None,
            "omega": format_expr(e.omega) if e.omega is not None else None,
            "recipe": (None if e.recipe is None else {
                "source": e.recipe.source_id,
                "omega": f"{'+' if e.recipe.omega_sign > 0 else '-'}z",
                "axis": e.recipe.axis,
            }),
            "flags": e.expected.to_json(),
        })
    return {"schema": 1, "entries": entries}
