"""Discrete certificates for maps of the Minkowski plane.

Everything here works on a "plane map": any object with an array-aware
``components(t, x) -> (t_out, x_out)`` method.  The module provides

* residual fields for split-holomorphy, the wave equation, and
  Lorentz-conformality, evaluated by central differences on a grid;
* randomized chronology checks: does the map preserve the strict
  causal order, and does it preserve exactly the order it should
  (the two-sided equivalence check);
* an automorphism suite that bundles those checks with the inverse
  chart, the round trip, orientation, and the worldline restriction;
* the two-observer averaging construction that is wave-solving but
  neither holomorphic nor antiholomorphic, together with the evidence
  that it fails to respect the causal order.

All central differences use steps snapped to the floating-point grid:
``step = (coord + h) - coord`` is the exactly representable distance
closest to ``h``, and the stencil divides by the realized step.  With
that hygiene the affine identity map yields residuals that are exactly
zero, and smooth maps yield residuals limited by rounding only.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from typing import Callable

import numpy as np

from .algebra import ZERO, SplitComplex, TwoVelocity
from .causal import DEFAULT_NULL_BAND, CausalRelation, classify, reverse_relation
from .errors import DegenerateSplit, EvaluationFailure
from .mwmap import MarzkeWheelerMap
from .observers import LipStatus, LipVerdict, Observer, lip_status

__all__ = [
    "PlaneMap",
    "IdentityMap",
    "ConjugateInput",
    "ConjugateOutput",
    "MapSum",
    "AffineLorentzMap",
    "FunctionMap",
    "WaveCauchyMap",
    "build_wave_cauchy",
    "GridSpec",
    "ResidualReport",
    "ConformalityReport",
    "holomorphy_residual",
    "wave_residual",
    "conformality_report",
    "log_factor_wave_residual",
    "WitnessPair",
    "ChronologyReport",
    "chronology_check",
    "causal_equivalence_check",
    "MapOrientation",
    "orientation_of",
    "AutomorphismOutcome",
    "AutomorphismReport",
    "automorphism_suite",
    "LowReport",
    "low_counterexample",
]


# -- plane maps ---------------------------------------------------------


class PlaneMap:
    """Base for maps of the plane given by componentwise array functions."""

    def components(self, t, x):
        raise NotImplementedError

    def __call__(self, z: SplitComplex) -> SplitComplex:
        t_out, x_out = self.components(np.asarray(z.t), np.asarray(z.x))
        return SplitComplex(float(t_out), float(x_out))


class IdentityMap(PlaneMap):
    def components(self, t, x):
        return np.asarray(t, dtype=float), np.asarray(x, dtype=float)

    def __repr__(self):
        return "IdentityMap()"


class ConjugateInput(PlaneMap):
    """``z -> F(conj(z))``: precompose with the spatial reflection."""

    def __init__(self, inner):
        self.inner = inner

    def components(self, t, x):
        return self.inner.components(t, -np.asarray(x, dtype=float))

    def __repr__(self):
        return f"ConjugateInput({self.inner!r})"


class ConjugateOutput(PlaneMap):
    """``z -> conj(F(z))``: postcompose with the spatial reflection."""

    def __init__(self, inner):
        self.inner = inner

    def components(self, t, x):
        t_out, x_out = self.inner.components(t, x)
        return t_out, -x_out

    def __repr__(self):
        return f"ConjugateOutput({self.inner!r})"


class MapSum(PlaneMap):
    """Pointwise sum of plane maps."""

    def __init__(self, terms):
        self.terms = tuple(terms)
        if not self.terms:
            raise ValueError("need at least one term")

    def components(self, t, x):
        parts = [term.components(t, x) for term in self.terms]
        return sum(p[0] for p in parts), sum(p[1] for p in parts)

    def __repr__(self):
        return f"MapSum({list(self.terms)!r})"


class AffineLorentzMap(PlaneMap):
    """``z -> scale * u * z + offset`` for a two-velocity ``u``.

    The basic exactly conformal map: holomorphic with constant
    derivative ``scale * u`` and conformal factor ``scale**2``.
    """

    def __init__(self, u: TwoVelocity, scale: float = 1.0, offset: SplitComplex = ZERO):
        self.u = u
        self.scale = float(scale)
        self.offset = offset

    def components(self, t, x):
        ut, ux = self.u.u.t, self.u.u.x
        return (
            self.scale * (ut * t + ux * x) + self.offset.t,
            self.scale * (ut * x + ux * t) + self.offset.x,
        )

    def __repr__(self):
        return f"AffineLorentzMap(u={self.u!r}, scale={self.scale!r}, offset={self.offset!r})"


class FunctionMap(PlaneMap):
    """Wrap an array-aware callable ``fn(t, x) -> (t_out, x_out)``."""

    def __init__(self, fn: Callable, label: str = "fn"):
        self.fn = fn
        self.label = label

    def components(self, t, x):
        return self.fn(t, x)

    def __repr__(self):
        return f"FunctionMap({self.label})"


class WaveCauchyMap(PlaneMap):
    """Componentwise wave solution from data on the time axis.

    Both output components solve the wave equation; the axis carries
    the data ``t_out(y, 0) = q(y)``, ``x_out(y, 0) = p(y)``, and the
    transverse derivatives are coupled through ``p`` and ``q`` with the
    chosen sign.  The quadrature term of the standard traveling-wave
    solution telescopes against the coupling, leaving the closed form

        t_out = (q(y+x) + q(y-x))/2 + sign * (p(y+x) - p(y-x))/2
        x_out = (p(y+x) + p(y-x))/2 + sign * (q(y+x) - q(y-x))/2

    With ``sign = +1`` and worldline coordinate profiles as data this
    reproduces the radar chart of the worldline arithmetic-exactly;
    ``sign = -1`` reproduces the chart precomposed with conjugation.
    """

    def __init__(self, p: Callable, q: Callable, sign: int = +1):
        if sign not in (+1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign!r}")
        self.p = p
        self.q = q
        self.sign = float(sign)

    def components(self, t, x):
        qp = self.q(t + x)
        qm = self.q(t - x)
        pp = self.p(t + x)
        pm = self.p(t - x)
        s = self.sign
        return (
            (qp + qm) * 0.5 + s * ((pp - pm) * 0.5),
            (pp + pm) * 0.5 + s * ((qp - qm) * 0.5),
        )

    def __repr__(self):
        return f"WaveCauchyMap(sign={int(self.sign):+d})"


def build_wave_cauchy(p: Callable, q: Callable, sign: int = +1) -> WaveCauchyMap:
    """Factory alias for :class:`WaveCauchyMap`."""
    return WaveCauchyMap(p, q, sign)


# -- grids and residual reports -----------------------------------------


@dataclass(frozen=True)
class GridSpec:
    """Rectangular evaluation grid with a stencil step.

    ``h`` defaults to a tenth of the smaller node spacing and must stay
    below half a spacing, so stencil points never reach past the
    neighboring node.
    """

    t_min: float
    t_max: float
    x_min: float
    x_max: float
    n_t: int = 33
    n_x: int = 33
    h: float | None = None

    def __post_init__(self):
        if not (self.t_min < self.t_max and self.x_min < self.x_max):
            raise ValueError("grid box must have positive extent")
        if self.n_t < 3 or self.n_x < 3:
            raise ValueError("need at least 3 nodes per direction")
        spacing = self.min_spacing
        if self.h is None:
            object.__setattr__(self, "h", spacing / 10.0)
        if not 0.0 < self.h < spacing / 2.0:
            raise ValueError(
                f"h = {self.h!r} must lie in (0, {spacing / 2.0!r})"
            )

    @property
    def min_spacing(self) -> float:
        return min(
            (self.t_max - self.t_min) / (self.n_t - 1),
            (self.x_max - self.x_min) / (self.n_x - 1),
        )

    @property
    def diameter(self) -> float:
        return max(self.t_max - self.t_min, self.x_max - self.x_min)

    @property
    def t_nodes(self):
        return np.linspace(self.t_min, self.t_max, self.n_t)

    @property
    def x_nodes(self):
        return np.linspace(self.x_min, self.x_max, self.n_x)

    def meshes(self):
        return np.meshgrid(self.t_nodes, self.x_nodes, indexing="ij")

    def halved(self) -> "GridSpec":
        return replace(self, h=self.h / 2.0)


@dataclass(frozen=True)
class ResidualReport:
    """Grid maximum and mean of a residual field, with the order seen
    when the stencil step is halved (None when a level is exactly 0)."""

    max_abs: float
    mean_abs: float
    location_of_max: tuple[float, float]
    convergence_order: float | None
    h: float


@dataclass(frozen=True)
class ConformalityReport:
    max_abs: float
    mean_abs: float
    location_of_max: tuple[float, float]
    convergence_order: float | None
    h: float
    factor_min: float
    factor_max: float
    n_nonpositive: int


def _stencil_points(coord, h):
    # Realized stencil nodes and spans.  Dividing differences by the
    # spans the nodes actually have (rather than by nominal h) keeps
    # affine maps residual-free: for them numerator and denominator
    # are the same float.
    up = coord + h
    dn = coord - h
    if np.any(up - coord <= 0.0) or np.any(coord - dn <= 0.0):
        raise EvaluationFailure(f"stencil step {h!r} underflows on the grid")
    return up, dn


def _first_derivs(F, T, X, h):
    tu, td = _stencil_points(T, h)
    xu, xd = _stencil_points(X, h)
    up = F.components(tu, X)
    dn = F.components(td, X)
    ri = F.components(T, xu)
    le = F.components(T, xd)
    span_t = tu - td
    span_x = xu - xd
    d0t = (up[0] - dn[0]) / span_t
    d0x = (up[1] - dn[1]) / span_t
    d1t = (ri[0] - le[0]) / span_x
    d1x = (ri[1] - le[1]) / span_x
    return d0t, d0x, d1t, d1x


def _holo_field(F, T, X, h, anti: bool):
    d0t, d0x, d1t, d1x = _first_derivs(F, T, X, h)
    s = -1.0 if anti else 1.0
    # Split Cauchy-Riemann system: d/dx F = +/- J * d/dt F.
    rt = d1t - s * d0x
    rx = d1x - s * d0t
    return np.hypot(rt, rx)


def _second_diff(f_up, f_0, f_dn, coord, up, dn):
    # Divided-difference form of the second derivative over realized
    # spans; identically zero for affine functions because each slope
    # ratio is numerator and denominator of the very same floats.
    d_p = up - coord
    d_m = coord - dn
    return 2.0 * ((f_up - f_0) / d_p - (f_0 - f_dn) / d_m) / (d_p + d_m)


def _wave_field(F, T, X, h):
    tu, td = _stencil_points(T, h)
    xu, xd = _stencil_points(X, h)
    f_0 = F.components(T, X)
    up = F.components(tu, X)
    dn = F.components(td, X)
    ri = F.components(T, xu)
    le = F.components(T, xd)
    wt = _second_diff(up[0], f_0[0], dn[0], T, tu, td) - _second_diff(
        ri[0], f_0[0], le[0], X, xu, xd
    )
    wx = _second_diff(up[1], f_0[1], dn[1], T, tu, td) - _second_diff(
        ri[1], f_0[1], le[1], X, xu, xd
    )
    return np.hypot(wt, wx)


def _conformal_fields(F, T, X, h):
    d0t, d0x, d1t, d1x = _first_derivs(F, T, X, h)
    g00 = d0t * d0t - d0x * d0x
    g01 = d0t * d1t - d0x * d1x
    g11 = d1t * d1t - d1x * d1x
    # Conformal iff the metric pullback is g00 * diag(1, -1).
    resid = np.sqrt(2.0 * g01 * g01 + (g11 + g00) ** 2)
    return resid, g00


def _order(max_h: float, max_half: float) -> float | None:
    if max_h > 0.0 and max_half > 0.0:
        return math.log2(max_h / max_half)
    return None


def _location(field, grid: GridSpec) -> tuple[float, float]:
    i, j = np.unravel_index(int(np.argmax(field)), field.shape)
    return float(grid.t_nodes[i]), float(grid.x_nodes[j])


def holomorphy_residual(F, grid: GridSpec, anti: bool = False) -> ResidualReport:
    """Central-difference residual of the split Cauchy-Riemann system.

    ``anti=True`` checks the reflected system instead (maps that are
    holomorphic after precomposing with conjugation).
    """
    T, X = grid.meshes()
    r1 = _holo_field(F, T, X, grid.h, anti)
    r2 = _holo_field(F, T, X, grid.h / 2.0, anti)
    return ResidualReport(
        float(r1.max()),
        float(r1.mean()),
        _location(r1, grid),
        _order(float(r1.max()), float(r2.max())),
        grid.h,
    )


def wave_residual(F, grid: GridSpec) -> ResidualReport:
    """Componentwise discrete d'Alembertian of the map on the grid."""
    T, X = grid.meshes()
    r1 = _wave_field(F, T, X, grid.h)
    r2 = _wave_field(F, T, X, grid.h / 2.0)
    return ResidualReport(
        float(r1.max()),
        float(r1.mean()),
        _location(r1, grid),
        _order(float(r1.max()), float(r2.max())),
        grid.h,
    )


def conformality_report(F, grid: GridSpec) -> ConformalityReport:
    """Deviation of the metric pullback from a positive multiple of the
    Minkowski metric, plus the observed range of the factor."""
    T, X = grid.meshes()
    r1, lam = _conformal_fields(F, T, X, grid.h)
    r2, _ = _conformal_fields(F, T, X, grid.h / 2.0)
    return ConformalityReport(
        float(r1.max()),
        float(r1.mean()),
        _location(r1, grid),
        _order(float(r1.max()), float(r2.max())),
        grid.h,
        float(lam.min()),
        float(lam.max()),
        int(np.count_nonzero(lam <= 0.0)),
    )


def log_factor_wave_residual(m, grid: GridSpec) -> ResidualReport:
    """Discrete d'Alembertian of ``log`` of the map's conformal factor.

    For a conformal change of coordinates on the flat plane the log
    factor is harmonic in the wave sense; this residual certifies it
    on the grid.  ``m`` must expose ``conformal_components`` (the radar
    charts do).
    """

    def field(T, X):
        return np.log(m.conformal_components(T, X, mode="analytic"))

    T, X = grid.meshes()

    def run(h):
        tu, td = _stencil_points(T, h)
        xu, xd = _stencil_points(X, h)
        f_0 = field(T, X)
        wt = _second_diff(field(tu, X), f_0, field(td, X), T, tu, td)
        wx = _second_diff(field(T, xu), f_0, field(T, xd), X, xu, xd)
        return np.abs(wt - wx)

    r1 = run(grid.h)
    r2 = run(grid.h / 2.0)
    return ResidualReport(
        float(r1.max()),
        float(r1.mean()),
        _location(r1, grid),
        _order(float(r1.max()), float(r2.max())),
        grid.h,
    )


# -- chronology checks --------------------------------------------------


@dataclass(frozen=True)
class WitnessPair:
    """Certified breakdown of order preservation at one pair.

    Normalized so that exactly one of the two relations is
    CHRON_FUTURE: either the inputs are chronological and the outputs
    are not, or the other way around.
    """

    z1: SplitComplex
    z2: SplitComplex
    relation_in: CausalRelation
    relation_out: CausalRelation


@dataclass(frozen=True)
class ChronologyReport:
    """Outcome of a randomized order-preservation check."""

    n_pairs: int
    seed: int
    min_margin: float
    witness: WitnessPair | None
    passed: bool


def _normalized_witness(z1, z2, rel_in, rel_out) -> WitnessPair:
    chron = CausalRelation.CHRON_FUTURE
    if chron in (rel_in, rel_out):
        return WitnessPair(z1, z2, rel_in, rel_out)
    if CausalRelation.CHRON_PAST in (rel_in, rel_out):
        return WitnessPair(
            z2, z1, reverse_relation(rel_in), reverse_relation(rel_out)
        )
    raise EvaluationFailure(
        f"pair with relations ({rel_in}, {rel_out}) certifies nothing"
    )


def _box_scale(grid: GridSpec) -> float:
    return max(grid.t_max - grid.t_min, grid.x_max - grid.x_min)


def _child_seeds(seed: int, n: int) -> list[int]:
    # Deterministic distinct sub-seeds for the pieces of a suite.
    return [int(s) for s in np.random.SeedSequence(seed).generate_state(n)]


def _draw_events(rng, grid: GridSpec, n: int):
    t = rng.uniform(grid.t_min, grid.t_max, n)
    x = rng.uniform(grid.x_min, grid.x_max, n)
    return t, x


def chronology_check(
    F,
    grid: GridSpec,
    n_pairs: int = 1000,
    seed: int = 0,
    tol: float = DEFAULT_NULL_BAND,
) -> ChronologyReport:
    """Does ``z1 << z2`` imply ``F(z1) << F(z2)``?

    Samples decisively chronological input pairs from the grid box
    (squared interval at least ``(scale/10)**2``, so classification
    noise cannot manufacture inputs) and requires every output pair to
    classify as chronological future.  The first failure is returned
    as a normalized witness.
    """
    rng = np.random.default_rng(seed)
    scale = _box_scale(grid)
    need_q = (0.1 * scale) ** 2
    t1 = np.empty(0)
    x1 = np.empty(0)
    t2 = np.empty(0)
    x2 = np.empty(0)
    for _ in range(200):
        if t1.size >= n_pairs:
            break
        ta, xa = _draw_events(rng, grid, 2 * n_pairs)
        tb, xb = _draw_events(rng, grid, 2 * n_pairs)
        lo_first = ta <= tb
        tlo = np.where(lo_first, ta, tb)
        xlo = np.where(lo_first, xa, xb)
        thi = np.where(lo_first, tb, ta)
        xhi = np.where(lo_first, xb, xa)
        dt = thi - tlo
        dx = xhi - xlo
        keep = (dt - np.abs(dx)) * (dt + np.abs(dx)) >= need_q
        t1 = np.concatenate([t1, tlo[keep]])
        x1 = np.concatenate([x1, xlo[keep]])
        t2 = np.concatenate([t2, thi[keep]])
        x2 = np.concatenate([x2, xhi[keep]])
    else:
        raise EvaluationFailure(
            "could not sample decisively chronological pairs in the box"
        )
    t1, x1, t2, x2 = (a[:n_pairs] for a in (t1, x1, t2, x2))

    o1t, o1x = F.components(t1, x1)
    o2t, o2x = F.components(t2, x2)
    dt = o2t - o1t
    dx = o2x - o1x
    q = (dt - dx) * (dt + dx)
    band = tol * (1.0 + dt * dt + dx * dx)
    margins = np.where(dt > 0.0, q, -np.abs(q))
    ok = (q > band) & (dt > 0.0)
    min_margin = float(margins.min()) if margins.size else math.nan

    witness = None
    if not ok.all():
        i = int(np.argmax(~ok))
        z1 = SplitComplex(float(t1[i]), float(x1[i]))
        z2 = SplitComplex(float(t2[i]), float(x2[i]))
        witness = _normalized_witness(
            z1, z2, classify(z1, z2, tol), classify(F(z1), F(z2), tol)
        )
    return ChronologyReport(
        int(t1.size), int(seed), min_margin, witness, witness is None
    )


def causal_equivalence_check(
    F,
    grid: GridSpec,
    n_pairs: int = 1000,
    seed: int = 0,
    tol: float = DEFAULT_NULL_BAND,
) -> ChronologyReport:
    """Does ``z1 << z2`` hold exactly when ``F(z1) << F(z2)``?

    The two-sided version of :func:`chronology_check`: inputs are
    sampled without ordering constraints, kept only when decisively
    chronological or decisively spacelike, and the outputs must agree
    with the biconditional decisively (margin ten null bands).  Pairs
    whose outputs land too close to the cone are skipped rather than
    counted either way.
    """
    rng = np.random.default_rng(seed)
    scale = _box_scale(grid)
    dec_q = (0.1 * scale) ** 2
    t1, x1 = _draw_events(rng, grid, n_pairs)
    t2, x2 = _draw_events(rng, grid, n_pairs)
    dt_in = t2 - t1
    dx_in = x2 - x1
    q_in = (dt_in - dx_in) * (dt_in + dx_in)
    in_cf = (q_in >= dec_q) & (dt_in > 0.0)
    in_decisive = (q_in >= dec_q) | (q_in <= -dec_q)

    o1t, o1x = F.components(t1, x1)
    o2t, o2x = F.components(t2, x2)
    dt = o2t - o1t
    dx = o2x - o1x
    q = (dt - dx) * (dt + dx)
    band = tol * (1.0 + dt * dt + dx * dx)
    m_out = np.where(dt > 0.0, q, -np.abs(q))
    score = np.where(in_cf, m_out, -m_out)
    out_decisive = np.abs(m_out) > 10.0 * band

    counted = in_decisive & out_decisive
    violating = counted & (score < 0.0)
    min_margin = float(score[counted].min()) if counted.any() else math.nan

    witness = None
    if violating.any():
        i = int(np.argmax(violating))
        z1 = SplitComplex(float(t1[i]), float(x1[i]))
        z2 = SplitComplex(float(t2[i]), float(x2[i]))
        witness = _normalized_witness(
            z1, z2, classify(z1, z2, tol), classify(F(z1), F(z2), tol)
        )
    return ChronologyReport(
        int(np.count_nonzero(counted)), int(seed), min_margin, witness,
        witness is None,
    )


# -- orientation and the automorphism suite ------------------------------


class MapOrientation(enum.Enum):
    PRESERVING = "preserving"
    REVERSING = "reversing"
    NEITHER = "neither"


def orientation_of(
    F,
    probe: SplitComplex = ZERO,
    span: float = 1.0,
    n: int = 65,
    tol: float = 1e-8,
) -> MapOrientation:
    """Which ray family does the image of a right-moving ray lie in?

    Samples the ray of constant ``t - x`` through ``probe``.  If the
    image keeps ``t - x`` constant the map preserves the two null
    directions; if it keeps ``t + x`` constant instead, the map swaps
    them; if neither level stays constant the map does not act on rays
    at all.
    """
    zeta_plus = (probe.t + probe.x) + np.linspace(0.0, span, n)
    zeta_minus = np.full(n, probe.t - probe.x)
    t = (zeta_plus + zeta_minus) / 2.0
    x = (zeta_plus - zeta_minus) / 2.0
    out_t, out_x = F.components(t, x)
    plus = out_t + out_x
    minus = out_t - out_x
    spread_plus = float(plus.max() - plus.min())
    spread_minus = float(minus.max() - minus.min())
    level = tol * (
        1.0 + max(np.abs(plus).max(), np.abs(minus).max())
    )
    plus_const = spread_plus <= level
    minus_const = spread_minus <= level
    if minus_const and not plus_const:
        return MapOrientation.PRESERVING
    if plus_const and not minus_const:
        return MapOrientation.REVERSING
    return MapOrientation.NEITHER


class AutomorphismOutcome(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class AutomorphismReport:
    outcome: AutomorphismOutcome
    lip: LipStatus
    forward: ChronologyReport | None = None
    inverse: ChronologyReport | None = None
    roundtrip_max: float | None = None
    orientation: MapOrientation | None = None
    axis_max: float | None = None


class _InverseChart:
    """Radar inverse of a chart, presented as a plane map."""

    def __init__(self, m: MarzkeWheelerMap):
        self.m = m

    def components(self, t, x):
        return self.m.radar_inverse_components(t, x)

    def __call__(self, z: SplitComplex) -> SplitComplex:
        return self.m.radar_inverse(z)


def automorphism_suite(
    m: MarzkeWheelerMap,
    grid: GridSpec,
    n_pairs: int = 1000,
    seed: int = 0,
) -> AutomorphismReport:
    """Certify that the chart acts as a causal automorphism on the box.

    Requires a globally chartable worldline first; without that the
    suite is not applicable and says so instead of failing.  Then the
    chart and its radar inverse must both preserve chronology on
    sampled pairs, the round trip must return to the chart point, the
    chart must preserve the two ray families, and the restriction to
    the worldline's own axis must reproduce the worldline exactly.
    """
    lip = lip_status(m.observer)
    if lip.verdict is not LipVerdict.VERIFIED:
        return AutomorphismReport(AutomorphismOutcome.NOT_APPLICABLE, lip)

    s_forward, s_inverse, s_trip = _child_seeds(seed, 3)
    forward = chronology_check(m, grid, n_pairs, s_forward)
    inverse = chronology_check(_InverseChart(m), grid, n_pairs, s_inverse)

    rng = np.random.default_rng(s_trip)
    t, x = _draw_events(rng, grid, n_pairs)
    et, ex = m.components(t, x)
    rt, rx = m.radar_inverse_components(et, ex)
    roundtrip_max = float(np.max(np.hypot(rt - t, rx - x)))

    center = SplitComplex(
        (grid.t_min + grid.t_max) / 2.0, (grid.x_min + grid.x_max) / 2.0
    )
    orientation = orientation_of(m, center, span=_box_scale(grid) / 4.0)

    axis_t = grid.t_nodes
    out_t, out_x = m.components(axis_t, np.zeros_like(axis_t))
    ref_t, ref_x = m.observer.position(axis_t)
    axis_max = float(
        max(np.max(np.abs(out_t - ref_t)), np.max(np.abs(out_x - ref_x)))
    )

    roundtrip_tol = 100.0 * m.root_tol * (1.0 + _box_scale(grid))
    ok = (
        forward.passed
        and inverse.passed
        and roundtrip_max <= roundtrip_tol
        and orientation is MapOrientation.PRESERVING
        and axis_max == 0.0
    )
    return AutomorphismReport(
        AutomorphismOutcome.PASS if ok else AutomorphismOutcome.FAIL,
        lip,
        forward,
        inverse,
        roundtrip_max,
        orientation,
        axis_max,
    )


# -- the averaging construction that is not an automorphism --------------


@dataclass(frozen=True)
class LowReport:
    """Evidence package for the two-observer averaging map.

    The map solves the wave equation componentwise and restricts on the
    axis to the sum of the two worldlines, yet it is neither
    holomorphic nor antiholomorphic and fails to respect the causal
    order: the equivalence check exhibits a witness pair.
    """

    wave: ResidualReport
    holo: ResidualReport
    antiholo: ResidualReport
    axis_max: float
    axis_ok: bool
    forward: ChronologyReport
    equivalence: ChronologyReport
    n_pairs: int
    seed: int


def _constant_spread(obs: Observer, grid: GridSpec) -> float:
    lo, hi = obs.domain
    reach = max(abs(grid.x_min), abs(grid.x_max))
    lo = max(lo, grid.t_min - reach)
    hi = min(hi, grid.t_max + reach)
    if not lo < hi:
        lo, hi = obs.domain
    s = np.linspace(lo, hi, 64)
    t, x = obs.position(s)
    return float(
        max(np.max(t) - np.min(t), np.max(x) - np.min(x))
    )


def low_counterexample(
    g1: Observer,
    g2: Observer,
    grid: GridSpec,
    seed: int = 0,
    n_pairs: int = 100000,
) -> LowReport:
    """Build ``F(z) = chart1(z) + chart2(conj z)`` and document it.

    Raises
    ------
    DegenerateSplit
        If the second worldline is numerically constant over the
        working window, in which case the second term degenerates to a
        translation and the construction proves nothing.
    """
    scale = _box_scale(grid)
    if _constant_spread(g2, grid) <= 1e-12 * (1.0 + scale):
        raise DegenerateSplit(
            f"{g2!r} is numerically constant over the working window"
        )
    m1 = MarzkeWheelerMap(g1)
    m2 = MarzkeWheelerMap(g2)
    F = MapSum([m1, ConjugateInput(m2)])

    wave = wave_residual(F, grid)
    holo = holomorphy_residual(F, grid)
    antiholo = holomorphy_residual(F, grid, anti=True)

    axis_t = grid.t_nodes
    zeros = np.zeros_like(axis_t)
    out_t, out_x = F.components(axis_t, zeros)
    p1 = g1.position(axis_t)
    p2 = g2.position(axis_t)
    ref_t = p1[0] + p2[0]
    ref_x = p1[1] + p2[1]
    axis_max = float(
        max(np.max(np.abs(out_t - ref_t)), np.max(np.abs(out_x - ref_x)))
    )

    s_forward, s_equiv = _child_seeds(seed, 2)
    forward = chronology_check(F, grid, min(n_pairs, 10000), s_forward)
    equivalence = causal_equivalence_check(F, grid, n_pairs, s_equiv)

    return LowReport(
        wave,
        holo,
        antiholo,
        axis_max,
        axis_max == 0.0,
        forward,
        equivalence,
        n_pairs,
        seed,
    )
