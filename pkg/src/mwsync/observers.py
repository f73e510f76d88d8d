"""Worldlines on the Minkowski plane.

An observer is a future-directed timelike curve ``gamma(s)`` given by
array-aware coordinate functions.  The parameter convention is fixed by
each kind (proper time for the inertial and uniformly accelerated
families, coordinate time for the sampled kinds); what the rest of the
package relies on is only that ``gamma`` is future-directed timelike,
which :func:`verify_observer` checks by sampling.

The null coordinate functions ``s -> t(s) + x(s)`` and
``s -> t(s) - x(s)`` are strictly increasing along any such curve, and
their ranges decide whether radar synchronization through the observer
reaches the whole plane.  :func:`lip_status` reports that verdict:
an observer from whose worldline no light ray can escape in either
direction sees every event, one with a bounded null range does not.
"""

from __future__ import annotations

import enum
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np

from .algebra import (
    NATURAL_UNITS,
    ZERO,
    LightspeedContext,
    SplitComplex,
    TwoVelocity,
    two_velocity,
)
from .errors import DomainExceeded, NotTimelike

__all__ = [
    "Smoothness",
    "Observer",
    "Inertial",
    "Rindler",
    "PerturbedInertial",
    "PiecewiseLinear",
    "SumObserver",
    "BoostedObserver",
    "TranslatedObserver",
    "ObserverCheck",
    "verify_observer",
    "LipVerdict",
    "LipStatus",
    "lip_status",
]

_FULL_LINE = (-math.inf, math.inf)


class Smoothness(enum.IntEnum):
    """Regularity ladder; comparisons use the integer order."""

    C0 = 0
    PIECEWISE_SMOOTH = 1
    C1 = 2
    C2 = 3


class Observer(ABC):
    """Future-directed timelike worldline with array-aware evaluation.

    Subclasses implement :meth:`position` and :meth:`velocity` over
    floats or numpy arrays and declare their :attr:`smoothness`.  The
    scalar entry points :meth:`__call__` and :meth:`derivative` wrap
    the results in :class:`~mwsync.algebra.SplitComplex`.
    """

    smoothness: Smoothness = Smoothness.C2

    @property
    def domain(self) -> tuple[float, float]:
        """Closed parameter interval on which the curve is defined."""
        return _FULL_LINE

    @property
    def null_plus_range(self) -> tuple[float, float] | None:
        """Open range of ``s -> t(s) + x(s)``, or None if only sampled."""
        return _FULL_LINE

    @property
    def null_minus_range(self) -> tuple[float, float] | None:
        """Open range of ``s -> t(s) - x(s)``, or None if only sampled."""
        return _FULL_LINE

    @abstractmethod
    def position(self, s):
        """Coordinates ``(t, x)`` at parameter ``s`` (arrays allowed)."""

    @abstractmethod
    def velocity(self, s):
        """Parameter derivative ``(dt/ds, dx/ds)`` (arrays allowed)."""

    def __call__(self, s: float) -> SplitComplex:
        t, x = self.position(float(s))
        return SplitComplex(float(t), float(x))

    def derivative(self, s: float) -> SplitComplex:
        """Tangent vector at ``s`` as a split-complex number.

        At a parameter where the curve is only one-sidedly smooth the
        right-hand derivative is returned; kinds that expose such
        points say so in their own docstring.
        """
        t, x = self.velocity(float(s))
        return SplitComplex(float(t), float(x))

    def null_plus(self, s):
        t, x = self.position(s)
        return t + x

    def null_minus(self, s):
        t, x = self.position(s)
        return t - x

    def null_coords(self, s):
        t, x = self.position(s)
        return t + x, t - x

    def null_window(self) -> tuple[tuple[float, float], tuple[float, float]] | None:
        """Achieved null-coordinate window over the (finite) domain.

        Meaningful for sampled kinds; analytic kinds report their
        ranges through the range properties instead and return None
        here when the domain is unbounded.
        """
        lo, hi = self.domain
        if not (math.isfinite(lo) and math.isfinite(hi)):
            return None
        return (
            (float(self.null_plus(lo)), float(self.null_plus(hi))),
            (float(self.null_minus(lo)), float(self.null_minus(hi))),
        )

    def boosted(self, v, ctx: LightspeedContext = NATURAL_UNITS) -> "BoostedObserver":
        """This worldline boosted by velocity ``v`` (or a TwoVelocity)."""
        u = v if isinstance(v, TwoVelocity) else two_velocity(float(v), ctx)
        return BoostedObserver(u, self)

    def translated(self, offset: SplitComplex) -> "TranslatedObserver":
        """This worldline shifted by a constant event offset."""
        return TranslatedObserver(offset, self)

    def __add__(self, other: "Observer"):
        if not isinstance(other, Observer):
            return NotImplemented
        return SumObserver((self, other))


class Inertial(Observer):
    """Straight worldline ``gamma(s) = base + s*u`` at constant velocity.

    Parameterized by proper time; ``u`` is the unit two-velocity of the
    coordinate velocity ``v``.
    """

    smoothness = Smoothness.C2

    def __init__(
        self,
        v: float = 0.0,
        base: SplitComplex = ZERO,
        ctx: LightspeedContext = NATURAL_UNITS,
    ):
        self.v = float(v)
        self.base = base
        self.u = two_velocity(self.v, ctx)

    def position(self, s):
        return self.base.t + s * self.u.u.t, self.base.x + s * self.u.u.x

    def velocity(self, s):
        shape = np.shape(s)
        return np.full(shape, self.u.u.t), np.full(shape, self.u.u.x)

    def __repr__(self):
        return f"Inertial(v={self.v!r}, base={self.base!r})"


class Rindler(Observer):
    """Uniformly accelerated worldline, proper acceleration ``a``.

    Parameterized by proper time:
    ``gamma(s) = (c**2/a) * (sinh(a s / c**2), cosh(a s / c**2))``
    (coordinates in the ``(ct, x)`` convention).  The curve hugs the
    light cone through the coordinate origin, so one of the two null
    coordinates is bounded: this is the standard example of a worldline
    whose radar chart covers a wedge rather than the plane.
    """

    smoothness = Smoothness.C2

    def __init__(self, a: float, ctx: LightspeedContext = NATURAL_UNITS):
        a = float(a)
        if a == 0.0 or not math.isfinite(a):
            raise ValueError(f"proper acceleration must be finite and nonzero, got {a!r}")
        self.a = a
        self.scale = ctx.c * ctx.c / a  # signed length c**2/a

    def position(self, s):
        w = s / self.scale
        return self.scale * np.sinh(w), self.scale * np.cosh(w)

    def velocity(self, s):
        w = s / self.scale
        return np.cosh(w), np.sinh(w)

    @property
    def null_plus_range(self):
        # t + x = scale * exp(s/scale): one signed half-line.
        return (0.0, math.inf) if self.scale > 0 else (-math.inf, 0.0)

    @property
    def null_minus_range(self):
        # t - x = -scale * exp(-s/scale): the opposite half-line.
        return (-math.inf, 0.0) if self.scale > 0 else (0.0, math.inf)

    def __repr__(self):
        return f"Rindler(a={self.a!r})"


class PerturbedInertial(Observer):
    """Oscillating worldline ``gamma(s) = (s, A*sin(w*s))``.

    Parameterized by coordinate time.  Timelike exactly when the peak
    coordinate speed ``|A*w|`` stays below 1 (in ct units), which the
    constructor enforces strictly.
    """

    smoothness = Smoothness.C2

    def __init__(self, amplitude: float, frequency: float):
        self.amplitude = float(amplitude)
        self.frequency = float(frequency)
        peak = abs(self.amplitude * self.frequency)
        if not peak < 1.0:
            raise ValueError(
                f"peak speed |amplitude*frequency| = {peak!r} must be < 1"
            )

    def position(self, s):
        return np.asarray(s, dtype=float) + 0.0, self.amplitude * np.sin(
            self.frequency * np.asarray(s, dtype=float)
        )

    def velocity(self, s):
        s = np.asarray(s, dtype=float)
        return np.ones_like(s), self.amplitude * self.frequency * np.cos(
            self.frequency * s
        )

    def __repr__(self):
        return (
            f"PerturbedInertial(amplitude={self.amplitude!r}, "
            f"frequency={self.frequency!r})"
        )


class PiecewiseLinear(Observer):
    """Polygonal worldline through given ``(t, x)`` vertices.

    Parameterized by coordinate time over the closed vertex window.
    Continuous but kinked, so :attr:`smoothness` is C0 and
    :meth:`velocity` returns the right-hand slope at each vertex (the
    last vertex reuses the final segment).  Vertices need strictly
    increasing ``t``; segment speeds are not checked here, that is what
    :func:`verify_observer` is for.
    """

    smoothness = Smoothness.C0

    def __init__(self, vertices):
        pts = [(float(t), float(x)) for t, x in vertices]
        if len(pts) < 2:
            raise ValueError("need at least two vertices")
        self.ts = np.array([p[0] for p in pts])
        self.xs = np.array([p[1] for p in pts])
        if not np.all(np.diff(self.ts) > 0.0):
            raise ValueError("vertex times must increase strictly")
        self.slopes = np.diff(self.xs) / np.diff(self.ts)

    @property
    def domain(self):
        return float(self.ts[0]), float(self.ts[-1])

    @property
    def null_plus_range(self):
        return None

    @property
    def null_minus_range(self):
        return None

    def _check(self, s):
        s = np.asarray(s, dtype=float)
        if np.any(s < self.ts[0]) or np.any(s > self.ts[-1]):
            raise DomainExceeded(
                f"parameter outside [{self.ts[0]!r}, {self.ts[-1]!r}]"
            )
        return s

    def position(self, s):
        s = self._check(s)
        return s + 0.0, np.interp(s, self.ts, self.xs)

    def velocity(self, s):
        s = self._check(s)
        idx = np.clip(
            np.searchsorted(self.ts, s, side="right") - 1, 0, len(self.slopes) - 1
        )
        return np.ones_like(s), self.slopes[idx]

    def null_window(self):
        # Piecewise-linear functions attain extrema at vertices, so the
        # exact achieved window comes from the vertex set.
        plus = self.ts + self.xs
        minus = self.ts - self.xs
        return (
            (float(plus.min()), float(plus.max())),
            (float(minus.min()), float(minus.max())),
        )

    def __repr__(self):
        return f"PiecewiseLinear({len(self.ts)} vertices on [{self.ts[0]:g}, {self.ts[-1]:g}])"


def _sum_ends(values):
    # Endpoint sum with infinities; mixed-sign infinities cannot occur
    # because all summands are endpoints of the same side.
    total = 0.0
    for v in values:
        if math.isinf(v):
            return v
        total += v
    return total


class SumObserver(Observer):
    """Pointwise sum of worldlines (sum of timelike is timelike)."""

    def __init__(self, children):
        children = tuple(children)
        if len(children) < 1:
            raise ValueError("need at least one child")
        self.children = children
        self.smoothness = Smoothness(min(c.smoothness for c in children))

    @property
    def domain(self):
        los, his = zip(*(c.domain for c in self.children))
        return max(los), min(his)

    def _range(self, attr):
        ranges = [getattr(c, attr) for c in self.children]
        if any(r is None for r in ranges):
            return None
        # Each child's null coordinate increases in s, so the sum's
        # range endpoints are the sums of the children's endpoints.
        return _sum_ends(r[0] for r in ranges), _sum_ends(r[1] for r in ranges)

    @property
    def null_plus_range(self):
        return self._range("null_plus_range")

    @property
    def null_minus_range(self):
        return self._range("null_minus_range")

    def position(self, s):
        parts = [c.position(s) for c in self.children]
        return sum(p[0] for p in parts), sum(p[1] for p in parts)

    def velocity(self, s):
        parts = [c.velocity(s) for c in self.children]
        return sum(p[0] for p in parts), sum(p[1] for p in parts)

    def __repr__(self):
        return f"SumObserver({list(self.children)!r})"


class BoostedObserver(Observer):
    """Child worldline boosted by a fixed two-velocity.

    Boosting scales the null coordinates by the positive factors
    ``u.t + u.x`` and ``u.t - u.x``, so range endpoints just scale.
    """

    def __init__(self, u: TwoVelocity, child: Observer):
        self.u = u
        self.child = child
        self.smoothness = child.smoothness

    @property
    def domain(self):
        return self.child.domain

    def _scaled(self, r, factor):
        if r is None:
            return None
        return r[0] * factor, r[1] * factor

    @property
    def null_plus_range(self):
        return self._scaled(self.child.null_plus_range, self.u.u.t + self.u.u.x)

    @property
    def null_minus_range(self):
        return self._scaled(self.child.null_minus_range, self.u.u.t - self.u.u.x)

    def position(self, s):
        t, x = self.child.position(s)
        return self.u.u.t * t + self.u.u.x * x, self.u.u.t * x + self.u.u.x * t

    def velocity(self, s):
        t, x = self.child.velocity(s)
        return self.u.u.t * t + self.u.u.x * x, self.u.u.t * x + self.u.u.x * t

    def __repr__(self):
        return f"BoostedObserver(u={self.u!r}, child={self.child!r})"


class TranslatedObserver(Observer):
    """Child worldline shifted by a constant event offset."""

    def __init__(self, offset: SplitComplex, child: Observer):
        self.offset = offset
        self.child = child
        self.smoothness = child.smoothness

    @property
    def domain(self):
        return self.child.domain

    def _shifted(self, r, amount):
        if r is None:
            return None
        return r[0] + amount, r[1] + amount

    @property
    def null_plus_range(self):
        return self._shifted(self.child.null_plus_range, self.offset.t + self.offset.x)

    @property
    def null_minus_range(self):
        return self._shifted(self.child.null_minus_range, self.offset.t - self.offset.x)

    def position(self, s):
        t, x = self.child.position(s)
        return t + self.offset.t, x + self.offset.x

    def velocity(self, s):
        return self.child.velocity(s)

    def __repr__(self):
        return f"TranslatedObserver(offset={self.offset!r}, child={self.child!r})"


@dataclass(frozen=True)
class ObserverCheck:
    """Outcome of a successful timelike-order check.

    ``worst_margin`` is the smallest normalized margin
    ``norm_sq(gamma(s2) - gamma(s1)) / (s2 - s1)**2`` seen over all
    sampled pairs (sign-flipped when the increment is past-directed);
    positive means every sampled chord was future timelike.
    """

    worst_margin: float
    worst_pair: tuple[float, float]
    n_pairs: int


def verify_observer(
    obs: Observer,
    window: tuple[float, float],
    n: int = 201,
    seed: int = 0,
) -> ObserverCheck:
    """Check that ``obs`` is future-directed timelike over ``window``.

    Samples ``n`` evenly spaced parameters (all consecutive pairs) plus
    ``n`` random ordered pairs, and requires every chord to be future
    timelike: positive quadratic form and positive time increment.

    Raises
    ------
    NotTimelike
        With the offending parameter pair when any chord fails.
    """
    s0, s1 = float(window[0]), float(window[1])
    if not s0 < s1:
        raise ValueError(f"window must be increasing, got ({s0!r}, {s1!r})")
    grid = np.linspace(s0, s1, n)
    rng = np.random.default_rng(seed)
    ra = rng.uniform(s0, s1, n)
    rb = rng.uniform(s0, s1, n)
    lo = np.concatenate([grid[:-1], np.minimum(ra, rb)])
    hi = np.concatenate([grid[1:], np.maximum(ra, rb)])
    keep = hi > lo
    lo, hi = lo[keep], hi[keep]

    t0, x0 = obs.position(lo)
    t1, x1 = obs.position(hi)
    dt, dx = t1 - t0, x1 - x0
    q = (dt - dx) * (dt + dx)
    margins = np.where(dt > 0.0, q, -np.abs(q)) / (hi - lo) ** 2

    worst = int(np.argmin(margins))
    worst_margin = float(margins[worst])
    worst_pair = (float(lo[worst]), float(hi[worst]))
    if worst_margin <= 0.0:
        raise NotTimelike(
            "worldline is not future-directed timelike: chord between "
            f"s={worst_pair[0]!r} and s={worst_pair[1]!r} has "
            f"norm_sq={float(q[worst])!r}, dt={float(dt[worst])!r}",
            pair=worst_pair,
        )
    return ObserverCheck(worst_margin, worst_pair, int(lo.size))


class LipVerdict(enum.Enum):
    """Whether the worldline's radar chart reaches the whole plane."""

    VERIFIED = "verified"
    FAILS = "fails"
    WINDOW_ONLY = "window_only"


@dataclass(frozen=True)
class LipStatus:
    verdict: LipVerdict
    reason: str
    null_window: tuple[tuple[float, float], tuple[float, float]] | None = None


def _span_text(r: tuple[float, float]) -> str:
    return f"({r[0]:g}, {r[1]:g})"


def lip_status(obs: Observer) -> LipStatus:
    """Decide whether light cannot escape the worldline in either direction.

    Both null coordinates must sweep the entire real line; then every
    event in the plane is caught between an outgoing and a returning
    ray and radar coordinates exist globally.  Analytic kinds declare
    their ranges; sampled kinds only support a windowed verdict.
    """
    pr = obs.null_plus_range
    mr = obs.null_minus_range
    if pr is None or mr is None:
        return LipStatus(
            LipVerdict.WINDOW_ONLY,
            "null ranges are known only over the sampled parameter window",
            obs.null_window(),
        )
    problems = []
    if pr != _FULL_LINE:
        problems.append(f"null coordinate t+x has range {_span_text(pr)}")
    if mr != _FULL_LINE:
        problems.append(f"null coordinate t-x has range {_span_text(mr)}")
    if problems:
        return LipStatus(LipVerdict.FAILS, "; ".join(problems))
    return LipStatus(
        LipVerdict.VERIFIED, "both null coordinates are onto the real line"
    )
