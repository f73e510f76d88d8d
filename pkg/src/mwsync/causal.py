"""Causal order on the split-complex plane.

Classifies event pairs by the sign of ``norm_sq(y - x)`` and the sign
of the time difference, with a relative tolerance band around the light
cone so that events produced by rounded arithmetic still classify as
null when they should.  Also provides the two families of light rays
and their intersection, which together are the geometric backbone of
radar synchronization: every event is the unique intersection of one
left-moving and one right-moving ray.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .algebra import SplitComplex
from .errors import SameOrientation

__all__ = [
    "CausalRelation",
    "Region",
    "Orientation",
    "DEFAULT_NULL_BAND",
    "classify",
    "chron_precedes",
    "null_precedes",
    "in_region",
    "reverse_relation",
    "LightRay",
    "RayPair",
    "rays_through",
    "ray_intersect",
    "time_axis_hit",
]


class CausalRelation(enum.Enum):
    """Relation of y to x: where y - x sits relative to the cone at 0."""

    EQUAL = "equal"
    NULL_FUTURE = "null_future"
    NULL_PAST = "null_past"
    CHRON_FUTURE = "chron_future"
    CHRON_PAST = "chron_past"
    SPACELIKE = "spacelike"


class Region(enum.Enum):
    """Named cone regions used by :func:`in_region` queries."""

    NULL_FUTURE = "null_future"
    NULL_PAST = "null_past"
    CHRON_FUTURE = "chron_future"
    CHRON_PAST = "chron_past"
    NULL = "null"
    CHRON = "chron"


class Orientation(enum.Enum):
    """Propagation direction of a light ray."""

    LEFT = "left"
    RIGHT = "right"


DEFAULT_NULL_BAND = 1e-9


def classify(
    x: SplitComplex, y: SplitComplex, tol: float = DEFAULT_NULL_BAND
) -> CausalRelation:
    """Classify the causal relation of ``y`` relative to ``x``.

    The null band scales as ``tol * (1 + dt**2 + dx**2)`` so that the
    classification is stable under the rounding of coordinates of any
    magnitude: for events of size R the quadratic form carries an
    absolute rounding error of order ``eps * R**2``.

    Returns
    -------
    CausalRelation
        EQUAL only for bit-identical coordinates; otherwise one of the
        null, chronological, or spacelike relations.
    """
    d = y - x
    if d.t == 0.0 and d.x == 0.0:
        return CausalRelation.EQUAL
    q = d.norm_sq()
    band = tol * (1.0 + d.t * d.t + d.x * d.x)
    if abs(q) <= band:
        return CausalRelation.NULL_FUTURE if d.t > 0.0 else CausalRelation.NULL_PAST
    if q > 0.0:
        return CausalRelation.CHRON_FUTURE if d.t > 0.0 else CausalRelation.CHRON_PAST
    return CausalRelation.SPACELIKE


def chron_precedes(
    x: SplitComplex, y: SplitComplex, tol: float = DEFAULT_NULL_BAND
) -> bool:
    """True iff y lies strictly inside the future cone of x."""
    return classify(x, y, tol) is CausalRelation.CHRON_FUTURE


def null_precedes(
    x: SplitComplex, y: SplitComplex, tol: float = DEFAULT_NULL_BAND
) -> bool:
    """True iff y lies on the future light cone of x (x != y)."""
    return classify(x, y, tol) is CausalRelation.NULL_FUTURE


_REGION_MEMBERS = {
    Region.NULL_FUTURE: frozenset({CausalRelation.NULL_FUTURE}),
    Region.NULL_PAST: frozenset({CausalRelation.NULL_PAST}),
    Region.CHRON_FUTURE: frozenset({CausalRelation.CHRON_FUTURE}),
    Region.CHRON_PAST: frozenset({CausalRelation.CHRON_PAST}),
    Region.NULL: frozenset({CausalRelation.NULL_FUTURE, CausalRelation.NULL_PAST}),
    Region.CHRON: frozenset({CausalRelation.CHRON_FUTURE, CausalRelation.CHRON_PAST}),
}


def in_region(
    x: SplitComplex,
    p: SplitComplex,
    region: Region,
    tol: float = DEFAULT_NULL_BAND,
) -> bool:
    """True iff ``p`` lies in the named cone region of ``x``."""
    return classify(x, p, tol) in _REGION_MEMBERS[region]


_REVERSED = {
    CausalRelation.EQUAL: CausalRelation.EQUAL,
    CausalRelation.NULL_FUTURE: CausalRelation.NULL_PAST,
    CausalRelation.NULL_PAST: CausalRelation.NULL_FUTURE,
    CausalRelation.CHRON_FUTURE: CausalRelation.CHRON_PAST,
    CausalRelation.CHRON_PAST: CausalRelation.CHRON_FUTURE,
    CausalRelation.SPACELIKE: CausalRelation.SPACELIKE,
}


def reverse_relation(rel: CausalRelation) -> CausalRelation:
    """Relation of x to y given the relation of y to x."""
    return _REVERSED[rel]


@dataclass(frozen=True)
class LightRay:
    """A full light ray, stored by orientation and conserved level.

    A right-moving ray is a level set of ``t - x``; a left-moving ray
    is a level set of ``t + x``.  Storing the level instead of a point
    makes ray identity and intersection exact.
    """

    orientation: Orientation
    level: float

    def contains(self, p: SplitComplex, tol: float = DEFAULT_NULL_BAND) -> bool:
        value = p.t + p.x if self.orientation is Orientation.LEFT else p.t - p.x
        scale = 1.0 + abs(value) + abs(self.level)
        return abs(value - self.level) <= tol * scale


@dataclass(frozen=True)
class RayPair:
    left: LightRay
    right: LightRay


def rays_through(p: SplitComplex) -> RayPair:
    """The two light rays through ``p`` (one per orientation)."""
    return RayPair(
        left=LightRay(Orientation.LEFT, p.t + p.x),
        right=LightRay(Orientation.RIGHT, p.t - p.x),
    )


def ray_intersect(a: LightRay, b: LightRay) -> SplitComplex:
    """Unique intersection event of two rays of opposite orientation.

    Solving ``t + x = l`` and ``t - x = r`` gives ``t = (l + r)/2`` and
    ``x = (l - r)/2``.

    Raises
    ------
    SameOrientation
        If both rays move the same way (parallel, no unique point).
    """
    if a.orientation is b.orientation:
        raise SameOrientation(f"parallel rays do not meet: {a!r}, {b!r}")
    left, right = (a, b) if a.orientation is Orientation.LEFT else (b, a)
    return SplitComplex(
        (left.level + right.level) / 2.0, (left.level - right.level) / 2.0
    )


def time_axis_hit(ray: LightRay) -> float:
    """Time coordinate at which the ray crosses the x = 0 axis.

    Both ``t + x`` and ``t - x`` reduce to ``t`` on the axis, so the
    answer is the conserved level itself, with no arithmetic. This
    exactness matters downstream: radar constructions that bounce rays
    off the time axis stay bit-faithful to the algebraic formulas.
    """
    if not math.isfinite(ray.level):
        raise ValueError(f"ray level must be finite, got {ray.level!r}")
    return ray.level
