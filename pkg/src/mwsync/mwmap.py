"""Radar synchronization maps of timelike observers.

Given a worldline ``gamma``, the synchronization map sends a chart
point ``z = s + x*J`` to the event reached by a radar signal emitted at
``gamma(s - x)`` and received back at ``gamma(s + x)``:

    Omega(z) = (gamma(s+x) + gamma(s-x))/2 + ((gamma(s+x) - gamma(s-x))/2)*J

The same event also arises purely geometrically as the intersection of
the light ray leaving the emission event with the one arriving at the
reception event; :meth:`MarzkeWheelerMap.eval_geometric` computes that
route independently so the two can be checked against each other.

In null coordinates the map splits into two one-dimensional strictly
increasing profiles, ``out_plus = P(s + x)`` and ``out_minus =
M(s - x)`` with ``P = t + x`` and ``M = t - x`` along the worldline.
Inverting the chart therefore reduces to two scalar root findings,
done here by bracketed bisection.
"""

from __future__ import annotations

import math

import numpy as np

from .algebra import J, SplitComplex
from .causal import ray_intersect, rays_through
from .errors import (
    DegenerateFactor,
    EvaluationFailure,
    NoRadarCoordinate,
    NotDifferentiable,
)
from .observers import Observer, Smoothness

__all__ = ["MarzkeWheelerMap"]


class MarzkeWheelerMap:
    """Synchronization chart of one observer, with inverse and derivative.

    Parameters
    ----------
    observer : Observer
        Future-directed timelike worldline carrying the chart.
    root_tol : float
        Absolute parameter tolerance of the bisection used by the
        radar inverse.
    bracket_limit : float
        Safety bound on the bracket-doubling search; exceeding it
        raises :class:`EvaluationFailure` rather than looping.
    fd_step : float
        Default absolute step of the finite-difference derivative mode.
    """

    def __init__(
        self,
        observer: Observer,
        root_tol: float = 1e-12,
        bracket_limit: float = 1e6,
        fd_step: float = 1e-5,
    ):
        self.observer = observer
        self.root_tol = float(root_tol)
        self.bracket_limit = float(bracket_limit)
        self.fd_step = float(fd_step)

    def __call__(self, z: SplitComplex) -> SplitComplex:
        g_plus = self.observer(z.t + z.x)
        g_minus = self.observer(z.t - z.x)
        return (g_plus + g_minus) * 0.5 + ((g_plus - g_minus) * 0.5) * J

    def components(self, t, x):
        """Array path of :meth:`__call__`; bit-identical arithmetic.

        The operation order mirrors the split-complex expression term
        by term so scalar and array evaluations round identically.
        """
        tp, xp = self.observer.position(t + x)
        tm, xm = self.observer.position(t - x)
        return (tp + tm) * 0.5 + (xp - xm) * 0.5, (xp + xm) * 0.5 + (tp - tm) * 0.5

    def eval_geometric(self, z: SplitComplex) -> SplitComplex:
        """Evaluate the chart by intersecting the two radar rays.

        Independent of the algebraic formula: builds the ray through
        the reception event that travels toward decreasing x and the
        ray through the emission event that travels toward increasing
        x, then intersects them.
        """
        reception = self.observer(z.t + z.x)
        emission = self.observer(z.t - z.x)
        return ray_intersect(
            rays_through(reception).left, rays_through(emission).right
        )

    # -- inverse chart -------------------------------------------------

    def _null_bounds(self):
        pr = self.observer.null_plus_range
        mr = self.observer.null_minus_range
        if pr is not None and mr is not None:
            return pr, mr, True
        window = self.observer.null_window()
        if window is None:
            raise EvaluationFailure(
                f"{self.observer!r} reports neither null ranges nor a window"
            )
        return window[0], window[1], False

    def _gate(self, e_plus, e_minus):
        # Strict interior for declared open ranges, closed membership
        # for sampled windows.
        (plo, phi), (mlo, mhi), is_open = self._null_bounds()
        if is_open:
            bad_p = (e_plus <= plo) | (e_plus >= phi)
            bad_m = (e_minus <= mlo) | (e_minus >= mhi)
        else:
            bad_p = (e_plus < plo) | (e_plus > phi)
            bad_m = (e_minus < mlo) | (e_minus > mhi)
        bad = bad_p | bad_m
        if bad.any():
            i = int(np.argmax(bad))
            parts = []
            if bad_p.flat[i]:
                parts.append(
                    f"t+x = {float(e_plus.flat[i]):g} outside ({plo:g}, {phi:g})"
                )
            if bad_m.flat[i]:
                parts.append(
                    f"t-x = {float(e_minus.flat[i]):g} outside ({mlo:g}, {mhi:g})"
                )
            raise NoRadarCoordinate(
                "event is outside the radar chart: " + "; ".join(parts)
            )

    def _profile(self, sign: float):
        if sign > 0:
            return self.observer.null_plus
        return self.observer.null_minus

    def _bracket(self, fn, targets):
        lo, hi = self.observer.domain
        if math.isfinite(lo) and math.isfinite(hi):
            return np.full(targets.shape, lo), np.full(targets.shape, hi)
        a = np.full(targets.shape, -1.0)
        b = np.full(targets.shape, 1.0)
        for _ in range(64):
            need_lo = fn(a) > targets
            need_hi = fn(b) < targets
            if not (need_lo.any() or need_hi.any()):
                return a, b
            a = np.where(need_lo, a * 2.0, a)
            b = np.where(need_hi, b * 2.0, b)
            if max(np.max(np.abs(a)), np.max(np.abs(b))) > self.bracket_limit:
                break
        raise EvaluationFailure(
            f"bracket search exceeded bracket_limit = {self.bracket_limit:g}"
        )

    def _solve(self, fn, targets):
        # Bisection on a strictly increasing profile; iteration count
        # sized from the initial bracket width.
        a, b = self._bracket(fn, targets)
        width = float(np.max(b - a))
        if width <= self.root_tol:
            return 0.5 * (a + b)
        n_iter = min(200, int(math.ceil(math.log2(width / self.root_tol))) + 1)
        for _ in range(n_iter):
            m = 0.5 * (a + b)
            low_side = fn(m) < targets
            a = np.where(low_side, m, a)
            b = np.where(low_side, b, m)
        return 0.5 * (a + b)

    def radar_inverse_components(self, t, x):
        """Vectorized inverse chart: event coords to chart coords.

        Returns the pair of arrays ``(s, x_radar)``.
        """
        t = np.asarray(t, dtype=float)
        x = np.asarray(x, dtype=float)
        e_plus = t + x
        e_minus = t - x
        self._gate(e_plus, e_minus)
        s_reception = self._solve(self._profile(+1), e_plus)
        s_emission = self._solve(self._profile(-1), e_minus)
        return (s_reception + s_emission) * 0.5, (s_reception - s_emission) * 0.5

    def radar_inverse(self, e: SplitComplex) -> SplitComplex:
        """Chart point of event ``e``, or NoRadarCoordinate if unreachable.

        Solves ``P(s_reception) = e.t + e.x`` and
        ``M(s_emission) = e.t - e.x``; the chart point is
        ``((s_reception + s_emission)/2, (s_reception - s_emission)/2)``.
        """
        s, xr = self.radar_inverse_components(
            np.asarray([e.t]), np.asarray([e.x])
        )
        return SplitComplex(float(s[0]), float(xr[0]))

    # -- derivative and conformal factor -------------------------------

    def _require_smooth(self, what: str):
        if self.observer.smoothness < Smoothness.C1:
            raise NotDifferentiable(
                f"{what} needs a C1 worldline; {self.observer!r} is "
                f"{self.observer.smoothness.name}"
            )

    def derivative_components(self, t, x, mode: str = "analytic", step=None):
        """Split-complex derivative of the chart, componentwise arrays.

        The chart is split-holomorphic, so its derivative is the single
        split-complex number with null components ``P'(s+x)`` and
        ``M'(s-x)``.  Mode "analytic" reads those off the worldline's
        velocity; mode "fd" takes a symmetric difference of the chart
        itself in the ``s`` direction (which equals the derivative for
        a holomorphic map) using steps snapped to the floating-point
        grid so that representable nodes are hit exactly.
        """
        t = np.asarray(t, dtype=float)
        x = np.asarray(x, dtype=float)
        if mode == "analytic":
            self._require_smooth("the analytic derivative")
            vt_p, vx_p = self.observer.velocity(t + x)
            vt_m, vx_m = self.observer.velocity(t - x)
            d_plus = vt_p + vx_p
            d_minus = vt_m - vx_m
            return (d_plus + d_minus) * 0.5, (d_plus - d_minus) * 0.5
        if mode == "fd":
            h = self.fd_step if step is None else float(step)
            tu = t + h
            td = t - h
            span = tu - td
            if np.any(span <= 0.0):
                raise EvaluationFailure(
                    f"step {h!r} underflows at the requested nodes"
                )
            up_t, up_x = self.components(tu, x)
            dn_t, dn_x = self.components(td, x)
            return (up_t - dn_t) / span, (up_x - dn_x) / span
        raise ValueError(f"unknown derivative mode {mode!r}")

    def derivative(self, z: SplitComplex, mode: str = "analytic", step=None) -> SplitComplex:
        dt_, dx_ = self.derivative_components(
            np.asarray([z.t]), np.asarray([z.x]), mode, step
        )
        return SplitComplex(float(dt_[0]), float(dx_[0]))

    def conformal_components(self, t, x, mode: str = "analytic", step=None):
        """Conformal factor ``norm_sq(derivative)`` as an array.

        Positive wherever the chart is a genuine local Lorentz-conformal
        change of coordinates.

        Raises
        ------
        NotDifferentiable
            For worldlines below C1 (in either mode; the factor is a
            statement about the derivative, which must exist).
        DegenerateFactor
            If the factor is not strictly positive at some node.
        """
        self._require_smooth("the conformal factor")
        if mode == "analytic":
            t = np.asarray(t, dtype=float)
            x = np.asarray(x, dtype=float)
            vt_p, vx_p = self.observer.velocity(t + x)
            vt_m, vx_m = self.observer.velocity(t - x)
            lam = (vt_p + vx_p) * (vt_m - vx_m)
        else:
            dt_, dx_ = self.derivative_components(t, x, mode, step)
            lam = (dt_ - dx_) * (dt_ + dx_)
        lam = np.asarray(lam)
        if np.any(lam <= 0.0):
            i = int(np.argmax(lam <= 0.0))
            raise DegenerateFactor(
                f"conformal factor {lam.flat[i]!r} is not positive"
            )
        return lam

    def conformal_factor(self, z: SplitComplex, mode: str = "analytic", step=None) -> float:
        lam = self.conformal_components(
            np.asarray([z.t]), np.asarray([z.x]), mode, step
        )
        return float(lam[0])

    def __repr__(self):
        return f"MarzkeWheelerMap({self.observer!r})"
