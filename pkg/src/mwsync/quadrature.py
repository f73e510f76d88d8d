"""Adaptive Simpson quadrature with an explicit evaluation budget.

Hand-rolled rather than delegated so that the error control, the eval
count, and the failure mode are part of this package's contract: the
proper-time results carry the estimator's own error bound, and hitting
the recursion limit raises instead of silently returning a best effort.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import QuadratureLimit

__all__ = ["QuadratureResult", "adaptive_simpson"]


@dataclass(frozen=True)
class QuadratureResult:
    """Integral value with the estimator's accumulated error bound."""

    value: float
    error_estimate: float
    n_evals: int


def adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-10,
    max_depth: int = 50,
) -> QuadratureResult:
    """Integrate ``f`` over ``[a, b]`` to absolute tolerance ``tol``.

    Classic bisecting Simpson with Richardson extrapolation: a panel is
    accepted when its two-half refinement agrees with the single-panel
    value to ``15 * (local tolerance)``, and the extrapolated value
    ``S2 + (S2 - S1)/15`` is used.  The local tolerance halves with the
    panel so the accumulated error stays below ``tol``.

    Raises
    ------
    QuadratureLimit
        If any panel still disagrees at ``max_depth`` bisections.
    """
    a = float(a)
    b = float(b)
    if not b > a:
        if b == a:
            return QuadratureResult(0.0, 0.0, 0)
        raise ValueError(f"need a < b, got a={a!r}, b={b!r}")
    evals = 0

    def eval_f(s: float) -> float:
        nonlocal evals
        evals += 1
        return float(f(s))

    def simpson(fa: float, fm: float, fb: float, h: float) -> float:
        return (h / 6.0) * (fa + 4.0 * fm + fb)

    def recurse(lo, hi, flo, fmid, fhi, whole, tol_here, depth):
        mid = 0.5 * (lo + hi)
        lmid = 0.5 * (lo + mid)
        rmid = 0.5 * (mid + hi)
        fl = eval_f(lmid)
        fr = eval_f(rmid)
        left = simpson(flo, fl, fmid, mid - lo)
        right = simpson(fmid, fr, fhi, hi - mid)
        delta = (left + right) - whole
        if abs(delta) <= 15.0 * tol_here:
            return left + right + delta / 15.0, abs(delta) / 15.0
        if depth >= max_depth:
            raise QuadratureLimit(
                f"panel [{lo!r}, {hi!r}] still disagrees by {abs(delta)!r} "
                f"at depth {max_depth}"
            )
        half_tol = 0.5 * tol_here
        lv, le = recurse(lo, mid, flo, fl, fmid, left, half_tol, depth + 1)
        rv, re = recurse(mid, hi, fmid, fr, fhi, right, half_tol, depth + 1)
        return lv + rv, le + re

    fa = eval_f(a)
    mid = 0.5 * (a + b)
    fm = eval_f(mid)
    fb = eval_f(b)
    whole = simpson(fa, fm, fb, b - a)
    value, err = recurse(a, b, fa, fm, fb, whole, float(tol), 0)
    return QuadratureResult(value, err, evals)
