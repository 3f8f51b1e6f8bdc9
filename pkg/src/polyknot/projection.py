"""Plane-curve analysis for polynomial knot projections: regularity checks,
double-point detection via divided differences and resultants, degree-derived
crossing bounds, and SVG plotting of the projection."""

from __future__ import annotations

import io
import warnings
from dataclasses import dataclass

import numpy as np
from matplotlib import rc_context
from matplotlib.backends.backend_svg import FigureCanvasSVG
from matplotlib.figure import Figure

from .polycore import RealPoly, divided_difference, resultant_eliminate_s, real_roots

__all__ = [
    "PlaneCurve",
    "DoublePoint",
    "RegularityReport",
    "NonTransverseError",
    "TriplePointError",
    "check_regularity",
    "find_double_points",
    "max_crossing_bound",
    "valid_degree_sequence",
    "plot_curve_svg",
]


class NonTransverseError(ValueError):
    """An intersection whose two tangents are (numerically) parallel."""

    def __init__(self, t: float, s: float):
        self.pair = (t, s)
        super().__init__(f"non-transverse self-intersection at (t, s) = ({t}, {s})")


class TriplePointError(ValueError):
    """Three or more parameter passages through one plane point."""


@dataclass(frozen=True)
class PlaneCurve:
    """The projection (x(t), y(t)); degrees strictly increasing, nonconstant."""

    x: RealPoly
    y: RealPoly

    def __post_init__(self):
        if self.x.degree < 1 or self.y.degree < 1:
            raise ValueError("curve components must be nonconstant")
        if self.x.degree >= self.y.degree:
            raise ValueError(
                f"component degrees must be strictly increasing, got "
                f"deg x = {self.x.degree}, deg y = {self.y.degree}"
            )

    def point(self, t: float) -> tuple[float, float]:
        return (self.x(t), self.y(t))

    def tangent(self, t: float) -> tuple[float, float]:
        return (self.x.derivative()(t), self.y.derivative()(t))


@dataclass(frozen=True)
class DoublePoint:
    """A transverse self-intersection: x(t) = x(s), y(t) = y(s) with t < s."""

    t: float
    s: float
    point: tuple[float, float]
    tangent_t: tuple[float, float]
    tangent_s: tuple[float, float]
    transversality: float  # signed area of the two tangents


@dataclass(frozen=True)
class RegularityReport:
    is_regular: bool
    common_critical_values: tuple[float, ...]
    double_point_count: int
    non_transverse_pairs: tuple[tuple[float, float], ...] = ()
    triple_point_clusters: tuple[tuple[float, float], ...] = ()


def _cross(u: tuple[float, float], v: tuple[float, float]) -> float:
    return u[0] * v[1] - u[1] * v[0]


def _coeff_norm(p: RealPoly) -> float:
    return max((abs(c) for c in p.coeffs), default=0.0)


def _polish_pair(x: RealPoly, y: RealPoly, t: float, s: float) -> tuple[float, float]:
    # 2-D Newton on F(t,s) = (x(t)-x(s), y(t)-y(s)); quadratic near a
    # transverse intersection.
    xp, yp = x.derivative(), y.derivative()
    bound = 1e6 * (1.0 + abs(t) + abs(s))
    for _ in range(80):
        f0 = x(t) - x(s)
        f1 = y(t) - y(s)
        a, b = xp(t), -xp(s)
        c, d = yp(t), -yp(s)
        det = a * d - b * c
        if det == 0.0:
            break
        dt = (f0 * d - f1 * b) / det
        ds = (a * f1 - c * f0) / det
        t, s = t - dt, s - ds
        if abs(t) > bound or abs(s) > bound:
            break
        if max(abs(dt), abs(ds)) <= 1e-16 * (1.0 + abs(t) + abs(s)):
            break
    return t, s


def _raw_double_points(x: RealPoly, y: RealPoly, tol: float):
    """Polished (t, s) pairs with t < s, plus the resultant real-root count."""
    if x.degree < 2:
        return [], 0  # x is injective; no self-intersections
    X = divided_difference(x)
    Y = divided_difference(y)
    res = resultant_eliminate_s(X, Y)
    if res.is_zero:
        raise ValueError("identically vanishing resultant: curve is not injective "
                         "along a parameter family")
    troots = real_roots(res)
    ynorm = _coeff_norm(y)

    pairs: list[tuple[float, float]] = []
    for t0 in troots.roots:
        slice_poly = X.at_t(t0)
        if slice_poly.degree < 1:
            continue
        for s0 in real_roots(slice_poly).roots:
            if abs(s0 - t0) <= 1e-6 * (1.0 + abs(t0)):
                continue
            yscale = ynorm * max(1.0, abs(t0), abs(s0)) ** max(y.degree - 1, 0)
            if abs(Y(t0, s0)) > max(tol, 1e-6) * yscale:
                continue
            t1, s1 = _polish_pair(x, y, t0, s0)
            lo, hi = (t1, s1) if t1 < s1 else (s1, t1)
            if hi - lo <= 1e-9 * (1.0 + abs(lo)):
                continue
            pairs.append((lo, hi))

    pairs.sort()
    merged: list[tuple[float, float]] = []
    for lo, hi in pairs:
        if merged and abs(lo - merged[-1][0]) <= 1e-7 * (1.0 + abs(lo)) \
                and abs(hi - merged[-1][1]) <= 1e-7 * (1.0 + abs(hi)):
            continue
        merged.append((lo, hi))
    return merged, len(troots.roots)


def _attach_geometry(x: RealPoly, y: RealPoly, pairs) -> list[DoublePoint]:
    xp, yp = x.derivative(), y.derivative()
    out = []
    for lo, hi in pairs:
        pt = (0.5 * (x(lo) + x(hi)), 0.5 * (y(lo) + y(hi)))
        tt = (xp(lo), yp(lo))
        ts = (xp(hi), yp(hi))
        out.append(DoublePoint(lo, hi, pt, tt, ts, _cross(tt, ts)))
    return out


def _triple_clusters(points: list[DoublePoint], tol: float):
    scale = max([1.0] + [abs(c) for dp in points for c in dp.point])
    clusters = []
    for i, a in enumerate(points):
        for b in points[i + 1:]:
            if abs(a.point[0] - b.point[0]) <= tol * scale and \
               abs(a.point[1] - b.point[1]) <= tol * scale:
                clusters.append(a.point)
    return clusters


def check_regularity(c: PlaneCurve | tuple[RealPoly, RealPoly],
                     tol: float = 1e-8) -> RegularityReport:
    """Regular-projection check: x' and y' share no zero, all
    self-intersections are transverse, and no point is hit three times.

    Accepts a PlaneCurve or a raw (x, y) pair (the latter admits degenerate
    inputs that PlaneCurve itself rejects)."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    x, y = (c.x, c.y) if isinstance(c, PlaneCurve) else c

    xp, yp = x.derivative(), y.derivative()
    common = []
    if not xp.is_zero and not yp.is_zero:
        ynorm = max(_coeff_norm(yp), 1e-30)
        xnorm = max(_coeff_norm(xp), 1e-30)
        for r in (real_roots(xp).roots if xp.degree >= 1 else ()):
            if abs(yp(r)) <= tol * ynorm * max(1.0, abs(r)) ** max(yp.degree, 0):
                common.append(r)
        for r in (real_roots(yp).roots if yp.degree >= 1 else ()):
            if abs(xp(r)) <= tol * xnorm * max(1.0, abs(r)) ** max(xp.degree, 0):
                if not any(abs(r - v) <= 1e-9 * (1 + abs(r)) for v in common):
                    common.append(r)
        common.sort()
    else:
        # a constant component never yields a regular knot projection
        common = [float("nan")]

    try:
        pairs, _ = _raw_double_points(x, y, 1e-6)
    except ValueError:
        return RegularityReport(False, tuple(common), 0)
    points = _attach_geometry(x, y, pairs)

    bad_transverse = []
    for dp in points:
        scale = max(abs(dp.tangent_t[0]), abs(dp.tangent_t[1]), 1e-30) * \
                max(abs(dp.tangent_s[0]), abs(dp.tangent_s[1]), 1e-30)
        if abs(dp.transversality) <= tol * scale:
            bad_transverse.append((dp.t, dp.s))
    triples = _triple_clusters(points, tol)

    ok = not common and not bad_transverse and not triples
    return RegularityReport(ok, tuple(common), len(points),
                            tuple(bad_transverse), tuple(triples))


def find_double_points(c: PlaneCurve, tol: float = 1e-6) -> tuple[DoublePoint, ...]:
    """All self-intersections of the curve, sorted by the first parameter.

    Requires a regular projection; raises NonTransverseError or
    TriplePointError when the curve violates that."""
    x, y = c.x, c.y
    pairs, n_res_roots = _raw_double_points(x, y, tol)
    points = _attach_geometry(x, y, pairs)

    for dp in points:
        scale = max(abs(dp.tangent_t[0]), abs(dp.tangent_t[1]), 1e-30) * \
                max(abs(dp.tangent_s[0]), abs(dp.tangent_s[1]), 1e-30)
        if abs(dp.transversality) <= 1e-8 * scale:
            raise NonTransverseError(dp.t, dp.s)
    if _triple_clusters(points, 1e-8):
        raise TriplePointError("projection has a triple point; the lift "
                               "construction needs simple double points")
    if n_res_roots != 2 * len(points):
        warnings.warn(
            f"resultant has {n_res_roots} real roots but {len(points)} double "
            f"points were paired; remaining roots correspond to complex or "
            f"tangential intersections", stacklevel=2)

    residual = max((abs(x(dp.t) - x(dp.s)) + abs(y(dp.t) - y(dp.s)) for dp in points),
                   default=0.0)
    if residual > 1e-6 * max(1.0, _coeff_norm(x), _coeff_norm(y)):
        raise ValueError(f"double-point polish failed to converge (residual {residual:g})")
    return tuple(points)


def max_crossing_bound(d: int) -> int:
    """Crossing bound (d-2)(d-3)/2 for a degree-d polynomial knot."""
    if d < 3:
        raise ValueError("degree must be at least 3")
    return (d - 2) * (d - 3) // 2


def valid_degree_sequence(d1: int, d2: int, d3: int) -> bool:
    """True when no degree lies in the numerical semigroup generated by the
    other two (nonnegative combinations, not both zero)."""
    if not (0 < d1 < d2 < d3):
        raise ValueError("degrees must be strictly increasing and positive")

    def in_semigroup(target: int, a: int, b: int) -> bool:
        reachable = [False] * (target + 1)
        reachable[0] = True
        for v in range(1, target + 1):
            if v >= a and reachable[v - a]:
                reachable[v] = True
            elif v >= b and reachable[v - b]:
                reachable[v] = True
        return reachable[target]

    return not (in_semigroup(d3, d1, d2) or
                in_semigroup(d2, d1, d3) or
                in_semigroup(d1, d2, d3))


def plot_curve_svg(c: PlaneCurve, t_range: tuple[float, float],
                   marks: tuple[DoublePoint, ...] = (), samples: int = 1200) -> str:
    """Render the projection as an SVG document with double points marked.

    Output is deterministic for fixed inputs (fixed hash salt, no timestamp).
    """
    t0, t1 = float(t_range[0]), float(t_range[1])
    if not t0 < t1:
        raise ValueError("empty parameter range")
    fig = Figure(figsize=(6.0, 6.0))
    FigureCanvasSVG(fig)
    ax = fig.add_subplot(111)
    ts = np.linspace(t0, t1, samples)
    curve_line, = ax.plot(c.x(ts), c.y(ts), lw=1.1, color="tab:blue")
    curve_line.set_gid("projection-curve")
    for i, dp in enumerate(marks):
        mark_line, = ax.plot([dp.point[0]], [dp.point[1]], marker="o", ms=6.0,
                             mfc="none", mec="tab:red", mew=1.4, ls="none")
        mark_line.set_gid(f"double-point-{i + 1}")
    ax.set_aspect("equal", adjustable="datalim")
    ax.set_xlabel("x(t)")
    ax.set_ylabel("y(t)")
    ax.grid(True, alpha=0.3)
    buf = io.BytesIO()
    with rc_context({"svg.hashsalt": "polyknot"}):
        fig.savefig(buf, format="svg", metadata={"Date": None})
    return buf.getvalue().decode("utf-8")
