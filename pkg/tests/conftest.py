"""Shared fixtures: the two degree-6 constructions, published reference
values, and independent oracles (grid search for double points, PD-level
Reidemeister-I kink insertion)."""

from __future__ import annotations

import numpy as np
import pytest

from polyknot import (RealPoly, PlaneCurve, SpaceKnot, SignPattern, LiftSpec,
                      solve_lift, find_double_points)
from polyknot.cli import PRESETS
from polyknot.diagram import pd_sign

# ---------------------------------------------------------------------------
# Published reference data for the two degree-6 constructions.
# ---------------------------------------------------------------------------

X52 = RealPoly((88.0, -22.0, -19.0, 2.0, 1.0))       # (t-2)(t+4)(t^2-11)
X52_DISPLAY = RealPoly((96.0, -24.0, -20.0, 2.0, 1.0))
Y52 = RealPoly((0.0, 96.0, 0.0, -22.0, 0.0, 1.0))    # t(t^2-6)(t^2-16)
X62 = RealPoly((0.0, 1.0, -27.0, 0.0, 1.0))          # t^4-27t^2+t
Y62 = RealPoly((0.0, 260.0, 0.0, -36.0, 0.0, 1.0))   # t^5-36t^3+260t

PAIRS52 = PRESETS["5_2"]["published_pairs"]
PAIRS62 = PRESETS["6_2"]["published_pairs"]

# h(t) = t^6 + At^5 + ... with A..E as published for the 5_2 construction
H52_PUBLISHED = RealPoly((0.0, -138788.0, 5323.59, 32625.7, -293.032,
                          -1505.83, 1.0))

BRACKET52 = "-A^11+A^7-2A^3+A^-1-A^-5+A^-9"
F52 = "A^-4-A^-8+2A^-12-A^-16+A^-20-A^-24"
JONES52 = "q-q^2+2q^3-q^4+q^5-q^6"
JONES62 = "q-1+2q^-1-2q^-2+2q^-3-2q^-4+q^-5"


@pytest.fixture(scope="session")
def curve52() -> PlaneCurve:
    return PlaneCurve(X52, Y52)


@pytest.fixture(scope="session")
def curve62() -> PlaneCurve:
    return PlaneCurve(X62, Y62)


@pytest.fixture(scope="session")
def lift52():
    return solve_lift(PAIRS52, SignPattern.from_string("UOUOU"),
                      LiftSpec.default(6, 5))


@pytest.fixture(scope="session")
def lift62():
    return solve_lift(PAIRS62, SignPattern.from_string("UOUOUU"),
                      LiftSpec(6, tuple(range(6, 0, -1))))


@pytest.fixture(scope="session")
def knot52(lift52) -> SpaceKnot:
    return SpaceKnot(X52, Y52, lift52.h)


@pytest.fixture(scope="session")
def knot62(lift62) -> SpaceKnot:
    return SpaceKnot(X62, Y62, lift62.h)


@pytest.fixture(scope="session")
def points52(curve52):
    return find_double_points(curve52)


@pytest.fixture(scope="session")
def points62(curve62):
    return find_double_points(curve62)


# ---------------------------------------------------------------------------
# Independent double-point oracle: dense grid scan of
# |x(t)-x(s)| + |y(t)-y(s)| over t < s, local minima polished by 2-D Newton.
# Root bounds come from numpy's companion-matrix roots, independent of the
# Sturm machinery under test.
# ---------------------------------------------------------------------------


def grid_double_points(x: RealPoly, y: RealPoly, n: int = 2000):
    crit = []
    for p in (x.derivative(), y.derivative()):
        if p.degree >= 1:
            rts = np.roots(list(reversed(p.coeffs)))
            crit.extend(abs(r.real) for r in rts)
    bound = 1.0 + 1.5 * max([1.0] + crit)
    ts = np.linspace(-bound, bound, n)
    xv, yv = x(ts), y(ts)
    D = np.abs(xv[:, None] - xv[None, :]) + np.abs(yv[:, None] - yv[None, :])

    step = ts[1] - ts[0]
    xp, yp = x.derivative(), y.derivative()
    slope = float(np.max(np.abs(xp(ts))) + np.max(np.abs(yp(ts))))
    thresh = 3.0 * step * slope

    band = 5
    core = D[1:-1, 1:-1]
    neighbor_min = np.full_like(core, np.inf)
    for di in (-1, 0, 1):
        for dj in (-1, 0, 1):
            if di == 0 and dj == 0:
                continue
            shifted = D[1 + di:n - 1 + di, 1 + dj:n - 1 + dj]
            np.minimum(neighbor_min, shifted, out=neighbor_min)
    ii, jj = np.meshgrid(np.arange(1, n - 1), np.arange(1, n - 1), indexing="ij")
    is_min = (core < thresh) & (core <= neighbor_min) & (jj >= ii + band)
    candidates = [(ts[i], ts[j]) for i, j in np.argwhere(is_min) + 1]

    polished = []
    for t, s in candidates:
        ok = False
        for _ in range(80):
            f0, f1 = x(t) - x(s), y(t) - y(s)
            a, b = xp(t), -xp(s)
            c, d = yp(t), -yp(s)
            det = a * d - b * c
            if det == 0.0 or abs(t) > 1e6 or abs(s) > 1e6:
                break
            dt = (f0 * d - f1 * b) / det
            ds = (a * f1 - c * f0) / det
            t, s = t - dt, s - ds
            if max(abs(dt), abs(ds)) <= 1e-14 * (1 + abs(t) + abs(s)):
                ok = True
                break
        if not ok or s - t <= 1e-4:
            continue
        if abs(x(t) - x(s)) + abs(y(t) - y(s)) > 1e-9:
            continue
        polished.append((t, s) if t < s else (s, t))

    polished.sort()
    out = []
    for p in polished:
        if out and abs(p[0] - out[-1][0]) <= 1e-6 and abs(p[1] - out[-1][1]) <= 1e-6:
            continue
        out.append(p)
    return out


def random_regular_curve(rng, deg_x: int = 4, deg_y: int = 5):
    """Seeded random curve of degrees (deg_x, deg_y) that passes the
    regularity check; resamples until one does."""
    from polyknot import check_regularity
    from polyknot.projection import NonTransverseError, TriplePointError
    while True:
        cx = rng.integers(-3, 4, size=deg_x + 1).astype(float)
        cy = rng.integers(-3, 4, size=deg_y + 1).astype(float)
        cx[deg_x] = rng.choice([-1.0, 1.0]) * rng.integers(1, 3)
        cy[deg_y] = rng.choice([-1.0, 1.0]) * rng.integers(1, 3)
        try:
            curve = PlaneCurve(RealPoly(tuple(cx)), RealPoly(tuple(cy)))
        except ValueError:
            continue
        report = check_regularity(curve)
        if not report.is_regular:
            continue
        try:
            find_double_points(curve)
        except (NonTransverseError, TriplePointError, ValueError):
            continue
        return curve


# ---------------------------------------------------------------------------
# PD-level Reidemeister-I kink insertion (test oracle for bracket/f behavior).
# ---------------------------------------------------------------------------


def insert_kink(pd, edge: int, positive: bool = True):
    """Insert a curl on the given edge (1 <= edge < 2n); the edge splits into
    edge, edge+1, edge+2 and all higher labels shift by two."""
    n = len(pd)
    if not 1 <= edge < 2 * n:
        raise ValueError("edge out of range for kink insertion")

    out = []
    for tup in pd:
        sign = pd_sign(tup, n)
        incoming_slots = {"a", "d" if sign > 0 else "b"}
        new = {}
        for slot, e in zip("abcd", tup):
            if e > edge:
                new[slot] = e + 2
            elif e == edge and slot in incoming_slots:
                new[slot] = edge + 2
            else:
                new[slot] = e
        out.append((new["a"], new["b"], new["c"], new["d"]))
    if positive:
        out.append((edge, edge + 2, edge + 1, edge + 1))
    else:
        out.append((edge, edge + 1, edge + 1, edge + 2))
    return tuple(out)


def rotate_labels(pd, k: int):
    """Cyclically shift all edge labels along the knot."""
    n = len(pd)
    m = 2 * n
    return tuple(tuple((e - 1 + k) % m + 1 for e in tup) for tup in pd)
