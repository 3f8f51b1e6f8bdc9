"""Degree-derived crossing/bridge/superbridge bounds, Kuiper's torus-knot
superbridge formula, and empirical bridge/superbridge estimation of one
conformation by sweeping projection directions.

Closure counting convention for the compactified knot: both tails rising or
mixed tails add one maximum at infinity, both tails falling add none.  Every
report tags counts with this convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .polycore import RealPoly, _sturm_lists, _variations_at_inf, real_roots, _horner
from .diagram import SpaceKnot

__all__ = [
    "DegreeBounds",
    "DirectionSweep",
    "DegenerateDirectionError",
    "CLOSURE_CONVENTION",
    "degree_bounds",
    "torus_superbridge",
    "directional_maxima",
    "sweep_directions",
    "fibonacci_sphere",
]

CLOSURE_CONVENTION = "both-up:+1, both-down:+0, mixed:+1"

BOTH_UP = "both-up"
BOTH_DOWN = "both-down"
MIXED = "mixed"


class DegenerateDirectionError(ValueError):
    """Direction whose height polynomial is constant (no height variation)."""


@dataclass(frozen=True)
class DegreeBounds:
    crossing: int
    bridge: int
    superbridge: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.crossing, self.bridge, self.superbridge)


def degree_bounds(d: int) -> DegreeBounds:
    """((d-2)(d-3)/2, (d-1)/2, (d+1)/2), floored: the bounded quantities are
    integers."""
    if d < 3:
        raise ValueError("degree must be at least 3")
    return DegreeBounds((d - 2) * (d - 3) // 2, (d - 1) // 2, (d + 1) // 2)


def torus_superbridge(p: int, q: int) -> int:
    """Superbridge index min(2p, q) of the (p, q) torus knot."""
    if not (2 <= p < q):
        raise ValueError("need 2 <= p < q")
    if math.gcd(p, q) != 1:
        raise ValueError("p and q must be coprime for a torus knot")
    return min(2 * p, q)


def _height_poly(k: SpaceKnot, v) -> RealPoly:
    v0, v1, v2 = (float(c) for c in v)
    return v0 * k.f + v1 * k.g + v2 * k.h


def _tail_class(p: RealPoly) -> str:
    if p.degree % 2 == 1:
        return MIXED
    return BOTH_UP if p.coeffs[-1] > 0 else BOTH_DOWN


def _maxima_by_isolation(dp: RealPoly) -> int:
    # Explicit +to- sign-change count of p'; handles multiple roots.
    roots = real_roots(dp, 1e-12).roots
    if not roots:
        return 0
    probes = [roots[0] - 1.0]
    for a, b in zip(roots, roots[1:]):
        probes.append(0.5 * (a + b))
    probes.append(roots[-1] + 1.0)
    c = list(dp.coeffs)
    count = 0
    for left, right in zip(probes, probes[1:]):
        if _horner(c, left) > 0.0 and _horner(c, right) < 0.0:
            count += 1
    return count


def _interior_maxima(p: RealPoly) -> tuple[int, bool]:
    """Count of strict local maxima of p on the real line, plus a flag for
    (near-)degenerate directions where p' has a (near-)multiple root.

    Clean Sturm chains certify that p' is square-free, so its real roots are
    simple sign crossings that alternate; the maxima count then follows from
    the root count and the sign of p' at -infinity alone.
    """
    dp = p.derivative()
    if dp.is_zero:
        return 0, False
    if dp.degree == 0:
        return 0, False
    chain, clean = _sturm_lists(list(dp.coeffs))
    if not clean:
        return _maxima_by_isolation(dp), True
    k = _variations_at_inf(chain, False) - _variations_at_inf(chain, True)
    lead = dp.coeffs[-1]
    starts_positive = (lead > 0) == (dp.degree % 2 == 0)
    return (k + 1) // 2 if starts_positive else k // 2, False


def directional_maxima(k: SpaceKnot, v, tol: float = 1e-8) -> tuple[int, str, int]:
    """(interior maxima, tail class, closed-count) of the height function
    t -> v . (f, g, h)(t), with the closure maximum added per
    CLOSURE_CONVENTION."""
    p = _height_poly(k, v)
    if p.degree < 1:
        raise DegenerateDirectionError(
            f"direction {tuple(v)} gives a constant height polynomial")
    m, _ = _interior_maxima(p)
    tail = _tail_class(p)
    closed = m if tail == BOTH_DOWN else m + 1
    return m, tail, closed


@dataclass(frozen=True)
class DirectionSweep:
    directions: int
    seed: int
    maxima: tuple[int, ...]
    tails: tuple[str, ...]
    closed_counts: tuple[int, ...]
    min_closed: int
    max_closed: int
    degenerate_skipped: int
    convention: str = CLOSURE_CONVENTION

    def histogram(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for c in self.closed_counts:
            out[c] = out.get(c, 0) + 1
        return dict(sorted(out.items()))


def fibonacci_sphere(n: int, seed: int = 0, jitter: float = 1e-3) -> np.ndarray:
    """Quasi-uniform unit directions: golden-angle lattice plus seeded jitter
    (deterministic for fixed n and seed)."""
    if n < 1:
        raise ValueError("need at least one direction")
    i = np.arange(n, dtype=float)
    z = 1.0 - 2.0 * (i + 0.5) / n
    r = np.sqrt(np.maximum(0.0, 1.0 - z * z))
    golden = math.pi * (3.0 - math.sqrt(5.0))
    phi = golden * i
    pts = np.column_stack([r * np.cos(phi), r * np.sin(phi), z])
    rng = np.random.default_rng(seed)
    pts = pts + jitter * rng.standard_normal(pts.shape)
    pts /= np.linalg.norm(pts, axis=1)[:, None]
    return pts


def sweep_directions(k: SpaceKnot, n: int, seed: int = 0) -> DirectionSweep:
    """Evaluate directional_maxima over n quasi-uniform directions, skipping
    degenerate ones; min/max closed-counts estimate the conformation's bridge
    and superbridge numbers."""
    if n < 1:
        raise ValueError("need at least one direction")
    dirs = fibonacci_sphere(n, seed)
    fc, gc, hc = list(k.f.coeffs), list(k.g.coeffs), list(k.h.coeffs)
    width = max(len(fc), len(gc), len(hc))
    comps = np.zeros((3, width))
    comps[0, :len(fc)] = fc
    comps[1, :len(gc)] = gc
    comps[2, :len(hc)] = hc

    maxima: list[int] = []
    tails: list[str] = []
    closed: list[int] = []
    skipped = 0
    for v in dirs:
        coeffs = v @ comps
        p = RealPoly(tuple(coeffs))
        if p.degree < 1:
            skipped += 1
            continue
        dp = p.derivative()
        if dp.degree < 1:
            m, degen = 0, False
        else:
            chain, clean = _sturm_lists(list(dp.coeffs))
            if not clean:
                skipped += 1
                continue
            kroots = _variations_at_inf(chain, False) - _variations_at_inf(chain, True)
            starts_positive = (dp.coeffs[-1] > 0) == (dp.degree % 2 == 0)
            m = (kroots + 1) // 2 if starts_positive else kroots // 2
        tail = _tail_class(p)
        maxima.append(m)
        tails.append(tail)
        closed.append(m if tail == BOTH_DOWN else m + 1)

    if not closed:
        raise DegenerateDirectionError("every sampled direction was degenerate")
    return DirectionSweep(n, seed, tuple(maxima), tuple(tails), tuple(closed),
                          min(closed), max(closed), skipped)
