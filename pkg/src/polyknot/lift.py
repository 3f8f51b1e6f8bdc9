"""Height-polynomial construction: realize a prescribed over/under pattern at
the double points by solving a square linear system in the monomial
coefficients of h(t)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .polycore import RealPoly
from .projection import DoublePoint

__all__ = [
    "UNDER",
    "OVER",
    "SignPattern",
    "LiftSpec",
    "LiftResult",
    "DegenerateSystemError",
    "InternalConsistencyError",
    "build_sign_system",
    "solve_lift",
    "verify_pattern",
]

UNDER = "U"  # h(t_i) < h(s_i)
OVER = "O"   # h(t_i) > h(s_i)


class DegenerateSystemError(ValueError):
    """The sign system is (numerically) singular: the pattern is not
    realizable with this basis, or double points nearly coincide."""


class InternalConsistencyError(RuntimeError):
    """A solved lift failed its own post-verification."""


@dataclass(frozen=True)
class SignPattern:
    """Per-crossing over/under flags, indexed like the sorted double points."""

    flags: tuple[str, ...]

    def __post_init__(self):
        if any(f not in (UNDER, OVER) for f in self.flags):
            raise ValueError("pattern flags must be 'U' or 'O'")

    @classmethod
    def from_string(cls, text: str) -> "SignPattern":
        return cls(tuple(text.strip().upper()))

    def __len__(self) -> int:
        return len(self.flags)

    def __iter__(self):
        return iter(self.flags)

    def __str__(self) -> str:
        return "".join(self.flags)

    def negated(self) -> "SignPattern":
        return SignPattern(tuple(OVER if f == UNDER else UNDER for f in self.flags))


@dataclass(frozen=True)
class LiftSpec:
    """Monomial basis for h: ``free`` lists solved degrees (descending),
    ``pinned`` maps degrees to fixed coefficients.  No constant term: a
    vertical translation never changes the over/under pattern."""

    degree: int
    free: tuple[int, ...]
    pinned: tuple[tuple[int, float], ...] = ()
    magnitude: float = 100.0

    def __post_init__(self):
        degrees = list(self.free) + [d for d, _ in self.pinned]
        if 0 in degrees:
            raise ValueError("constant term is not part of a lift basis")
        if len(set(degrees)) != len(degrees):
            raise ValueError("duplicate monomial in lift basis")
        if any(d > self.degree or d < 1 for d in degrees):
            raise ValueError("basis monomial outside degree range")
        if self.magnitude <= 0:
            raise ValueError("separation magnitude must be positive")

    @classmethod
    def default(cls, degree: int, n_points: int, magnitude: float = 100.0) -> "LiftSpec":
        """Pin the top degree - n monomials to 1 (monic convention), leaving
        one free monomial per double point: t^n .. t."""
        if n_points < 1:
            raise ValueError("need at least one double point")
        if n_points > degree:
            raise ValueError(
                f"{n_points} double points need degree >= {n_points}, got {degree}")
        pinned = tuple((k, 1.0) for k in range(degree, n_points, -1))
        free = tuple(range(n_points, 0, -1))
        return cls(degree, free, pinned, magnitude)


@dataclass(frozen=True)
class LiftResult:
    h: RealPoly
    determinant: float
    coefficients: dict[int, float]  # by monomial degree, pinned included
    separations: tuple[float, ...]
    points: tuple[tuple[float, float], ...]
    pattern: SignPattern


def _point_pairs(points: Sequence) -> list[tuple[float, float]]:
    out = []
    for p in points:
        if isinstance(p, DoublePoint):
            out.append((p.t, p.s))
        else:
            t, s = p
            out.append((float(t), float(s)))
    return out


def build_sign_system(points: Sequence, pattern: SignPattern,
                      spec: LiftSpec) -> tuple[np.ndarray, np.ndarray]:
    """Matrix rows are m(t_i) - m(s_i) over the free monomials (descending);
    the rhs carries the signed magnitude minus the pinned contribution."""
    pairs = _point_pairs(points)
    if len(pairs) != len(pattern):
        raise ValueError(f"{len(pairs)} double points but pattern of length {len(pattern)}")
    if len(pairs) != len(spec.free):
        raise ValueError(f"{len(pairs)} equations but {len(spec.free)} free monomials")
    matrix = np.array([[t**k - s**k for k in spec.free] for t, s in pairs])
    rhs = np.empty(len(pairs))
    for i, ((t, s), flag) in enumerate(zip(pairs, pattern)):
        target = -spec.magnitude if flag == UNDER else spec.magnitude
        rhs[i] = target - sum(c * (t**k - s**k) for k, c in spec.pinned)
    return matrix, rhs


def solve_lift(points: Sequence, pattern: SignPattern, spec: LiftSpec) -> LiftResult:
    """Solve the sign system and assemble h; the realized separations are
    recomputed from h and checked against the demanded pattern."""
    pairs = _point_pairs(points)
    matrix, rhs = build_sign_system(pairs, pattern, spec)
    det = float(np.linalg.det(matrix))
    sigma = np.linalg.svd(matrix, compute_uv=False)
    # Spectral degeneracy test: exactly-singular systems sit at the float
    # noise floor (~1e-16), while solvable ill-conditioned ones stay well
    # above 1e-10.
    if sigma[-1] <= 1e-10 * sigma[0]:
        raise DegenerateSystemError(
            f"system is numerically singular (condition {sigma[0] / max(sigma[-1], 1e-300):.3g}); "
            f"pattern not realizable with this basis at these points")
    solution = np.linalg.solve(matrix, rhs)

    residual = np.linalg.norm(matrix @ solution - rhs)
    scale = np.linalg.norm(matrix) * np.linalg.norm(solution) + np.linalg.norm(rhs)
    if residual > 1e-8 * scale:
        raise InternalConsistencyError(f"solver residual {residual:g} too large")

    coeffs = [0.0] * (spec.degree + 1)
    for k, c in spec.pinned:
        coeffs[k] = c
    for k, v in zip(spec.free, solution):
        coeffs[k] = float(v)
    h = RealPoly(tuple(coeffs))

    separations = tuple(h(t) - h(s) for t, s in pairs)
    for sep, flag in zip(separations, pattern):
        want_neg = flag == UNDER
        if (sep < 0) != want_neg or abs(abs(sep) - spec.magnitude) > 1e-6 * spec.magnitude:
            raise InternalConsistencyError(
                f"realized separation {sep:g} does not match demanded "
                f"{'-' if want_neg else '+'}{spec.magnitude:g}")

    coefficients = {k: coeffs[k] for k in sorted(
        list(spec.free) + [d for d, _ in spec.pinned], reverse=True)}
    return LiftResult(h, det, coefficients, separations, tuple(pairs), pattern)


def verify_pattern(h: RealPoly, points: Sequence, pattern: SignPattern,
                   margin: float = 50.0) -> tuple[bool, tuple[float, ...]]:
    """Check the over/under pattern realized by h at the given points.

    True when every separation h(t_i) - h(s_i) has the demanded sign and
    magnitude at least ``margin`` (default: half the default rhs magnitude).
    """
    pairs = _point_pairs(points)
    if len(pairs) != len(pattern):
        raise ValueError("points/pattern length mismatch")
    separations = tuple(h(t) - h(s) for t, s in pairs)
    ok = all((sep <= -margin) if flag == UNDER else (sep >= margin)
             for sep, flag in zip(separations, pattern))
    return ok, separations
