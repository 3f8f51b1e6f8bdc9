"""Dense real polynomial arithmetic: divided differences, Sylvester
resultants, and certified real-root isolation.

Everything here is pure and deterministic; values are immutable after
construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import numpy.polynomial.polynomial as npp

__all__ = [
    "RealPoly",
    "BiPoly",
    "RootSet",
    "divided_difference",
    "resultant_eliminate_s",
    "sylvester_matrix",
    "real_roots",
    "count_real_roots",
]


def _trimmed(coeffs) -> tuple[float, ...]:
    cs = [float(c) for c in coeffs]
    while cs and cs[-1] == 0.0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class RealPoly:
    """Univariate real polynomial; ``coeffs[k]`` multiplies ``t**k``.

    The zero polynomial is the empty coefficient tuple; otherwise the
    trailing coefficient is nonzero.
    """

    coeffs: tuple[float, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trimmed(self.coeffs))

    @classmethod
    def monomial(cls, degree: int, coeff: float = 1.0) -> "RealPoly":
        return cls((0.0,) * degree + (coeff,))

    @classmethod
    def from_roots(cls, roots, lead: float = 1.0) -> "RealPoly":
        return cls(tuple(lead * c for c in npp.polyfromroots(list(roots))))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, t):
        if self.is_zero:
            t = np.asarray(t, dtype=float)
            z = np.zeros_like(t)
            return z if z.ndim else 0.0
        v = npp.polyval(t, self.coeffs)
        return v if isinstance(t, np.ndarray) else float(v)

    def derivative(self) -> "RealPoly":
        if self.degree < 1:
            return RealPoly()
        return RealPoly(tuple(npp.polyder(list(self.coeffs))))

    def __add__(self, other: "RealPoly") -> "RealPoly":
        return RealPoly(tuple(npp.polyadd(list(self.coeffs) or [0.0],
                                          list(other.coeffs) or [0.0])))

    def __sub__(self, other: "RealPoly") -> "RealPoly":
        return self + (-other)

    def __neg__(self) -> "RealPoly":
        return RealPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, RealPoly):
            if self.is_zero or other.is_zero:
                return RealPoly()
            return RealPoly(tuple(npp.polymul(list(self.coeffs), list(other.coeffs))))
        return RealPoly(tuple(float(other) * c for c in self.coeffs))

    __rmul__ = __mul__

    def reflected(self) -> "RealPoly":
        """p(-t)."""
        return RealPoly(tuple(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)))


def _trim_grid(grid: np.ndarray) -> np.ndarray:
    rows = grid.shape[0]
    while rows > 0 and not np.any(grid[rows - 1]):
        rows -= 1
    grid = grid[:rows]
    cols = grid.shape[1] if rows else 0
    while cols > 0 and not np.any(grid[:, cols - 1]):
        cols -= 1
    return grid[:, :cols] if rows else np.zeros((0, 0))


@dataclass(frozen=True)
class BiPoly:
    """Bivariate polynomial; ``coeffs[i][j]`` multiplies ``t**i * s**j``.

    Trailing all-zero rows and columns are trimmed on construction.
    """

    coeffs: tuple[tuple[float, ...], ...] = ()

    def __post_init__(self):
        rows = [[float(c) for c in row] for row in self.coeffs]
        width = max((len(r) for r in rows), default=0)
        grid = np.zeros((len(rows), width))
        for i, r in enumerate(rows):
            grid[i, :len(r)] = r
        grid = _trim_grid(np.atleast_2d(grid)) if grid.size else np.zeros((0, 0))
        object.__setattr__(self, "coeffs", tuple(tuple(row) for row in grid))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def deg_t(self) -> int:
        return len(self.coeffs) - 1

    @property
    def deg_s(self) -> int:
        return max((len(r) for r in self.coeffs), default=0) - 1

    def _grid(self) -> np.ndarray:
        if self.is_zero:
            return np.zeros((1, 1))
        nt, ns = self.deg_t + 1, self.deg_s + 1
        g = np.zeros((nt, ns))
        for i, row in enumerate(self.coeffs):
            g[i, : len(row)] = row
        return g

    def __call__(self, t, s):
        v = npp.polyval2d(np.asarray(t, dtype=float), np.asarray(s, dtype=float), self._grid())
        return v if isinstance(t, np.ndarray) or isinstance(s, np.ndarray) else float(v)

    def s_coefficients(self) -> list[RealPoly]:
        """Coefficients of powers of s, each a polynomial in t (ascending in s)."""
        g = self._grid()
        return [RealPoly(tuple(g[:, j])) for j in range(g.shape[1])]

    def at_t(self, t0: float) -> RealPoly:
        """The univariate polynomial in s obtained by fixing t = t0."""
        g = self._grid()
        powers = np.array([t0**i for i in range(g.shape[0])])
        return RealPoly(tuple(powers @ g))

    def swap_vars(self) -> "BiPoly":
        return BiPoly(tuple(map(tuple, self._grid().T)))

    def is_symmetric(self, rel: float = 1e-12) -> bool:
        g = self._grid()
        if g.shape[0] != g.shape[1]:
            return False
        scale = np.max(np.abs(g)) or 1.0
        return bool(np.max(np.abs(g - g.T)) <= rel * scale)


def divided_difference(p: RealPoly) -> BiPoly:
    """(p(t) - p(s)) / (t - s) as a bivariate polynomial.

    Built term by term from (t^k - s^k)/(t - s) = sum_i t^i s^(k-1-i); the
    result is symmetric with total degree deg(p) - 1.
    """
    if p.degree < 1:
        raise ValueError("divided difference requires degree >= 1")
    d = p.degree
    grid = np.zeros((d, d))
    for k, a in enumerate(p.coeffs):
        if a == 0.0 or k == 0:
            continue
        for i in range(k):
            grid[i, k - 1 - i] += a
    return BiPoly(tuple(map(tuple, grid)))


# ---------------------------------------------------------------------------
# Sylvester resultant, eliminating s.
#
# Strategy: evaluate the Sylvester determinant exactly (rational arithmetic;
# float coefficients are exact dyadic rationals) at integer sample points in
# t, then recover the coefficients by exact Newton interpolation.  This is
# numerically exact up to the final float conversion and trivially testable
# against pointwise numeric determinants.
# ---------------------------------------------------------------------------


def _sylvester_rows(P: BiPoly, Q: BiPoly):
    """Row layout of Syl(P, Q) w.r.t. s; entries are polynomials in t."""
    p = P.s_coefficients()[::-1]  # descending in s
    q = Q.s_coefficients()[::-1]
    m = len(p) - 1
    n = len(q) - 1
    size = m + n
    zero = RealPoly()
    rows = []
    for shift in range(n):
        rows.append([zero] * shift + p + [zero] * (size - shift - m - 1))
    for shift in range(m):
        rows.append([zero] * shift + q + [zero] * (size - shift - n - 1))
    return rows


def sylvester_matrix(P: BiPoly, Q: BiPoly, t0: float) -> np.ndarray:
    """Numeric Sylvester matrix of P(t0, s), Q(t0, s) in s."""
    if P.deg_s < 1 or Q.deg_s < 1:
        raise ValueError("both inputs must have positive degree in s")
    rows = _sylvester_rows(P, Q)
    return np.array([[e(t0) for e in row] for row in rows], dtype=float)


def _fraction_det(mat: list[list[Fraction]]) -> Fraction:
    n = len(mat)
    m = [row[:] for row in mat]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = m[col][col]
        for r in range(col + 1, n):
            if m[r][col] == 0:
                continue
            factor = m[r][col] / inv
            m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det


def _eval_fraction(poly: RealPoly, t0: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(poly.coeffs):
        acc = acc * t0 + Fraction(c)
    return acc


def _newton_interp(xs: list[Fraction], ys: list[Fraction]) -> list[Fraction]:
    n = len(xs)
    table = ys[:]
    coef = [table[0]]
    for level in range(1, n):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i])
                 for i in range(n - level)]
        coef.append(table[0])
    poly = [Fraction(0)] * n
    basis = [Fraction(1)]
    for k in range(n):
        for i, b in enumerate(basis):
            poly[i] += coef[k] * b
        nxt = [Fraction(0)] * (len(basis) + 1)
        for i, b in enumerate(basis):
            nxt[i] -= xs[k] * b
            nxt[i + 1] += b
        basis = nxt
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def resultant_eliminate_s(P: BiPoly, Q: BiPoly) -> RealPoly:
    """Resultant in s of P(t,s), Q(t,s), as a polynomial in t.

    Vanishes exactly at the t for which P(t,.) and Q(t,.) share a complex
    root; degree in t is at most deg_s(P)*deg_t(Q) + deg_s(Q)*deg_t(P).
    """
    if P.is_zero or Q.is_zero:
        raise ValueError("resultant of a zero polynomial")
    if P.deg_s < 1 or Q.deg_s < 1:
        raise ValueError("both inputs must have positive degree in s")
    rows = _sylvester_rows(P, Q)
    bound = P.deg_s * Q.deg_t + Q.deg_s * P.deg_t
    xs = [Fraction((k + 1) // 2 * (1 if k % 2 else -1)) for k in range(bound + 1)]
    ys = []
    for x in xs:
        mat = [[_eval_fraction(e, x) for e in row] for row in rows]
        ys.append(_fraction_det(mat))
    coeffs = _newton_interp(xs, ys)
    return RealPoly(tuple(float(c) for c in coeffs))


# ---------------------------------------------------------------------------
# Real root isolation: Sturm-sequence interval counts, bisection to isolate,
# then a safeguarded Newton polish.
# ---------------------------------------------------------------------------


def _horner(c: list[float], x: float) -> float:
    acc = 0.0
    for a in reversed(c):
        acc = acc * x + a
    return acc


def _normalized(c: list[float]) -> list[float]:
    m = max(abs(a) for a in c)
    return [a / m for a in c]


def _deriv_list(c: list[float]) -> list[float]:
    return [k * a for k, a in enumerate(c)][1:]


def _rem_list(num: list[float], den: list[float]) -> list[float]:
    r = num[:]
    dn = len(den) - 1
    lead = den[-1]
    for k in range(len(r) - 1, dn - 1, -1):
        f = r[k] / lead
        if f != 0.0:
            for j in range(dn + 1):
                r[k - dn + j] -= f * den[j]
        r[k] = 0.0
    del r[dn:]
    while r and abs(r[-1]) <= 1e-14 * max(1.0, max(abs(a) for a in r)):
        r.pop()
    return r


def _sturm_lists(c: list[float]) -> tuple[list[list[float]], bool]:
    """Sturm chain of a normalized coefficient list.

    Returns (chain, clean): clean is False when the remainder sequence
    terminated early (a nontrivial common factor of p and p', i.e. a
    multiple root, or numerically close to one).
    """
    f0 = _normalized(c)
    chain = [f0]
    if len(c) == 1:
        return chain, True
    f1 = _normalized(_deriv_list(f0))
    chain.append(f1)
    clean = True
    while len(chain[-1]) > 1:
        r = _rem_list(chain[-2], chain[-1])
        if not r:
            clean = False
            break
        norm = max(abs(a) for a in r)
        if norm <= 1e-8:
            clean = False
            break
        chain.append([-a / norm for a in r])
    return chain, clean


def _variations(signs: list[int]) -> int:
    flips = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            flips += 1
        prev = s
    return flips


def _variations_at(chain: list[list[float]], x: float) -> int:
    signs = []
    for c in chain:
        v = _horner(c, x)
        signs.append(0 if v == 0.0 else (1 if v > 0.0 else -1))
    return _variations(signs)


def _variations_at_inf(chain: list[list[float]], positive: bool) -> int:
    signs = []
    for c in chain:
        lead = c[-1]
        s = 1 if lead > 0 else (-1 if lead < 0 else 0)
        if not positive and (len(c) - 1) % 2 == 1:
            s = -s
        signs.append(s)
    return _variations(signs)


def count_real_roots(p: RealPoly, a: float | None = None, b: float | None = None) -> int:
    """Number of distinct real roots of p in (a, b] (whole line by default)."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return 0
    chain, _ = _sturm_lists(list(p.coeffs))
    va = _variations_at_inf(chain, False) if a is None else _variations_at(chain, a)
    vb = _variations_at_inf(chain, True) if b is None else _variations_at(chain, b)
    return va - vb


def _cauchy_bound(c: list[float]) -> float:
    lead = abs(c[-1])
    return 1.0 + max(abs(a) for a in c[:-1]) / lead if len(c) > 1 else 1.0


def _bracketed_newton(c: list[float], dc: list[float], a: float, b: float) -> float:
    fa = _horner(c, a)
    x = 0.5 * (a + b)
    for _ in range(100):
        fx = _horner(c, x)
        if fx == 0.0:
            return x
        if (fx > 0) == (fa > 0):
            a = x
        else:
            b = x
        d = _horner(dc, x)
        step_ok = False
        if d != 0.0:
            nx = x - fx / d
            if a < nx < b:
                step_ok = True
        if not step_ok:
            nx = 0.5 * (a + b)
        if abs(nx - x) <= 1e-16 * max(1.0, abs(nx)):
            return nx
        x = nx
    return x


def _polish_even(c: list[float], dc: list[float], a: float, b: float) -> float:
    # No sign change of p: the root has even multiplicity, so p' crosses zero.
    da, db = _horner(dc, a), _horner(dc, b)
    if da == 0.0:
        return a
    if db == 0.0 or (da > 0) == (db > 0):
        return 0.5 * (a + b)
    return _bracketed_newton(dc, _deriv_list(dc), a, b)


@dataclass(frozen=True)
class RootSet:
    """Sorted real roots with multiplicity flags and the isolation tolerance."""

    roots: tuple[float, ...]
    multiple: tuple[bool, ...]
    tol: float

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def simple_roots(self) -> tuple[float, ...]:
        return tuple(r for r, m in zip(self.roots, self.multiple) if not m)


def real_roots(p: RealPoly, tol: float = 1e-10) -> RootSet:
    """All distinct real roots of p, isolated by Sturm bisection and polished.

    Roots where the derivative also vanishes (within tolerance) are flagged
    as multiple rather than silently merged or dropped.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has no root set")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if p.degree == 0:
        return RootSet((), (), tol)

    c = _normalized(list(p.coeffs))
    dc = _deriv_list(c)
    chain, _ = _sturm_lists(c)
    bound = _cauchy_bound(c) + 1.0
    a, b = -bound, bound
    va, vb = _variations_at(chain, a), _variations_at(chain, b)

    isolated: list[tuple[float, float]] = []
    stack = [(a, va, b, vb)]
    while stack:
        lo, vlo, hi, vhi = stack.pop()
        k = vlo - vhi
        if k <= 0:
            continue
        if k == 1 or hi - lo <= 1e-13 * max(1.0, abs(lo), abs(hi)):
            isolated.append((lo, hi))
            continue
        mid = 0.5 * (lo + hi)
        for _ in range(8):
            if _horner(c, mid) != 0.0:
                break
            mid += (hi - lo) * 1e-7
        vm = _variations_at(chain, mid)
        stack.append((lo, vlo, mid, vm))
        stack.append((mid, vm, hi, vhi))

    roots = []
    for lo, hi in isolated:
        flo, fhi = _horner(c, lo), _horner(c, hi)
        if flo == 0.0:
            roots.append(lo)
        elif fhi == 0.0:
            roots.append(hi)
        elif (flo > 0) != (fhi > 0):
            roots.append(_bracketed_newton(c, dc, lo, hi))
        else:
            roots.append(_polish_even(c, dc, lo, hi))
    roots.sort()

    merged: list[float] = []
    twin: list[bool] = []
    for r in roots:
        if merged and abs(r - merged[-1]) <= max(tol, 1e-12 * (1.0 + abs(r))):
            twin[-1] = True
            continue
        merged.append(r)
        twin.append(False)

    dnorm = max((abs(a0) for a0 in dc), default=0.0)
    flags = []
    for r, was_twin in zip(merged, twin):
        scale = max(dnorm, 1e-30) * max(1.0, abs(r)) ** max(len(dc) - 1, 0)
        flags.append(was_twin or abs(_horner(dc, r)) <= math.sqrt(tol) * scale)
    return RootSet(tuple(merged), tuple(flags), tol)
