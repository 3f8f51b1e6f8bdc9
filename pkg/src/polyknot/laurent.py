"""Exact integer-coefficient Laurent polynomials in one formal variable.

The coefficient ring for bracket and Jones computations: coefficients are
Python ints (arbitrary precision), equality is exact, and the canonical text
rendering lists terms in descending exponent, e.g.
``-A^11+A^7-2A^3+A^-1-A^-5+A^-9``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "LaurentInt",
    "delta_power",
    "mirror_variable",
    "substitute_quarter",
    "parse_laurent",
]

_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?P<coeff>\d+)?\s*"
    r"(?:(?P<var>[A-Za-z])\s*(?:\^\s*(?P<exp>-?\d+))?)?"
)


@dataclass(frozen=True)
class LaurentInt:
    """Laurent polynomial with integer coefficients; ``terms`` maps exponent
    to a nonzero coefficient (stored sorted by descending exponent)."""

    terms: tuple[tuple[int, int], ...] = ()
    var: str = "A"

    def __post_init__(self):
        acc: dict[int, int] = {}
        for e, c in self.terms:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        clean = tuple(sorted(((e, c) for e, c in acc.items() if c != 0), reverse=True))
        object.__setattr__(self, "terms", clean)

    @classmethod
    def from_dict(cls, d: dict[int, int], var: str = "A") -> "LaurentInt":
        return cls(tuple(d.items()), var)

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1, var: str = "A") -> "LaurentInt":
        return cls(((exp, coeff),), var)

    @classmethod
    def one(cls, var: str = "A") -> "LaurentInt":
        return cls(((0, 1),), var)

    @classmethod
    def zero(cls, var: str = "A") -> "LaurentInt":
        return cls((), var)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def _check_var(self, other: "LaurentInt"):
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")

    def __add__(self, other: "LaurentInt") -> "LaurentInt":
        self._check_var(other)
        return LaurentInt(self.terms + other.terms, self.var)

    def __neg__(self) -> "LaurentInt":
        return LaurentInt(tuple((e, -c) for e, c in self.terms), self.var)

    def __sub__(self, other: "LaurentInt") -> "LaurentInt":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentInt(tuple((e, c * other) for e, c in self.terms), self.var)
        self._check_var(other)
        acc: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentInt(tuple(acc.items()), self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentInt":
        if k < 0:
            raise ValueError("negative powers are not defined for LaurentInt")
        out = LaurentInt.one(self.var)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def mirror(self) -> "LaurentInt":
        """Substitute variable -> variable^-1 (negate every exponent)."""
        return LaurentInt(tuple((-e, c) for e, c in self.terms), self.var)

    def evaluate(self, x: float) -> float:
        return float(sum(c * x**e for e, c in self.terms))

    @property
    def min_exp(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no exponents")
        return self.terms[-1][0]

    @property
    def max_exp(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no exponents")
        return self.terms[0][0]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self.terms):
            sign = "-" if c < 0 else ("+" if i else "")
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else str(mag)
                body = head + (self.var if e == 1 else f"{self.var}^{e}")
            parts.append(sign + body)
        return "".join(parts)


def delta_power(k: int, var: str = "A") -> LaurentInt:
    """(-A^2 - A^-2)^k, the loop factor of the bracket state sum."""
    if k < 0:
        raise ValueError("delta_power requires k >= 0")
    return LaurentInt(((2, -1), (-2, -1)), var) ** k


def mirror_variable(a: LaurentInt) -> LaurentInt:
    return a.mirror()


def substitute_quarter(f: LaurentInt) -> LaurentInt:
    """Map A-exponent e to q-exponent -e/4 (the substitution A^-4 = q).

    Every exponent must be divisible by 4; a violation signals a
    writhe/bracket inconsistency upstream.
    """
    for e, _ in f.terms:
        if e % 4 != 0:
            raise ValueError(f"exponent {e} not divisible by 4")
    return LaurentInt(tuple((-e // 4, c) for e, c in f.terms), "q")


def parse_laurent(text: str, var: str | None = None) -> LaurentInt:
    """Parse the canonical rendering (e.g. ``q-q^2+2q^3``)."""
    s = text.strip()
    if not s:
        raise ValueError("empty Laurent polynomial text")
    terms: list[tuple[int, int]] = []
    seen_var = var
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse Laurent term at {s[pos:]!r}")
        coeff_txt, var_txt, exp_txt = m.group("coeff"), m.group("var"), m.group("exp")
        if coeff_txt is None and var_txt is None:
            raise ValueError(f"cannot parse Laurent term at {s[pos:]!r}")
        coeff = int(coeff_txt) if coeff_txt is not None else 1
        if m.group("sign") == "-":
            coeff = -coeff
        if var_txt is not None:
            if seen_var is None:
                seen_var = var_txt
            elif var_txt != seen_var:
                raise ValueError(f"mixed variables {seen_var!r} and {var_txt!r}")
            exp = int(exp_txt) if exp_txt is not None else 1
        else:
            exp = 0
        terms.append((exp, coeff))
        pos = m.end()
    return LaurentInt(tuple(terms), seen_var or "A")
