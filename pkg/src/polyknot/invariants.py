"""Kauffman bracket by state sum, writhe normalization, Jones polynomial, and
identification against the bundled knot table.

Loop counting uses union-find over the 2n edge labels: in PD slot terms
X(a,b,c,d) the A-smoothing joins a-b and c-d, the B-smoothing a-d and b-c
(fixed by the incoming-under-then-counterclockwise tuple convention and
calibrated by the one-crossing kink, whose bracket must be -A^3).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .diagram import KnotDiagram, diagram_from_pd, parse_pd_text
from .laurent import LaurentInt, delta_power, mirror_variable, substitute_quarter
from .lift import InternalConsistencyError

__all__ = [
    "BracketState",
    "TableEntry",
    "KnotTable",
    "TableDataError",
    "MatchResult",
    "bracket_states",
    "kauffman_bracket",
    "normalized_f",
    "jones",
    "load_table",
    "bundled_table",
    "identify",
]

_A_SMOOTHING_PAIRS = ((0, 1), (2, 3))  # slots joined by an A-smoothing
_B_SMOOTHING_PAIRS = ((0, 3), (1, 2))


class TableDataError(ValueError):
    """Malformed or inconsistent knot-table data."""


@dataclass(frozen=True)
class BracketState:
    """One smoothing choice per crossing ('A' or 'B') and its loop count."""

    choices: tuple[str, ...]
    loops: int


def _state_loops(pd, state: int) -> int:
    n = len(pd)
    parent = list(range(2 * n + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, tup in enumerate(pd):
        pairs = _A_SMOOTHING_PAIRS if (state >> i) & 1 else _B_SMOOTHING_PAIRS
        for u, v in pairs:
            ru, rv = find(tup[u]), find(tup[v])
            if ru != rv:
                parent[ru] = rv
    return len({find(e) for e in range(1, 2 * n + 1)})


def bracket_states(d: KnotDiagram):
    """All 2^n smoothing states with their loop counts (test/inspection aid)."""
    n = d.n
    for state in range(1 << n):
        choices = tuple("A" if (state >> i) & 1 else "B" for i in range(n))
        yield BracketState(choices, _state_loops(d.pd, state))


def kauffman_bracket(d: KnotDiagram, cap: int = 20) -> LaurentInt:
    """State-sum bracket: sum over states of A^(a-b) (-A^2-A^-2)^(loops-1).

    The 0-crossing closed curve has bracket 1.  Cost is exactly 2^n
    loop-counting passes; ``cap`` guards against runaway diagrams.
    """
    n = d.n
    if n > cap:
        raise ValueError(f"{n} crossings exceeds the state-sum cap {cap}")
    if n == 0:
        return LaurentInt.one("A")
    deltas = [delta_power(k).as_dict() for k in range(n + 1)]
    acc: dict[int, int] = {}
    for state in range(1 << n):
        a_count = bin(state).count("1")
        exp_shift = 2 * a_count - n  # a - b
        loops = _state_loops(d.pd, state)
        for e, c in deltas[loops - 1].items():
            key = e + exp_shift
            acc[key] = acc.get(key, 0) + c
    return LaurentInt(tuple(acc.items()), "A")


def normalized_f(d: KnotDiagram, cap: int = 20) -> LaurentInt:
    """(-A)^(-3w) <D>: the writhe-normalized bracket (Reidemeister invariant)."""
    w = d.writhe
    factor = LaurentInt.monomial(-3 * w, -1 if (3 * w) % 2 else 1, "A")
    return factor * kauffman_bracket(d, cap)


def jones(d: KnotDiagram, cap: int = 20) -> LaurentInt:
    """Jones polynomial in q via the substitution A^-4 = q."""
    f = normalized_f(d, cap)
    try:
        return substitute_quarter(f)
    except ValueError as exc:
        raise InternalConsistencyError(
            f"normalized bracket has exponents not divisible by 4 ({exc}); "
            f"writhe or bracket computation is inconsistent") from exc


@dataclass(frozen=True)
class TableEntry:
    name: str
    pd: tuple[tuple[int, int, int, int], ...]
    jones: LaurentInt


@dataclass(frozen=True)
class KnotTable:
    entries: tuple[TableEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def names(self) -> tuple[str, ...]:
        return tuple(e.name for e in self.entries)


def load_table(source: str) -> KnotTable:
    """Parse table text (``name; X(a,b,c,d) X(...) ...`` per line, '#'
    comments), compute Jones for every entry with this module's own pipeline,
    and verify that all Jones polynomials are pairwise distinct as
    {V(q), V(1/q)} pairs."""
    entries: list[TableEntry] = []
    seen_pd: dict[tuple, str] = {}
    for lineno, raw in enumerate(source.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ";" not in line:
            raise TableDataError(f"line {lineno}: expected 'name; PD code'")
        name, pd_part = (part.strip() for part in line.split(";", 1))
        if not name:
            raise TableDataError(f"line {lineno}: empty knot name")
        try:
            pd = parse_pd_text(pd_part) if pd_part else ()
            diagram = diagram_from_pd(pd)
            v = jones(diagram)
        except (ValueError, InternalConsistencyError) as exc:
            raise TableDataError(f"line {lineno} ({name}): {exc}") from exc
        key = tuple(sorted(pd))
        if key in seen_pd and pd:
            raise TableDataError(
                f"line {lineno}: PD code of {name!r} repeats {seen_pd[key]!r}")
        seen_pd[key] = name
        entries.append(TableEntry(name, pd, v))

    for i, a in enumerate(entries):
        for b in entries[i + 1:]:
            if a.jones == b.jones or a.jones == b.jones.mirror():
                raise TableDataError(
                    f"Jones polynomials of {a.name!r} and {b.name!r} coincide "
                    f"as mirror pairs; identification would be ambiguous")
    return KnotTable(tuple(entries))


@lru_cache(maxsize=1)
def bundled_table() -> KnotTable:
    """The packaged table: unknot plus all prime knots through 8 crossings."""
    text = resources.files("polyknot").joinpath("data/knot_table.txt").read_text()
    return load_table(text)


@dataclass(frozen=True)
class MatchResult:
    name: str | None
    chirality: str | None  # "as tabulated" | "mirror" | None (amphichiral/unknown)

    @property
    def matched(self) -> bool:
        return self.name is not None

    def __str__(self) -> str:
        if not self.matched:
            return "unknown"
        return self.name if self.chirality is None else f"{self.name} ({self.chirality})"


def identify(v: LaurentInt, table: KnotTable) -> MatchResult:
    """Look up a Jones polynomial up to mirror image.

    Amphichiral matches (v equal to its own mirror) carry no chirality note;
    a miss returns the ``unknown`` result, never an error.  Comparison is by
    term structure, so the variable label of v is not significant."""
    vt = v.terms
    vm = mirror_variable(v).terms
    for entry in table.entries:
        if vt == entry.jones.terms:
            return MatchResult(entry.name, None if vt == vm else "as tabulated")
        if vm == entry.jones.terms:
            return MatchResult(entry.name, None if vt == vm else "mirror")
    return MatchResult(None, None)
