"""Marked partitions: greedy mark assignment, row views, and part surgery.

A partition is kept as a non-increasing tuple of positive integers.  Its
marking assigns every part the smallest positive mark not already carried by
a previously marked part at distance at most 2 (at most 1 when the part being
marked is odd); parts are marked from smallest to largest.  Row ``i`` of the
marking is the decreasing list of ``i``-marked parts.

A *special* partition may additionally overline one copy of its largest odd
value; the overlined copy is forbidden mark 1 and otherwise marked by the
same greedy rule.  Special partitions only arise as intermediates of the
weight-shifting maps, but they are first-class values here.

All values are immutable; every mutation returns a fresh, canonically
re-marked partition.  Marks asserted by the surgery callers are looked up in
the re-marked result, never patched in place, so a wrong assertion surfaces
as a :class:`~ggpart.errors.MissingEntryError` instead of a silent corruption.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import InvalidSpecialPartition, MissingEntryError
from .extint import NEG_INF, POS_INF

_EMPTY: frozenset = frozenset()


def _conflict_marks(marks_at: dict, value: int) -> set:
    """Marks forbidden for `value` given the parts marked so far."""
    used = set(marks_at.get(value, _EMPTY))
    used |= marks_at.get(value - 1, _EMPTY)
    if value % 2 == 0:
        used |= marks_at.get(value - 2, _EMPTY)
    return used


def _assign(entries: Sequence[tuple[int, bool]]) -> list[tuple[int, int, bool]]:
    """Run the greedy assignment over (value, overlined) pairs.

    Equal values are processed plain-before-overlined; the overlined copy
    starts its mark search at 2.  Returns (value, mark, overlined) triples in
    processing order (ascending by value).
    """
    marks_at: dict[int, set] = {}
    out = []
    for value, over in sorted(entries, key=lambda e: (e[0], e[1])):
        used = _conflict_marks(marks_at, value)
        mark = 2 if over else 1
        while mark in used:
            mark += 1
        marks_at.setdefault(value, set()).add(mark)
        out.append((value, mark, over))
    return out


class MarkedPartition:
    """A partition together with its canonical marking.

    `entries` holds (value, mark, overlined) triples sorted by decreasing
    value; `rows[i-1]` is the decreasing tuple of i-marked values; `overline`
    is the (value, mark) of the overlined copy, or None.
    """

    __slots__ = ("parts", "entries", "rows", "overline", "_marks_at", "_counts", "_memo")

    def __init__(self, assigned: Iterable[tuple[int, int, bool]]):
        entries = tuple(sorted(assigned, key=lambda e: (-e[0], e[1])))
        self.entries = entries
        self.parts = tuple(v for v, _, _ in entries)
        nrows = max((m for _, m, _ in entries), default=0)
        rows: list[list[int]] = [[] for _ in range(nrows)]
        marks_at: dict[int, set] = {}
        counts: dict[int, int] = {}
        overline = None
        for value, mark, over in entries:
            rows[mark - 1].append(value)
            marks_at.setdefault(value, set()).add(mark)
            counts[value] = counts.get(value, 0) + 1
            if over:
                overline = (value, mark)
        self.rows = tuple(tuple(row) for row in rows)
        self.overline = overline
        self._marks_at = {v: frozenset(s) for v, s in marks_at.items()}
        self._counts = counts
        self._memo: dict = {}

    # -- basic views ---------------------------------------------------

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def N(self, i: int) -> int:
        """Size of row i (zero for rows beyond the marking)."""
        if i < 1:
            raise ValueError(f"row index must be >= 1, got {i}")
        return len(self.rows[i - 1]) if i <= len(self.rows) else 0

    def row_values(self, i: int) -> tuple[int, ...]:
        if i < 1:
            raise ValueError(f"row index must be >= 1, got {i}")
        return self.rows[i - 1] if i <= len(self.rows) else ()

    def row(self, i: int, j: int):
        """j-th entry of row i, with sentinels at j = 0 and j = N_i + 1."""
        n = self.N(i)
        if not 0 <= j <= n + 1:
            raise IndexError(f"row {i} has {n} entries; j={j} out of [0, {n + 1}]")
        if j == 0:
            return POS_INF
        if j == n + 1:
            return NEG_INF
        return self.rows[i - 1][j - 1]

    def marks_of(self, value) -> frozenset:
        return self._marks_at.get(value, _EMPTY)

    def max_mark(self, value) -> int:
        """Largest mark carried by `value`, or 0 when absent."""
        return max(self._marks_at.get(value, _EMPTY), default=0)

    def count(self, value) -> int:
        return self._counts.get(value, 0)

    def has_part(self, value) -> bool:
        return value in self._counts

    def has(self, value, mark) -> bool:
        return mark in self._marks_at.get(value, _EMPTY)

    # -- identity ------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, MarkedPartition):
            return NotImplemented
        ov_s = self.overline[0] if self.overline else None
        ov_o = other.overline[0] if other.overline else None
        return self.parts == other.parts and ov_s == ov_o

    def __hash__(self) -> int:
        return hash((self.parts, self.overline[0] if self.overline else None))

    def __repr__(self) -> str:
        body = ",".join(
            (f"~{v}" if self.overline and (v, m) == self.overline else str(v))
            for v, m, _ in self.entries
        )
        return f"MarkedPartition({body})"

    # -- surgery -------------------------------------------------------

    def replace(self, removals, additions) -> "MarkedPartition":
        """Remove and insert parts in one batch, then re-mark canonically.

        removals: iterable of (value, mark_or_None, overlined); a None mark
        matches any copy of the value with the given overline state.
        additions: iterable of (value, overlined).
        """
        return self._replace(removals, additions)[0]

    def replace_reporting(self, removals, additions):
        """Like :meth:`replace` but also reports the mark each addition got."""
        return self._replace(removals, additions)

    def _replace(self, removals, additions):
        work = [[v, m, over, None] for v, m, over in self.entries]
        for value, mark, over in removals:
            for slot in work:
                if slot[0] == value and slot[2] == over and (mark is None or slot[1] == mark):
                    work.remove(slot)
                    break
            else:
                who = f"{'overlined ' if over else ''}{mark if mark is not None else 'any'}-marked {value}"
                raise MissingEntryError(f"no {who} in {self!r}", partition=self)
        tagged = [(v, over, None) for v, _, over, _ in work]
        for idx, (value, over) in enumerate(additions):
            tagged.append((int(value), bool(over), idx))
        values = [(v, over) for v, over, _ in tagged]
        _check_overlines(values)
        assigned = _assign_tagged(tagged)
        new = MarkedPartition([(v, m, over) for v, m, over, _ in assigned])
        report = {tag: m for v, m, over, tag in assigned if tag is not None}
        return new, tuple(report[i] for i in range(len(report)))


def _assign_tagged(entries):
    """`_assign` variant that threads an opaque tag through the sort."""
    marks_at: dict[int, set] = {}
    out = []
    for value, over, tag in sorted(entries, key=lambda e: (e[0], e[1])):
        used = _conflict_marks(marks_at, value)
        mark = 2 if over else 1
        while mark in used:
            mark += 1
        marks_at.setdefault(value, set()).add(mark)
        out.append((value, mark, over, tag))
    return out


def _check_overlines(values: Sequence[tuple[int, bool]]) -> None:
    overlined = [v for v, over in values if over]
    if not overlined:
        return
    if len(overlined) > 1:
        raise InvalidSpecialPartition(f"more than one overlined part: {sorted(overlined)}")
    v = overlined[0]
    odds = [u for u, _ in values if u % 2 == 1]
    if v % 2 == 0:
        raise InvalidSpecialPartition(f"overlined part {v} is even")
    if v != max(odds):
        raise InvalidSpecialPartition(f"overlined part {v} is not the largest odd part {max(odds)}")


def _normalize(parts: Iterable[int]) -> tuple[int, ...]:
    out = tuple(sorted((int(v) for v in parts), reverse=True))
    if any(v < 1 for v in out):
        raise ValueError(f"parts must be positive integers, got {out}")
    return out


@lru_cache(maxsize=None)
def _gg_mark_cached(parts: tuple[int, ...]) -> MarkedPartition:
    return MarkedPartition(_assign([(v, False) for v in parts]))


def gg_mark(parts: Iterable[int]) -> MarkedPartition:
    """Canonical marking of an ordinary partition."""
    return _gg_mark_cached(_normalize(parts))


def gg_mark_special(parts: Iterable[int], overline: Optional[int] = None) -> MarkedPartition:
    """Canonical marking of a special partition.

    `overline`, when given, names the part value carrying the overline; it
    must be the largest odd value present, and exactly one copy of it is
    overlined.
    """
    norm = _normalize(parts)
    if overline is None:
        return _gg_mark_cached(norm)
    overline = int(overline)
    if overline not in norm:
        raise InvalidSpecialPartition(f"overlined value {overline} is not a part of {norm}")
    entries = [(v, False) for v in norm]
    entries.remove((overline, False))
    entries.append((overline, True))
    _check_overlines(entries)
    return MarkedPartition(_assign(entries))


def replace_part(
    mp: MarkedPartition,
    value: int,
    mark: int,
    new_value: int,
    *,
    new_overline: bool = False,
    target_overlined: bool = False,
):
    """Swap one (value, mark) occurrence for `new_value` and re-mark.

    Returns (marked partition, mark received by the inserted copy).
    """
    new, marks = mp.replace_reporting(
        [(value, mark, target_overlined)], [(new_value, new_overline)]
    )
    return new, marks[0]


# -- presentation ------------------------------------------------------


def render_grid(mp: MarkedPartition) -> str:
    """Text array of the marking: one column per distinct value (ascending),
    one line per mark with the highest mark on top.  Overlined copies are
    prefixed with '~'."""
    if not mp.parts:
        return ""
    values = sorted(set(mp.parts))
    col = {v: i for i, v in enumerate(values)}
    grid = [["" for _ in values] for _ in range(mp.n_rows)]
    for v, m, over in mp.entries:
        grid[m - 1][col[v]] = f"~{v}" if over else str(v)
    widths = [max(len(grid[r][c]) for r in range(mp.n_rows)) for c in range(len(values))]
    lines = []
    for r in range(mp.n_rows - 1, -1, -1):
        line = "  ".join(cell.rjust(w) for cell, w in zip(grid[r], widths))
        lines.append(line.rstrip())
    return "\n".join(lines)


def marked_to_dict(mp: MarkedPartition) -> dict:
    """JSON-ready form: {"rows": {"1": [...], ...}, "overline": {...} | null}."""
    rows = {str(i): list(mp.row_values(i)) for i in range(1, mp.n_rows + 1)}
    over = None
    if mp.overline is not None:
        over = {"value": mp.overline[0], "mark": mp.overline[1]}
    return {"rows": rows, "overline": over}
