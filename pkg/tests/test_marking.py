import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ggpart import (
    NEG_INF,
    POS_INF,
    InvalidSpecialPartition,
    MissingEntryError,
    gg_mark,
    gg_mark_special,
    marked_to_dict,
    render_grid,
    replace_part,
)
from ggpart.fixtures import fixture_marked, fixture_overline, fixture_rows
from ggpart.membership import all_partitions

PI1_PARTS = (38, 38, 36, 34, 32, 30, 26, 26, 22, 22, 22, 18, 16, 16, 14, 12, 12, 10, 9, 6, 6, 6, 2, 1)

partitions_st = st.lists(st.integers(1, 14), max_size=8).map(
    lambda vs: tuple(sorted(vs, reverse=True))
)


def test_running_example_rows():
    mp = gg_mark(PI1_PARTS)
    assert mp.row_values(1) == (38, 34, 30, 26, 22, 16, 12, 9, 6, 1)
    assert mp.row_values(2) == (36, 32, 26, 22, 18, 14, 10, 6, 2)
    assert mp.row_values(3) == (38, 22, 16, 12, 6)
    assert (mp.N(1), mp.N(2), mp.N(3)) == (10, 9, 5)
    assert mp.N(4) == 0


def test_empty_partition():
    mp = gg_mark(())
    assert mp.parts == () and mp.n_rows == 0 and mp.N(1) == 0
    assert mp.weight == 0 and mp.length == 0


@pytest.mark.parametrize(
    "parts, expected",
    [
        ((5, 5), {(5, 1), (5, 2)}),
        ((6, 4), {(4, 1), (6, 2)}),
        ((7, 4), {(4, 1), (7, 1)}),
    ],
)
def test_small_markings(parts, expected):
    mp = gg_mark(parts)
    assert {(v, m) for v, m, _ in mp.entries} == expected


def _assert_canonical(mp):
    """Replay the greedy rule as a pure validator: every mark must be
    feasible and minimal given the parts processed before it."""
    marks_at: dict[int, set] = {}
    order = sorted(mp.entries, key=lambda e: (e[0], e[2], e[1]))
    for value, mark, over in order:
        used = set(marks_at.get(value, set())) | marks_at.get(value - 1, set())
        if value % 2 == 0:
            used |= marks_at.get(value - 2, set())
        assert mark not in used, (mp.parts, value, mark)
        floor = 2 if over else 1
        for lower in range(floor, mark):
            assert lower in used, (mp.parts, value, mark, lower)
        marks_at.setdefault(value, set()).add(mark)


def test_greedy_rule_exhaustive():
    for n in range(0, 13):
        for p in all_partitions(n):
            _assert_canonical(gg_mark(p))


def test_canonicality_idempotent_exhaustive():
    for n in range(0, 21):
        for p in all_partitions(n):
            mp = gg_mark(p)
            assert gg_mark(mp.parts).rows == mp.rows


def test_row_sizes_monotone_exhaustive():
    for n in range(0, 21):
        for p in all_partitions(n):
            mp = gg_mark(p)
            sizes = [mp.N(i) for i in range(1, mp.n_rows + 1)]
            assert sizes == sorted(sizes, reverse=True), p


def test_mark_distinctness_restatement():
    for n in range(0, 17):
        for p in all_partitions(n):
            mp = gg_mark(p)
            for v, m, _ in mp.entries:
                near = mp.marks_of(v - 1) | (mp.marks_of(v - 2) if v % 2 == 0 else frozenset())
                assert m not in near
                assert len(mp.marks_of(v)) == mp.count(v)


# -- special markings ---------------------------------------------------


def test_special_reduces_to_ordinary():
    for n in range(0, 17):
        for p in all_partitions(n):
            assert gg_mark_special(p, None).rows == gg_mark(p).rows


def test_special_marking_forces_mark_two():
    mp = gg_mark_special((5, 5, 4), 5)
    assert mp.overline is not None and mp.overline[0] == 5 and mp.overline[1] >= 2
    assert {(v, m) for v, m, _ in mp.entries} == {(4, 1), (5, 2), (5, 3)}


def test_special_marking_exhaustive():
    for n in range(0, 13):
        for p in all_partitions(n):
            odds = [v for v in p if v % 2]
            if not odds:
                continue
            mp = gg_mark_special(p, max(odds))
            _assert_canonical(mp)
            assert mp.overline[1] >= 2


def test_special_trace_fixtures():
    for name in ("pi1_step2", "pi1_step1"):
        mp = fixture_marked(name)
        assert {i: mp.row_values(i) for i in (1, 2, 3)} == fixture_rows(name)
        assert mp.overline[0] == fixture_overline(name)
        assert mp.overline[1] == 2


@pytest.mark.parametrize("parts, overline", [((6, 4), 6), ((5, 3), 3), ((4, 2), 5)])
def test_invalid_overlines(parts, overline):
    with pytest.raises((InvalidSpecialPartition, ValueError)):
        gg_mark_special(parts, overline)


# -- row access ----------------------------------------------------------


def test_row_sentinels_and_values():
    mp = gg_mark(PI1_PARTS)
    assert mp.row(2, 5) == 18
    assert mp.row(1, 0) is POS_INF
    assert mp.row(3, 6) is NEG_INF
    assert mp.row(7, 0) is POS_INF and mp.row(7, 1) is NEG_INF
    with pytest.raises(IndexError):
        mp.row(3, 7)
    with pytest.raises(ValueError):
        mp.row(0, 0)


# -- surgery ---------------------------------------------------------------


def test_replace_part_worked_step():
    mp = gg_mark(PI1_PARTS)
    out, got = replace_part(mp, 22, 3, 23)
    want = fixture_marked("pi1_step4")
    assert out.rows == want.rows
    assert got == 3


def test_replace_identity_surgery():
    for n in range(0, 15):
        for p in all_partitions(n):
            if not p:
                continue
            mp = gg_mark(p)
            v, m, _ = mp.entries[0]
            out, _ = replace_part(mp, v, m, v)
            assert out.rows == mp.rows


def test_replace_missing_entry():
    mp = gg_mark((4, 2))
    with pytest.raises(MissingEntryError):
        replace_part(mp, 4, 3, 5)


@given(partitions_st, st.integers(0, 7), st.integers(1, 15))
@settings(max_examples=200)
def test_replace_round_trip_multiset(parts, pick, new_value):
    mp = gg_mark(parts)
    if not mp.entries:
        return
    v, m, _ = mp.entries[pick % len(mp.entries)]
    out, got = replace_part(mp, v, m, new_value)
    removed = list(mp.parts)
    removed.remove(v)
    removed.append(new_value)
    assert sorted(out.parts) == sorted(removed)
    assert out.has(new_value, got)
    back, _ = replace_part(out, new_value, got, v)
    assert sorted(back.parts) == sorted(mp.parts)
    assert back.rows == mp.rows


@given(partitions_st)
@settings(max_examples=200)
def test_marking_invariants_random(parts):
    mp = gg_mark(parts)
    _assert_canonical(mp)
    sizes = [mp.N(i) for i in range(1, mp.n_rows + 1)]
    assert sizes == sorted(sizes, reverse=True)


# -- rendering and serialization -----------------------------------------


PI1_GRID = (
    "      6         12      16      22                      38\n"
    "   2  6     10      14      18  22  26      32      36\n"
    "1     6  9      12      16      22  26  30      34      38"
)


def test_render_grid_golden():
    assert render_grid(gg_mark(PI1_PARTS)) == PI1_GRID
    assert render_grid(gg_mark(())) == ""
    assert render_grid(fixture_marked("m6")) == (
        "      4     8\n   2     6     10\n1     4     8"
    )


def test_render_grid_overline():
    grid = render_grid(fixture_marked("pi1_step2"))
    assert "~33" in grid and "~" not in grid.replace("~33", "")


def test_json_round_trip():
    for name in ("pi1", "pi2", "m7", "pi1_step1"):
        mp = fixture_marked(name)
        blob = json.dumps(marked_to_dict(mp), sort_keys=True)
        data = json.loads(blob)
        parts = sorted((v for row in data["rows"].values() for v in row), reverse=True)
        over = data["overline"]["value"] if data["overline"] else None
        again = gg_mark_special(parts, over)
        assert json.dumps(marked_to_dict(again), sort_keys=True) == blob
