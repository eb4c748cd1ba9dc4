"""Starting types, cluster indexes, the three 12-way family classifications,
and the insertion/division indexes they induce.

Everything here is a pure function of a marked partition (plus the family
parameters).  Membership predicates are evaluated definitionally, clause by
clause; stronger structural facts that follow from the definitions live in
the test suite, never in the implementation, so each one stays falsifiable.
The only caches are the per-partition starting profile and cluster runs,
which several procedures share.

Starting-type conventions: types are the strings "s-1", "s0", "s1", "s2",
"s3" (plus "untyped", which is propagated, never guessed over); group types
for the reduction and insertion procedures use the labels "A1", "A2", "A3",
"B", "C".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import debug
from .errors import ClassificationError, MembershipError, UniquenessError
from .extint import NEG_INF, POS_INF
from .marking import MarkedPartition
from .membership import is_in_C

S_MINUS1, S0, S1, S2, S3, UNTYPED = "s-1", "s0", "s1", "s2", "s3", "untyped"


@dataclass(frozen=True)
class StartingProfile:
    """Per-2-marked-part starting data.

    threshold: largest row-2 index with no odd part at or above it.
    types[i-1] / anchors[i-1] describe the i-th 2-marked part; anchors hold
    the 1-marked companion value each typed case records.
    """

    threshold: int
    types: tuple[str, ...]
    anchors: tuple[Optional[int], ...]

    def type_at(self, i: int) -> str:
        return self.types[i - 1]

    def anchor_at(self, i: int) -> Optional[int]:
        return self.anchors[i - 1]


@dataclass(frozen=True)
class SubsetLabel:
    family: str  # "lt" | "sim" | "eq"
    j: int
    p: int
    t: int


@dataclass(frozen=True)
class GroupTypes:
    """Partition of row-2 indexes 1..l into typed contiguous groups."""

    kind: str  # "reduction" | "insertion"
    groups: tuple[tuple[int, int, str], ...]  # (lo, hi, label), lo <= hi

    def group_of(self, i: int) -> tuple[int, int, str]:
        for g in self.groups:
            if g[0] <= i <= g[1]:
                return g
        raise KeyError(f"index {i} not covered by {self.kind} groups {self.groups}")

    def label_of(self, i: int) -> str:
        return self.group_of(i)[2]

    def labels(self) -> dict[int, str]:
        return {i: lab for lo, hi, lab in self.groups for i in range(lo, hi + 1)}


def _r2(mp: MarkedPartition, j: int):
    """Total row-2 lookup: +inf at 0, -inf past the end."""
    row = mp.row_values(2)
    if j <= 0:
        return POS_INF
    if j > len(row):
        return NEG_INF
    return row[j - 1]


def _has1(mp: MarkedPartition, value: int) -> bool:
    return 1 in mp.marks_of(value)


def starting_profile(mp: MarkedPartition) -> StartingProfile:
    """Assign starting types to the 2-marked parts, largest first.

    Indexes past the threshold get "s-1"; each remaining index is matched
    against the four cases in order (first match wins; debug mode asserts
    the match is unique).
    """
    cached = mp._memo.get("profile")
    if cached is not None:
        return cached
    row = mp.row_values(2)
    n2 = len(row)
    odds = [v for v in mp.parts if v % 2 == 1]
    largest_odd = max(odds, default=None)
    threshold = 0
    for i in range(1, n2 + 1):
        if largest_odd is not None and largest_odd >= row[i - 1]:
            break
        threshold = i
    types: list[str] = [S_MINUS1] * n2
    anchors: list[Optional[int]] = [None] * n2
    prev_anchor: Optional[int] = None
    for b in range(1, threshold + 1):
        v = row[b - 1]
        if b == 1:
            low_ok = not mp.has_part(v + 2)
        else:
            low_ok = (not _has1(mp, v + 2)) or prev_anchor == v + 2
        cases = (
            (_has1(mp, v - 1) and low_ok, S0, v - 1),
            (_has1(mp, v - 2) and low_ok, S1, v - 2),
            (_has1(mp, v + 2) and (b == 1 or prev_anchor != v + 2), S2, v + 2),
            (_has1(mp, v), S3, v),
        )
        hits = [(ty, a) for ok, ty, a in cases if ok]
        if debug.enabled():
            assert len(hits) <= 1, f"starting-type cases overlap at index {b} of {mp.parts}"
        if hits:
            types[b - 1], anchors[b - 1] = hits[0]
        else:
            types[b - 1], anchors[b - 1] = UNTYPED, None
        prev_anchor = anchors[b - 1]
    prof = StartingProfile(threshold, tuple(types), tuple(anchors))
    mp._memo["profile"] = prof
    return prof


def cluster_indexes(mp: MarkedPartition, p: int, t: Optional[int] = None) -> tuple[int, ...]:
    """Starting cluster indexes p_1 > p_2 > ... > 1 below p.

    Each cluster is a maximal run of 2-marked parts stepping by 4 with a
    constant starting type; `t` only documents the family parameter the
    caller asserted membership for.
    """
    if p < 1:
        raise ValueError(f"cluster indexes need p >= 1, got {p}")
    cached = mp._memo.setdefault("clusters", {})
    if p in cached:
        return cached[p]
    prof = starting_profile(mp)
    row = mp.row_values(2)
    out: list[int] = []
    b = p + 1
    while b > 1:
        i = b - 1
        while (
            i - 1 >= 1
            and row[i - 2] == row[i - 1] + 4
            and prof.type_at(i - 1) == prof.type_at(i)
            and prof.type_at(i) != UNTYPED
        ):
            i -= 1
        out.append(i)
        b = i
    result = tuple(out)
    cached[p] = result
    return result


# -- family membership -------------------------------------------------


def _check_kr(k: int, r: int) -> None:
    if not (k >= r >= 3):
        raise ValueError(f"classification requires k >= r >= 3, got k={k} r={r}")


def _member_lt(mp: MarkedPartition, k: int, r: int, p: int, t: int) -> bool:
    if p < 0 or t < 0:
        return False
    if not is_in_C(mp, k, r):
        return False
    if any(v % 2 == 1 and v >= 2 * t + 1 for v in mp.parts):
        return False
    if not (_r2(mp, p + 1) < 2 * t + 1 < _r2(mp, p)):
        return False
    prof = starting_profile(mp)
    if _r2(mp, p) == 2 * t + 2 and prof.type_at(p) not in (S2, S3):
        return False
    if _r2(mp, p + 1) == 2 * t and prof.type_at(p + 1) not in (S0, S1):
        return False
    return True


def classify_lt(mp: MarkedPartition, k: int, r: int, p: int, t: int) -> Optional[SubsetLabel]:
    """Subset number within the below-threshold family, or None if not a member."""
    _check_kr(k, r)
    if not _member_lt(mp, k, r, p, t):
        return None
    prof = starting_profile(mp)
    v = _r2(mp, p)
    ty = prof.type_at(p) if 1 <= p <= mp.N(2) else None
    hits = []

    if v >= 2 * t + 6 and (
        v != 2 * t + 6 or (ty in (S2, S3) and mp.max_mark(2 * t + 6) == 2)
    ):
        hits.append(1)
    if v == 2 * t + 6 and not mp.has_part(2 * t + 2) and (
        ty not in (S2, S3) or mp.max_mark(2 * t + 6) > 2
    ):
        hits.append(2)
    if v == 2 * t + 6 and ty == S3 and mp.has_part(2 * t + 2) and mp.max_mark(2 * t + 6) > 2:
        hits.append(3)
    if v == 2 * t + 4 and ty == S3 and mp.max_mark(2 * t + 4) == 2:
        hits.append(4)
    if v == 2 * t + 4 and ty == S3 and mp.max_mark(2 * t + 4) > 2:
        hits.append(5)
    if v == 2 * t + 4 and ty == S1:
        hits.append(6)
    if v == 2 * t + 4 and ty == S2:
        hits.append(7)
    if v == 2 * t + 2 and ty == S2:
        hits.append(8)
    if v == 2 * t + 2 and ty == S3:
        p1 = cluster_indexes(mp, p)[0]
        w = _r2(mp, p1)
        if not mp.has_part(w + 4):
            hits.append(9)
        if mp.has_part(w + 4) and not mp.has_part(w + 6):
            hits.append(10)
        if _r2(mp, p1 - 1) == w + 6 and p1 - 1 >= 1:
            ty1 = prof.type_at(p1 - 1)
            if ty1 == S1:
                hits.append(11)
            if ty1 == S2:
                hits.append(12)
    if len(hits) != 1:
        raise ClassificationError(
            f"lt member {mp.parts} at (p,t)=({p},{t}) matched subsets {hits}"
        )
    return SubsetLabel("lt", hits[0], p, t)


def insertion_index(mp: MarkedPartition, k: int, r: int, p: int, t: int) -> int:
    """Even value at which the new odd part threads in."""
    label = classify_lt(mp, k, r, p, t)
    if label is None:
        raise MembershipError(f"{mp.parts} is not in the lt family at (p,t)=({p},{t})")
    j = label.j
    if j <= 5:
        return 2 * t + 2
    ps = cluster_indexes(mp, p)
    p1 = ps[0]
    if j == 6:
        return _r2(mp, p1)
    if 7 <= j <= 9:
        return _r2(mp, p1) + 2
    if j == 10:
        return _r2(mp, p1) + 4
    p2 = ps[1]
    if j == 11:
        return _r2(mp, p2)
    return _r2(mp, p2) + 2


def insertion_threshold(mp: MarkedPartition, k: int, r: int, p: int, t: int) -> int:
    """Largest row-2 index whose part exceeds the insertion index."""
    idx = insertion_index(mp, k, r, p, t)
    row = mp.row_values(2)
    l = 0
    while l + 1 <= len(row) and row[l] > idx:
        l += 1
    return l


def _member_eq(mp: MarkedPartition, k: int, r: int, p: int, t: int) -> bool:
    if p < 0 or t < 0:
        return False
    if not is_in_C(mp, k, r):
        return False
    odds = [v for v in mp.parts if v % 2 == 1]
    if not odds or max(odds) != 2 * t + 1:
        return False
    if min(mp.marks_of(2 * t + 1)) > 2:
        return False
    if not (_r2(mp, p) >= 2 * t + 2 and _r2(mp, p + 1) <= 2 * t + 2):
        return False
    prof = starting_profile(mp)
    two_marked = mp.has(2 * t + 2, 2)
    if two_marked:
        q = mp.row_values(2).index(2 * t + 2) + 1
        ty = prof.type_at(q)
        if ty == S0:
            if _r2(mp, p + 1) != 2 * t + 2:
                return False
            base = _r2(mp, p + 1)
            if not any(
                _r2(mp, i) == base + 4 * (p - i + 1) and mp.count(_r2(mp, i)) == 1
                for i in range(1, p + 2)
            ):
                return False
        elif ty == S2:
            if _r2(mp, p) != 2 * t + 2:
                return False
    if mp.has_part(2 * t + 2) and not two_marked:
        if _r2(mp, p) != 2 * t + 4 or prof.type_at(p) != S3:
            return False
        base = _r2(mp, p)
        if not any(
            _r2(mp, i) == base + 4 * (p - i) and not mp.has_part(_r2(mp, i) + 2)
            for i in range(1, p + 1)
        ):
            return False
    return True


def classify_eq(mp: MarkedPartition, k: int, r: int, p: int, t: int) -> Optional[SubsetLabel]:
    """Subset number within the equality family, or None if not a member."""
    _check_kr(k, r)
    if not _member_eq(mp, k, r, p, t):
        return None
    prof = starting_profile(mp)
    v = _r2(mp, p)
    vp1 = _r2(mp, p + 1)
    ty = prof.type_at(p) if 1 <= p <= mp.N(2) else None
    odd_marks = mp.marks_of(2 * t + 1)

    def chain_p(i: int) -> bool:
        return _r2(mp, i) == v + 4 * (p - i)

    chain = [i for i in range(1, p + 1) if chain_p(i)] if p >= 1 else []
    hits = []

    if v >= 2 * t + 8:
        hits.append(1)
    if (
        v == 2 * t + 6
        and ty in (S2, S3)
        and vp1 < 2 * t + 2
        and (ty != S2 or all(mp.count(_r2(mp, i) + 2) >= 2 for i in chain))
    ):
        hits.append(2)
    if (
        v == 2 * t + 6
        and ty == S3
        and vp1 == 2 * t + 2
        and all(mp.has_part(_r2(mp, i) + 2) for i in chain)
    ):
        hits.append(3)
    if (
        v == 2 * t + 6
        and ty in (S1, S2)
        and vp1 < 2 * t + 2
        and (ty != S2 or any(mp.count(_r2(mp, i) + 2) == 1 for i in chain))
    ):
        hits.append(4)
    if v == 2 * t + 4 and ty == S3 and all(mp.has_part(_r2(mp, i) + 2) for i in chain):
        hits.append(5)
    if (
        v == 2 * t + 4
        and ty == S3
        and odd_marks == frozenset({1})
        and any(not mp.has_part(_r2(mp, i) + 2) for i in chain)
    ):
        hits.append(6)
    if v == 2 * t + 6 and vp1 == 2 * t + 2:
        once = [i for i in chain if mp.count(_r2(mp, i)) == 1]
        s10 = min(once) if once else None
        # the index-(p+1) chain extends the index-p chain by one step
        if (
            s10 is None
            and mp.count(2 * t + 2) == 1
            and any(not mp.has_part(_r2(mp, i) + 2) for i in chain)
        ):
            hits.append(7)
        if s10 is not None and all(
            prof.type_at(i) == S3 and mp.has_part(_r2(mp, i) + 2)
            for i in chain
            if i < s10
        ):
            hits.append(10)
        if s10 is not None and any(not mp.has_part(_r2(mp, i) + 2) for i in chain if i < s10):
            hits.append(12)
    if (
        v == 2 * t + 4
        and ty == S3
        and odd_marks == frozenset({2})
        and any(not mp.has_part(_r2(mp, i) + 2) for i in chain)
    ):
        hits.append(8)
    if v == 2 * t + 2:
        s9 = min(chain)  # i = p always qualifies
        side = [i for i in range(1, s9) if _r2(mp, i) == v + 4 * (p - i) + 2]
        if all(prof.type_at(i) == S3 and mp.has_part(_r2(mp, i) + 2) for i in side):
            hits.append(9)
        if any(
            prof.type_at(i) == S3 and not mp.has_part(_r2(mp, i) + 2) for i in side
        ):
            hits.append(11)
    if len(hits) != 1:
        raise ClassificationError(
            f"eq member {mp.parts} at (p,t)=({p},{t}) matched subsets {hits}"
        )
    return SubsetLabel("eq", hits[0], p, t)


def division_index(mp: MarkedPartition, k: int, r: int, p: int, t: int) -> int:
    """Even value at which the largest odd part threads out."""
    label = classify_eq(mp, k, r, p, t)
    if label is None:
        raise MembershipError(f"{mp.parts} is not in the eq family at (p,t)=({p},{t})")
    j = label.j
    if j <= 5:
        return 2 * t + 2
    v = _r2(mp, p)

    def chain_value(i: int) -> bool:
        return _r2(mp, i) == v + 4 * (p - i)

    if j in (6, 7, 8, 12):
        for s in range(1, p + 1):
            if chain_value(s) and not mp.has_part(_r2(mp, s) + 2):
                return _r2(mp, s)
    elif j == 10:
        for s in range(1, p + 1):
            if chain_value(s) and mp.count(_r2(mp, s)) == 1:
                return _r2(mp, s)
    elif j == 9:
        for s in range(1, p + 1):
            if chain_value(s):
                return _r2(mp, s) + 2
    else:  # j == 11
        for s in range(1, p + 1):
            if _r2(mp, s) == v + 4 * (p - s) + 2 and not mp.has_part(_r2(mp, s) + 2):
                return _r2(mp, s)
    raise ClassificationError(
        f"division index scan found no anchor for subset {j} of {mp.parts} at ({p},{t})"
    )


def division_threshold(mp: MarkedPartition, k: int, r: int, p: int, t: int) -> int:
    """Largest row-2 index whose part exceeds the division index."""
    idx = division_index(mp, k, r, p, t)
    row = mp.row_values(2)
    l = 0
    while l + 1 <= len(row) and row[l] > idx:
        l += 1
    return l


# -- group typings -----------------------------------------------------


def _reduction_label(mp, prof, row, s, e) -> Optional[str]:
    span = range(s, e + 1)
    tys = [prof.type_at(i) for i in span]
    if all(ty == S3 for ty in tys):
        if all(mp.has_part(row[i - 1] + 2) for i in span):
            return "A1"
        if not mp.has_part(row[s - 1] + 2):
            return "A3" if _has1(mp, row[e - 1] - 4) else "A2"
        return None
    if all(ty == S2 for ty in tys) and all(mp.count(row[i - 1] + 2) >= 2 for i in span):
        return "B"
    if all(ty in (S1, S2) for ty in tys) and mp.count(row[s - 1] + 2) <= 1:
        return "C"
    return None


def reduction_types(mp: MarkedPartition, k: int, r: int, p: int, t: int) -> GroupTypes:
    """Group the indexes above the insertion threshold, smallest index first."""
    l = insertion_threshold(mp, k, r, p, t)
    prof = starting_profile(mp)
    row = mp.row_values(2)
    groups: list[tuple[int, int, str]] = []
    s = 1
    while s <= l:
        e_max = s
        while e_max + 1 <= l and row[e_max] == row[e_max - 1] - 4:
            e_max += 1
        for e in range(e_max, s - 1, -1):
            lab = _reduction_label(mp, prof, row, s, e)
            if lab is not None:
                groups.append((s, e, lab))
                s = e + 1
                break
        else:
            raise ClassificationError(
                f"untyped reduction group starting at index {s} of {mp.parts}"
            )
    return GroupTypes("reduction", tuple(groups))


def _insertion_label(mp, prof, row, s, e) -> Optional[str]:
    span = range(s, e + 1)
    tys = [prof.type_at(i) for i in span]
    bottom = row[e - 1]
    if all(ty == S3 for ty in tys):
        if all(mp.max_mark(row[i - 1]) > 2 for i in span):
            return "A1"
        if mp.count(bottom) == 2:
            return "C"
        return None
    if all(ty == S1 for ty in tys):
        return "A2"
    if all(ty == S2 for ty in tys):
        if mp.count(bottom) == 1:
            return "A3"
        if all(mp.count(row[i - 1]) >= 2 for i in span):
            return "B"
    return None


def insertion_types(mp: MarkedPartition, k: int, r: int, p: int, t: int) -> GroupTypes:
    """Group the indexes above the insertion threshold, largest index first."""
    l = insertion_threshold(mp, k, r, p, t)
    prof = starting_profile(mp)
    row = mp.row_values(2)
    groups: list[tuple[int, int, str]] = []
    e = l
    while e >= 1:
        s_min = e
        while s_min - 1 >= 1 and row[s_min - 2] == row[s_min - 1] + 4:
            s_min -= 1
        for s in range(s_min, e + 1):
            lab = _insertion_label(mp, prof, row, s, e)
            if lab is not None:
                groups.append((s, e, lab))
                e = s - 1
                break
        else:
            raise ClassificationError(
                f"untyped insertion group ending at index {e} of {mp.parts}"
            )
    return GroupTypes("insertion", tuple(groups))


def classify_sim(mp: MarkedPartition, k: int, r: int, p: int, t: int) -> Optional[SubsetLabel]:
    """Subset number within the tilde family, or None if not a member.

    The first five subsets key on the reduction type of the part at index p;
    the rest refine the lt subsets by the reduction type at the threshold.
    """
    _check_kr(k, r)
    base = classify_lt(mp, k, r, p, t)
    if base is None:
        return None
    v = _r2(mp, p)
    l = insertion_threshold(mp, k, r, p, t)
    red = reduction_types(mp, k, r, p, t) if l >= 1 else GroupTypes("reduction", ())

    def red_label(i: int) -> Optional[str]:
        if 1 <= i <= l:
            return red.label_of(i)
        return None

    hits = []
    if v >= 2 * t + 8:
        hits.append(1)
    if v == 2 * t + 6 and red_label(p) in ("A1", "A2", "B") and not mp.has_part(2 * t + 2):
        hits.append(2)
    if v == 2 * t + 6 and red_label(p) == "A1" and mp.has_part(2 * t + 2):
        hits.append(3)
    if v == 2 * t + 6 and red_label(p) == "C" and not mp.has_part(2 * t + 2):
        hits.append(4)
    if v == 2 * t + 4 and red_label(p) == "A1":
        hits.append(5)
    if base.j >= 6:
        idx = insertion_index(mp, k, r, p, t)
        if _r2(mp, l) != idx + 4 or red_label(l) == "A1":
            hits.append(base.j)
    if len(hits) > 1:
        raise ClassificationError(
            f"sim candidate {mp.parts} at (p,t)=({p},{t}) matched subsets {hits}"
        )
    if not hits:
        return None
    return SubsetLabel("sim", hits[0], p, t)


# -- decompositions ----------------------------------------------------


def find_pt_lt(mp: MarkedPartition, k: int, r: int, m: int) -> Optional[tuple[int, int]]:
    """Unique (p, t) with p + t = m placing mp in the lt family, if any."""
    _check_kr(k, r)
    hits = [(p, m - p) for p in range(0, m + 1) if _member_lt(mp, k, r, p, m - p)]
    if len(hits) > 1:
        raise UniquenessError(f"{mp.parts} sits in the lt family at {hits} for m={m}")
    return hits[0] if hits else None


def find_pt_eq(mp: MarkedPartition, k: int, r: int, m: int) -> Optional[tuple[int, int]]:
    """Unique (p, t) with p + t = m placing mp in the eq family, if any."""
    _check_kr(k, r)
    hits = [(p, m - p) for p in range(0, m + 1) if _member_eq(mp, k, r, p, m - p)]
    if len(hits) > 1:
        raise UniquenessError(f"{mp.parts} sits in the eq family at {hits} for m={m}")
    return hits[0] if hits else None


def find_m_eq33(mp: MarkedPartition) -> Optional[int]:
    """The unique m placing a k=r=3 member with odd parts in the eq family.

    Constructive: t comes from the largest odd part, l from the row-2 walk,
    and the boundary case (part 2t+2 at the walk's end, starting type s0)
    shifts p down by one.  Returns None when no odd part exists.
    """
    odds = [v for v in mp.parts if v % 2 == 1]
    if not odds:
        return None
    t = (max(odds) - 1) // 2
    row = mp.row_values(2)
    l = 0
    while l + 1 <= len(row) and row[l] > 2 * t + 1:
        l += 1
    prof = starting_profile(mp)
    if l >= 1 and row[l - 1] == 2 * t + 2 and prof.type_at(l) == S0:
        p = l - 1
    else:
        p = l
    m = p + t
    if debug.enabled():
        assert _member_eq(mp, 3, 3, p, t), f"constructed (p,t)=({p},{t}) rejected for {mp.parts}"
    return m
