"""The weight-shifting maps between the three partition families.

`dilate`/`reduce` shift weight by 2l (l = number of row-2 parts above the
insertion index) without touching the length; `insert_odd`/`separate_odd`
add/remove the odd part 2t+1 and shuffle a cluster of even parts by 2.  Their
composites `phi_pt`/`psi_pt` realize the one-piece bijection, `phi_m`/`psi_m`
resolve the unique (p, t) split of m, and `phi_global`/`psi_global` chain the
m-level maps to absorb a whole partition of distinct odd parts.

Every step addresses parts by (value, mark) in the current canonical marking
and re-marks after each batch of replacements; a missing target aborts with
the trace attached.  Weight/length deltas are checked after every map, so a
construction bug cannot produce a plausible-looking wrong output.
"""

from __future__ import annotations

from dataclasses import dataclass
from .classify import (
    classify_eq,
    classify_lt,
    classify_sim,
    cluster_indexes,
    division_index,
    division_threshold,
    find_m_eq33,
    find_pt_eq,
    find_pt_lt,
    insertion_index,
    insertion_threshold,
    insertion_types,
    reduction_types,
)
from .errors import GGError, MembershipError, MissingEntryError
from .marking import MarkedPartition, gg_mark
from .membership import is_in_C


@dataclass(frozen=True)
class DilationTrace:
    """Intermediate special partitions of one dilation/reduction run plus the
    per-step (t_b, r_b) bookkeeping; empty when the map was the identity."""

    steps: tuple[MarkedPartition, ...]
    bookkeeping: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class MapReceipt:
    in_weight: int
    out_weight: int
    in_length: int
    out_length: int
    l: int
    p: int
    t: int
    j: int
    index: int  # insertion index of the lt/sim input, or division index of the eq input

    @classmethod
    def pair(cls, before: MarkedPartition, after: MarkedPartition, l, p, t, j, index):
        return cls(
            before.weight, after.weight, before.length, after.length, l, p, t, j, index
        )


def _ledger(name: str, before: MarkedPartition, after: MarkedPartition, dw: int, dl: int):
    if after.weight - before.weight != dw or after.length - before.length != dl:
        raise GGError(
            f"{name} ledger mismatch on {before.parts}: "
            f"weight {before.weight}->{after.weight} (want +{dw}), "
            f"length {before.length}->{after.length} (want +{dl})"
        )


# -- dilation / reduction ----------------------------------------------


def _basic_dilation(cur: MarkedPartition, value: int, label: str):
    """One basic dilation at a row-2 part of the given insertion type.

    Returns (partition, t, r, overlined) for the odd part it created.
    """
    if label == "A2":
        t = (value - 2) // 2
        new = cur.replace([(2 * t, 1, False)], [(2 * t + 1, False)])
        return new, t, 1, False
    t = value // 2
    if label in ("A1", "B"):
        marks = cur.marks_of(value)
        if not marks:
            raise MissingEntryError(f"no parts {value} to dilate in {cur!r}", cur)
        r = max(marks)
        over = label == "B"
    else:  # A3, C
        r = 2
        over = label == "A3"
    new = cur.replace([(value, r, False)], [(2 * t + 1, over)])
    return new, t, r, over


def dilate(mp: MarkedPartition, k: int, r: int, p: int, t: int):
    """Map an lt-family member to its tilde-family image (weight +2l)."""
    label = classify_lt(mp, k, r, p, t)
    if label is None:
        raise MembershipError(f"{mp.parts} is not in the lt family at (p,t)=({p},{t})")
    l = insertion_threshold(mp, k, r, p, t)
    if l == 0:
        return mp, DilationTrace((), ())
    groups = insertion_types(mp, k, r, p, t)
    row = mp.row_values(2)
    steps, book = [], []
    cur, tb, rb, over = _basic_dilation(mp, row[l - 1], groups.label_of(l))
    steps.append(cur)
    book.append((tb, rb))
    for b in range(l, 1, -1):
        if groups.group_of(b) == groups.group_of(b - 1):
            target = 2 * tb + 4
            marks = [m for m in cur.marks_of(target) if m <= rb]
            if not marks:
                raise MissingEntryError(
                    f"no {target} with mark <= {rb} while walking {mp.parts}", cur
                )
            rb1 = max(marks)
            cur = cur.replace(
                [(2 * tb + 1, rb, over), (target, rb1, False)],
                [(2 * tb + 2, False), (2 * tb + 5, over)],
            )
            tb, rb = tb + 2, rb1
        else:
            cur = cur.replace([(2 * tb + 1, rb, over)], [(2 * tb + 2, False)])
            cur, tb, rb, over = _basic_dilation(cur, row[b - 2], groups.label_of(b - 1))
        steps.append(cur)
        book.append((tb, rb))
    out = cur.replace([(2 * tb + 1, rb, over)], [(2 * tb + 2, False)])
    _ledger("dilate", mp, out, 2 * l, 0)
    return out, DilationTrace(tuple(steps), tuple(book))


def _basic_reduction(cur: MarkedPartition, value: int, label: str):
    """One basic reduction at a row-2 part of the given reduction type."""
    if label in ("A1", "B"):
        t = value // 2
        marks = cur.marks_of(value + 2)
        if label == "B":
            marks = {m for m in marks if m != 1}
        if not marks:
            raise MissingEntryError(f"no parts {value + 2} to reduce in {cur!r}", cur)
        r = min(marks)
        over = label == "B"
        new = cur.replace([(value + 2, r, False)], [(2 * t + 1, over)])
        return new, t, r, over
    t = (value - 2) // 2
    r = 1 if label == "A2" else 2
    over = label == "A3"
    new = cur.replace([(value, r, False)], [(2 * t + 1, over)])
    return new, t, r, over


def reduce(mp: MarkedPartition, k: int, r: int, p: int, t: int):
    """Map a tilde-family member back to the lt family (weight -2l)."""
    label = classify_sim(mp, k, r, p, t)
    if label is None:
        raise MembershipError(f"{mp.parts} is not in the tilde family at (p,t)=({p},{t})")
    l = insertion_threshold(mp, k, r, p, t)
    if l == 0:
        return mp, DilationTrace((), ())
    groups = reduction_types(mp, k, r, p, t)
    row = mp.row_values(2)
    steps, book = [], []
    cur, tb, rb, over = _basic_reduction(mp, row[0], groups.label_of(1))
    steps.append(cur)
    book.append((tb, rb))
    for b in range(1, l):
        cur = cur.replace([(2 * tb + 1, rb, over)], [(2 * tb, False)])
        cur, tb, rb, over = _basic_reduction(cur, row[b], groups.label_of(b + 1))
        steps.append(cur)
        book.append((tb, rb))
    out = cur.replace([(2 * tb + 1, rb, over)], [(2 * tb, False)])
    _ledger("reduce", mp, out, -2 * l, 0)
    return out, DilationTrace(tuple(steps), tuple(book))


# -- insertion / separation --------------------------------------------


def insert_odd_trace(mp: MarkedPartition, k: int, r: int, p: int, t: int):
    """Insert the odd part 2t+1 into a tilde-family member.

    Returns (result, intermediates); the two re-marking kinds expose their
    midpoint partition as the single intermediate.
    """
    label = classify_sim(mp, k, r, p, t)
    if label is None:
        raise MembershipError(f"{mp.parts} is not in the tilde family at (p,t)=({p},{t})")
    j = label.j
    odd = 2 * t + 1
    row = mp.row_values(2)
    l = insertion_threshold(mp, k, r, p, t)
    mid: tuple[MarkedPartition, ...] = ()

    if j <= 5:
        out = mp.replace([], [(odd, False)])
    elif j == 6:
        p1 = cluster_indexes(mp, p)[0]
        out = mp.replace(
            [(row[i - 1] - 2, 1, False) for i in range(p1, p + 1)],
            [(row[i - 1], False) for i in range(p1, p + 1)] + [(odd, False)],
        )
    elif j == 7:
        p1 = cluster_indexes(mp, p)[0]
        nu = mp.replace([], [(odd, False)])
        mid = (nu,)
        marks = _descending_marks(nu, [row[i - 1] for i in range(p1, p + 1)])
        out = nu.replace(
            [(row[i - 1], marks[i - p1], False) for i in range(p1, p + 1)],
            [(row[i - 1] + 2, False) for i in range(p1, p + 1)],
        )
    elif j == 8:
        p1 = cluster_indexes(mp, p)[0]
        out = mp.replace(
            [(row[i - 1], 2, False) for i in range(p1, p + 1)],
            [(row[i - 1] + 2, False) for i in range(p1, p + 1)] + [(odd, False)],
        )
    elif j in (9, 10):
        p1 = cluster_indexes(mp, p)[0]
        out = mp.replace(
            [(row[i - 1], 1, False) for i in range(p1, p + 1)],
            [(row[i - 1] + 2, False) for i in range(p1, p + 1)] + [(odd, False)],
        )
    elif j == 11:
        p1, p2 = cluster_indexes(mp, p)[:2]
        out = mp.replace(
            [(row[i - 1], 1, False) for i in range(p1, p + 1)]
            + [(row[i - 1] - 2, 1, False) for i in range(p2, p1)],
            [(row[i - 1] + 2, False) for i in range(p1, p + 1)]
            + [(row[i - 1], False) for i in range(p2, p1)]
            + [(odd, False)],
        )
    else:  # j == 12
        p1, p2 = cluster_indexes(mp, p)[:2]
        nu = mp.replace(
            [(row[i - 1], 1, False) for i in range(p1, p + 1)],
            [(row[i - 1] + 2, False) for i in range(p1, p + 1)] + [(odd, False)],
        )
        mid = (nu,)
        marks = _descending_marks(nu, [row[i - 1] for i in range(p2, p1)])
        out = nu.replace(
            [(row[i - 1], marks[i - p2], False) for i in range(p2, p1)],
            [(row[i - 1] + 2, False) for i in range(p2, p1)],
        )
    _ledger("insert_odd", mp, out, 2 * (p - l) + 2 * t + 1, 1)
    label_out = classify_eq(out, k, r, p, t)
    if label_out is None or label_out.j != j:
        got = label_out.j if label_out else None
        raise GGError(f"insert_odd moved {mp.parts} from subset {j} to {got} at ({p},{t})")
    if division_index(out, k, r, p, t) != insertion_index(mp, k, r, p, t):
        raise GGError(f"index transport broke inserting into {mp.parts} at ({p},{t})")
    return out, mid


def _descending_marks(nu: MarkedPartition, values: list[int]) -> list[int]:
    """Thread the non-increasing mark chain r_i through `values` (ascending
    index order = descending values): the first pick is the largest mark of
    the last value, each next pick the largest mark <= its successor's."""
    out: list[int] = [0] * len(values)
    hi = None
    for pos in range(len(values) - 1, -1, -1):
        marks = nu.marks_of(values[pos])
        if hi is not None:
            marks = {m for m in marks if m <= hi}
        if not marks:
            raise MissingEntryError(
                f"mark chain broke at value {values[pos]} (cap {hi}) in {nu!r}", nu
            )
        hi = max(marks)
        out[pos] = hi
    return out


def insert_odd(mp: MarkedPartition, k: int, r: int, p: int, t: int) -> MarkedPartition:
    return insert_odd_trace(mp, k, r, p, t)[0]


def separate_odd_trace(mp: MarkedPartition, k: int, r: int, p: int, t: int):
    """Remove the odd part 2t+1 from an eq-family member (inverse insertion)."""
    label = classify_eq(mp, k, r, p, t)
    if label is None:
        raise MembershipError(f"{mp.parts} is not in the eq family at (p,t)=({p},{t})")
    j = label.j
    odd = 2 * t + 1
    row = mp.row_values(2)
    dv = division_index(mp, k, r, p, t)
    l = division_threshold(mp, k, r, p, t)
    mid: tuple[MarkedPartition, ...] = ()

    if j <= 5:
        out = mp.replace([(odd, None, False)], [])
    elif j == 6:
        out = mp.replace(
            [(odd, None, False)] + [(row[i - 1], 1, False) for i in range(l + 1, p + 1)],
            [(row[i - 1] - 2, False) for i in range(l + 1, p + 1)],
        )
    elif j == 7:
        marks = {i: _small_mark_not_2(mp, row[i - 1]) for i in range(l + 1, p + 1)}
        nu = mp.replace(
            [(row[i - 1], marks[i], False) for i in range(l + 1, p + 1)],
            [(row[i - 1] - 2, False) for i in range(l + 1, p + 1)],
        )
        mid = (nu,)
        out = nu.replace([(odd, None, False)], [])
    elif j == 8:
        out = mp.replace(
            [(odd, None, False)] + [(row[i - 1], 2, False) for i in range(l + 1, p + 1)],
            [(row[i - 1] - 2, False) for i in range(l + 1, p + 1)],
        )
    elif j == 9:
        out = mp.replace(
            [(odd, None, False)]
            + [(row[i - 1] + 2, 1, False) for i in range(l + 1, p + 1)],
            [(row[i - 1], False) for i in range(l + 1, p + 1)],
        )
    elif j == 10:
        out = mp.replace(
            [(odd, None, False)]
            + [(row[i - 1] + 2, 1, False) for i in range(l + 2, p + 2)],
            [(row[i - 1], False) for i in range(l + 2, p + 2)],
        )
    elif j == 11:
        s = _smallest_chain_index(mp, row, p)
        out = mp.replace(
            [(odd, None, False)]
            + [(row[i - 1] + 2, 1, False) for i in range(s, p + 1)]
            + [(row[i - 1], 1, False) for i in range(l + 1, s)],
            [(row[i - 1], False) for i in range(s, p + 1)]
            + [(row[i - 1] - 2, False) for i in range(l + 1, s)],
        )
    else:  # j == 12
        s = _smallest_chain_index(mp, row, p, once=True)
        marks = {i: _small_mark_not_2(mp, row[i - 1]) for i in range(l + 1, s)}
        nu = mp.replace(
            [(row[i - 1], marks[i], False) for i in range(l + 1, s)],
            [(row[i - 1] - 2, False) for i in range(l + 1, s)],
        )
        mid = (nu,)
        out = nu.replace(
            [(odd, None, False)]
            + [(row[i - 1] + 2, 1, False) for i in range(s + 1, p + 2)],
            [(row[i - 1], False) for i in range(s + 1, p + 2)],
        )
    _ledger("separate_odd", mp, out, -(2 * (p - l) + 2 * t + 1), -1)
    label_out = classify_sim(out, k, r, p, t)
    if label_out is None or label_out.j != j:
        got = label_out.j if label_out else None
        raise GGError(
            f"separate_odd moved {mp.parts} from subset {j} to {got} at ({p},{t})"
        )
    if insertion_index(out, k, r, p, t) != dv:
        raise GGError(f"index transport broke separating {mp.parts} at ({p},{t})")
    return out, mid


def _small_mark_not_2(mp: MarkedPartition, value: int) -> int:
    marks = [m for m in mp.marks_of(value) if m != 2]
    if not marks:
        raise MissingEntryError(f"no mark other than 2 on parts {value} in {mp!r}", mp)
    return min(marks)


def _smallest_chain_index(mp: MarkedPartition, row, p: int, once: bool = False) -> int:
    base = row[p - 1]
    for s in range(1, p + 1):
        if s <= len(row) and row[s - 1] == base + 4 * (p - s):
            if not once or mp.count(row[s - 1]) == 1:
                return s
    raise GGError(f"no chain anchor below index {p} in {mp.parts}")


def separate_odd(mp: MarkedPartition, k: int, r: int, p: int, t: int) -> MarkedPartition:
    return separate_odd_trace(mp, k, r, p, t)[0]


# -- composites ---------------------------------------------------------


def phi_pt(mp: MarkedPartition, k: int, r: int, p: int, t: int) -> MarkedPartition:
    """Insertion composed with dilation: lt family -> eq family."""
    mu, _ = dilate(mp, k, r, p, t)
    out = insert_odd(mu, k, r, p, t)
    _ledger("phi_pt", mp, out, 2 * p + 2 * t + 1, 1)
    return out


def psi_pt(mp: MarkedPartition, k: int, r: int, p: int, t: int) -> MarkedPartition:
    """Reduction composed with separation: eq family -> lt family."""
    mu = separate_odd(mp, k, r, p, t)
    out, _ = reduce(mu, k, r, p, t)
    _ledger("psi_pt", mp, out, -(2 * p + 2 * t + 1), -1)
    return out


def phi_m(mp: MarkedPartition, k: int, r: int, m: int) -> MarkedPartition:
    pt = find_pt_lt(mp, k, r, m)
    if pt is None:
        raise MembershipError(f"{mp.parts} is not in the lt family at level m={m}")
    return phi_pt(mp, k, r, *pt)


def psi_m(mp: MarkedPartition, k: int, r: int, m: int) -> MarkedPartition:
    pt = find_pt_eq(mp, k, r, m)
    if pt is None:
        raise MembershipError(f"{mp.parts} is not in the eq family at level m={m}")
    return psi_pt(mp, k, r, *pt)


def phi_global(parts, zeta) -> MarkedPartition:
    """Absorb a distinct-odd partition into an even k=r=3 member, smallest
    odd part first."""
    mp = parts if isinstance(parts, MarkedPartition) else gg_mark(parts)
    if any(v % 2 for v in mp.parts) or not is_in_C(mp, 3, 3):
        raise MembershipError(f"{mp.parts} is not an even k=r=3 member")
    zeta = tuple(sorted(zeta, reverse=True))
    if len(set(zeta)) != len(zeta) or any(z % 2 == 0 for z in zeta):
        raise MembershipError(f"absorbed parts must be distinct odds, got {zeta}")
    floor = mp.N(2)
    if any(z < 2 * floor + 1 for z in zeta):
        raise MembershipError(f"odd parts {zeta} dip below the floor 2*{floor}+1")
    for z in reversed(zeta):
        mp = phi_m(mp, 3, 3, (z - 1) // 2)
    return mp


def psi_global(mp: MarkedPartition):
    """Strip all odd parts off a k=r=3 member, returning (even member, odds)."""
    if not is_in_C(mp, 3, 3):
        raise MembershipError(f"{mp.parts} is not a k=r=3 member")
    budget = sum(1 for v in mp.parts if v % 2)
    zeta: list[int] = []
    while any(v % 2 for v in mp.parts):
        if len(zeta) >= budget:
            raise GGError(f"separation loop exceeded the odd-part budget on {mp.parts}")
        m = find_m_eq33(mp)
        mp = psi_m(mp, 3, 3, m)
        zeta.append(2 * m + 1)
    return mp, tuple(zeta)
