"""Shared enumeration caches for the sweep-style tests."""

from functools import cache

from ggpart import enumerate_C, enumerate_E, gg_mark
from ggpart.membership import all_partitions


@cache
def c_members(k: int, r: int, wmax: int):
    """{weight: [marked members]} for the eta=2 single-residue family."""
    return {n: [gg_mark(p) for p in enumerate_C(k, r, n)] for n in range(wmax + 1)}


@cache
def e_members(k: int, r: int, wmax: int):
    return {n: [gg_mark(p) for p in enumerate_E(k, r, n)] for n in range(wmax + 1)}


@cache
def partitions_upto(wmax: int):
    return {n: list(all_partitions(n)) for n in range(wmax + 1)}


def pt_grid(mp, t_max: int):
    """All (p, t) pairs worth probing for one partition: p bounded by the
    second row, t by the point where every membership clause has stabilized."""
    return [(p, t) for p in range(0, mp.N(2) + 1) for t in range(0, t_max + 1)]
