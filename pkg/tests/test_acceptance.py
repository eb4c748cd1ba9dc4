"""Acceptance criteria, one test per criterion, each at its stated bound.

Every check is exact integer equality (tolerance 0).  Each test prints one
PASS line on success (run with `pytest -s` to see them); a failure carries
the first offending object in its assertion message.
"""

import pytest

from ggpart import (
    BressoudParams,
    classify_eq,
    classify_lt,
    classify_sim,
    cluster_indexes,
    dilate,
    division_index,
    enumerate_B,
    enumerate_F33,
    find_m_eq33,
    find_pt_eq,
    find_pt_lt,
    gg_mark,
    gg_companion_bivariate,
    insert_odd,
    insertion_index,
    insertion_threshold,
    kursungoz_cell,
    phi_global,
    phi_pt,
    psi_global,
    psi_pt,
    bressoud_multisum,
    bressoud_product,
    reduce,
    render_grid,
    row_counts,
    separate_odd,
    starting_profile,
)
from ggpart.fixtures import FIXTURES, fixture_marked, fixture_overline, fixture_parts
from ggpart.marking import gg_mark_special
from ggpart.membership import enumerate_E

from helpers import c_members, e_members, pt_grid

KR_SETS = ((3, 3), (4, 3), (4, 4))


def _passed(n, text):
    print(f"ACCEPTANCE {n}: PASS - {text}")


def test_criterion_01_headline_identity():
    qmax = 36
    biv = gg_companion_bivariate(qmax)
    members = c_members(3, 3, qmax)
    for n in range(qmax + 1):
        by_len: dict[int, int] = {}
        for mp in members[n]:
            by_len[mp.length] = by_len.get(mp.length, 0) + 1
        assert by_len == dict(biv.coeffs[n]), f"length-refined mismatch at weight {n}"
    _passed(1, "length-refined generating function matches enumeration to q^36")


PRODUCT_PARAMS = (
    BressoudParams((1,), 2, 3, 3),
    BressoudParams((1,), 2, 4, 3),
    BressoudParams((1, 2), 3, 3, 3),
)


@pytest.mark.parametrize("params", PRODUCT_PARAMS, ids=str)
def test_criterion_02_product_form(params):
    qmax = 36
    prod = bressoud_product(params, qmax)
    for n in range(qmax + 1):
        assert prod[n] == len(enumerate_B(params, n)), f"{params} mismatch at q^{n}"
    _passed(2, f"product coefficients equal member counts to q^36 for {params}")


@pytest.mark.parametrize(
    "params", PRODUCT_PARAMS + (BressoudParams((1,), 2, 4, 4),), ids=str
)
def test_criterion_03_sum_equals_product(params):
    qmax = 40
    assert bressoud_multisum(params, qmax) == bressoud_product(params, qmax)
    _passed(3, f"multi-sum equals product to q^40 for {params}")


def test_criterion_04_cell_identity():
    qmax = 40
    for k in (3, 4):
        for r in range(3, k + 1):
            tallies: dict[tuple, dict[int, int]] = {}
            for n in range(qmax + 1):
                for p in enumerate_E(k, r, n):
                    key = row_counts(gg_mark(p), k - 1)
                    tallies.setdefault(key, {}).setdefault(n, 0)
                    tallies[key][n] += 1

            def tuples_with_small_lead(size):
                if size == 0:
                    yield ()
                    return
                for rest in tuples_with_small_lead(size - 1):
                    hi = rest[0] if rest else 4
                    for v in range(hi, 5):
                        yield (v,) + rest

            for key in tuples_with_small_lead(k - 1):
                cell = kursungoz_cell(key, r, qmax)
                by_n = tallies.get(key, {})
                for n in range(qmax + 1):
                    assert cell[n] == by_n.get(n, 0), (k, r, key, n)
    _passed(4, "cell formula equals weighted cell enumeration to q^40, leads <= 4")


def _pt_range(bound=29):
    out = []
    m = 0
    while 2 * m + 1 <= bound:
        out.extend((p, m - p) for p in range(m + 1))
        m += 1
    return out


def test_criterion_05_pt_bijection():
    wmax = 30
    checked = 0
    for k, r in KR_SETS:
        members = c_members(k, r, wmax)
        eq_cache: dict = {}
        for p, t in _pt_range():
            delta = 2 * p + 2 * t + 1
            for n in range(0, wmax + 1 - delta):
                sources = [mp for mp in members[n] if classify_lt(mp, k, r, p, t)]
                if not sources:
                    continue
                targets = sorted(
                    mp.parts for mp in members[n + delta] if classify_eq(mp, k, r, p, t)
                )
                images = []
                for mp in sources:
                    out = phi_pt(mp, k, r, p, t)
                    assert out.length == mp.length + 1
                    assert psi_pt(out, k, r, p, t) == mp, (k, r, p, t, mp.parts)
                    images.append(out.parts)
                    checked += 1
                assert len(set(images)) == len(images), (k, r, p, t, n)
                assert sorted(images) == targets, (k, r, p, t, n)
    _passed(5, f"phi/psi bijective with matching image sets ({checked} members)")


def test_criterion_06_factorized_round_trips():
    wmax = 30
    checked = 0
    for k, r in KR_SETS:
        members = c_members(k, r, wmax)
        for p, t in _pt_range():
            delta = 2 * p + 2 * t + 1
            for n in range(0, wmax + 1 - delta):
                for mp in members[n]:
                    label = classify_lt(mp, k, r, p, t)
                    if label is None:
                        continue
                    l = insertion_threshold(mp, k, r, p, t)
                    mu, _ = dilate(mp, k, r, p, t)
                    assert mu.weight == mp.weight + 2 * l and mu.length == mp.length
                    sim = classify_sim(mu, k, r, p, t)
                    assert sim is not None and sim.j == label.j, (mp.parts, p, t)
                    back, _ = reduce(mu, k, r, p, t)
                    assert back == mp, (mp.parts, p, t)
                    omega = insert_odd(mu, k, r, p, t)  # asserts kind and index transport
                    assert division_index(omega, k, r, p, t) == insertion_index(mu, k, r, p, t)
                    assert separate_odd(omega, k, r, p, t) == mu, (mu.parts, p, t)
                    checked += 1
    _passed(6, f"reduce(dilate)=id and separate(insert)=id with transport ({checked} members)")


def test_criterion_07_twelve_subset_integrity():
    wmax = 28
    t_max = wmax // 2 + 4
    members_total = 0
    for k, r in KR_SETS:
        members = c_members(k, r, wmax)
        for n in range(wmax + 1):
            for mp in members[n]:
                for p, t in pt_grid(mp, t_max):
                    # classify_* raise ClassificationError unless exactly one
                    # clause fires for a member
                    if classify_lt(mp, k, r, p, t):
                        members_total += 1
                        classify_sim(mp, k, r, p, t)
                    if classify_eq(mp, k, r, p, t):
                        members_total += 1
    _passed(7, f"every member matched exactly one subset clause ({members_total} checks)")


def test_criterion_08_global_bijection():
    nmax = 26
    members = c_members(3, 3, nmax)
    for n in range(nmax + 1):
        targets = sorted(mp.parts for mp in members[n])
        by_stats: dict[tuple, int] = {}
        images = []
        for pair in enumerate_F33(n):
            out = phi_global(*pair)
            assert out.weight == sum(pair[0]) + sum(pair[1]) == n
            assert out.length == len(pair[0]) + len(pair[1])
            back, zeta = psi_global(out)
            assert (back.parts, zeta) == pair, pair
            images.append(out.parts)
            key = (out.weight, out.length)
            by_stats[key] = by_stats.get(key, 0) + 1
        assert len(set(images)) == len(images), n
        assert sorted(images) == targets, n
        want_stats: dict[tuple, int] = {}
        for mp in members[n]:
            key = (mp.weight, mp.length)
            want_stats[key] = want_stats.get(key, 0) + 1
        assert by_stats == want_stats, n
        for mp in members[n]:
            pair = psi_global(mp)
            assert phi_global(*pair) == mp, mp.parts
    _passed(8, "pair absorption is a weight/length-preserving bijection to n=26")


def test_criterion_09_property_suite():
    wmax = 26
    t_max = wmax // 2 + 4
    for k, r in KR_SETS:
        members = c_members(k, r, wmax)
        for n in range(wmax + 1):
            for mp in members[n]:
                prof = starting_profile(mp)
                # marks of touching odd/even neighbours differ (direct rule)
                for t in range(0, t_max + 1):
                    if mp.has_part(2 * t + 1) and mp.has_part(2 * t + 2):
                        odd_mark = min(mp.marks_of(2 * t + 1))
                        assert all(m > odd_mark for m in mp.marks_of(2 * t + 2)), (
                            mp.parts,
                            t,
                        )
                for p, t in pt_grid(mp, t_max):
                    label = classify_lt(mp, k, r, p, t)
                    if label is not None:
                        assert p + t >= mp.N(2), (mp.parts, p, t)
                        idx = insertion_index(mp, k, r, p, t)
                        assert not (mp.has_part(idx) and mp.has_part(idx + 2)), (
                            mp.parts,
                            p,
                            t,
                        )
                        if mp.row(2, p) >= 2 * t + 6:
                            assert mp.max_mark(2 * t + 2) <= 1
                            assert mp.max_mark(2 * t + 4) <= 1
                        if p >= 1 and mp.row(2, p) == 2 * t + 2 and prof.type_at(p) == "s3":
                            lead = mp.row(2, cluster_indexes(mp, p)[0])
                            assert mp.count(lead + 4) <= 1, (mp.parts, p, t)
                    sim = classify_sim(mp, k, r, p, t)
                    if sim is not None and mp.has(2 * t, 1):
                        assert not mp.has(2 * t, 2), (mp.parts, p, t)
                    eq_label = classify_eq(mp, k, r, p, t)
                    if eq_label is not None:
                        dv = division_index(mp, k, r, p, t)
                        assert not (mp.has_part(dv) and mp.has_part(dv + 2)), (
                            mp.parts,
                            p,
                            t,
                        )
                        _check_two_sided_chain_property(mp, prof, p, t)
    # even members enter the lt family exactly from their second row count on
    for k, r in KR_SETS:
        evens = e_members(k, r, 26)
        for n in range(27):
            for mp in evens[n]:
                n2 = mp.N(2)
                for m in range(0, 15):
                    assert (find_pt_lt(mp, k, r, m) is not None) == (m >= n2), (
                        mp.parts,
                        m,
                    )
    # an eq-level member chains into strictly larger levels only
    members = c_members(3, 3, 26)
    for n in range(27):
        for mp in members[n]:
            m = find_m_eq33(mp)
            if m is None:
                continue
            assert find_pt_eq(mp, 3, 3, m) is not None
            for m2 in range(0, 15):
                assert (find_pt_lt(mp, 3, 3, m2) is not None) == (m2 > m), (
                    mp.parts,
                    m,
                    m2,
                )
    _passed(9, "all named structural properties hold on exhaustive sweeps")


def _check_two_sided_chain_property(mp, prof, p, t):
    """When the part after p sits at 2t+2, the first chain index typed s0/s1
    has no neighbour above, and everything before it in the chain is s3."""
    if mp.row(2, p + 1) != 2 * t + 2:
        return
    base = mp.row(2, p + 1)
    s = None
    for i in range(1, p + 2):
        if mp.row(2, i) == base + 4 * (p - i + 1) and prof.type_at(i) in ("s0", "s1"):
            s = i
            break
    if s is None:
        return
    vs = mp.row(2, s)
    assert not mp.has_part(vs + 2), (mp.parts, p, t, s)
    for i in range(1, s):
        if mp.row(2, i) == base + 4 * (p - i + 1):
            assert prof.type_at(i) == "s3", (mp.parts, p, t, i)


def test_criterion_10_golden_fixtures():
    # every stored grid is reproduced by re-marking its parts
    for name in FIXTURES:
        mp = gg_mark_special(fixture_parts(name), fixture_overline(name))
        want = fixture_marked(name)
        assert mp.rows == want.rows and render_grid(mp) == render_grid(want), name
        assert {i: mp.row_values(i) for i in range(1, mp.n_rows + 1)} == FIXTURES[name][
            "rows"
        ], name
    # the running dilation reproduces its stored intermediates exactly
    pi1 = fixture_marked("pi1")
    mu, trace = dilate(pi1, 4, 3, 6, 5)
    for step, name in zip(trace.steps, ("pi1_step4", "pi1_step3", "pi1_step2", "pi1_step1")):
        assert render_grid(step) == render_grid(fixture_marked(name)), name
    assert render_grid(mu) == render_grid(fixture_marked("mu"))
    back, rtrace = reduce(mu, 4, 3, 6, 5)
    assert render_grid(back) == render_grid(pi1)
    for step, name in zip(rtrace.steps, ("pi1_step1", "pi1_step2", "pi1_step3", "pi1_step4")):
        assert render_grid(step) == render_grid(fixture_marked(name)), name
    # the twelve insertion kinds against their stored inputs/outputs
    from ggpart.maps import insert_odd_trace, separate_odd_trace

    for j in range(6, 13):
        prm = FIXTURES[f"m{j}"]["params"]
        args = (prm["k"], prm["r"], prm["p"], prm["t"])
        out, mid = insert_odd_trace(fixture_marked(f"m{j}"), *args)
        assert render_grid(out) == render_grid(fixture_marked(f"omega{j}")), j
        if j in (7, 12):
            assert render_grid(mid[0]) == render_grid(fixture_marked(f"nu{j}")), j
        back, mid_back = separate_odd_trace(fixture_marked(f"omega{j}"), *args)
        assert render_grid(back) == render_grid(fixture_marked(f"m{j}")), j
        if j in (7, 12):
            assert render_grid(mid_back[0]) == render_grid(fixture_marked(f"nu{j}")), j
    _passed(10, "stored grids and traces reproduced byte-for-byte")
