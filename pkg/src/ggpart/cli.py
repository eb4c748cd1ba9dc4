"""Command-line front end.

Subcommands: mark, classify, map, count, enumerate, verify, roundtrip.
Exit codes: 0 success/PASS, 1 FAIL (identity mismatch or round-trip
failure), 2 usage error.  All output is deterministic; --seedless is
accepted for harness compatibility and simply asserts that behaviour.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import maps, series
from .classify import (
    classify_eq,
    classify_lt,
    classify_sim,
    cluster_indexes,
    division_index,
    insertion_index,
    starting_profile,
)
from .errors import GGError
from .fixtures import fixture_names, fixture_overline, fixture_parts
from .marking import gg_mark, gg_mark_special, marked_to_dict, render_grid
from .membership import (
    BressoudParams,
    enumerate_B,
    enumerate_C,
    enumerate_E,
    enumerate_F33,
    enumerate_I,
)


def _parse_parts(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text or text == "[]":
        return ()
    if text.startswith("["):
        vals = json.loads(text)
    else:
        vals = [int(tok) for tok in text.split(",") if tok.strip()]
    parts = tuple(int(v) for v in vals)
    if list(parts) != sorted(parts, reverse=True):
        print("note: parts were not non-increasing; sorting", file=sys.stderr)
    return tuple(sorted(parts, reverse=True))


def _input_partition(args) -> tuple[tuple[int, ...], int | None]:
    if getattr(args, "fixture", None):
        return fixture_parts(args.fixture), fixture_overline(args.fixture)
    if args.parts is None:
        raise SystemExit(2)
    return _parse_parts(args.parts), getattr(args, "overline", None)


def _emit(obj, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        print(obj)


def cmd_mark(args) -> int:
    parts, over = _input_partition(args)
    mp = gg_mark_special(parts, over)
    if args.format == "json":
        _emit(marked_to_dict(mp), "json")
    else:
        print(render_grid(mp))
    return 0


def cmd_classify(args) -> int:
    parts, over = _input_partition(args)
    mp = gg_mark_special(parts, over)
    k, r = args.k, args.r
    out: dict = {"parts": list(parts), "k": k, "r": r}
    prof = starting_profile(mp)
    out["types"] = {str(i): prof.type_at(i) for i in range(1, mp.N(2) + 1)}
    out["threshold"] = prof.threshold
    if args.m is not None:
        from .classify import find_pt_eq, find_pt_lt

        out["m"] = args.m
        out["lt"] = find_pt_lt(mp, k, r, args.m)
        out["eq"] = find_pt_eq(mp, k, r, args.m)
        _emit(out, "json")
        return 0
    if args.p is None or args.t is None:
        print("error: classify needs -p and -t, or -m", file=sys.stderr)
        return 2
    p, t = args.p, args.t
    out["p"], out["t"] = p, t
    lt = classify_lt(mp, k, r, p, t)
    sim = classify_sim(mp, k, r, p, t) if lt else None
    eq = classify_eq(mp, k, r, p, t)
    fams = {}
    if lt:
        fams["lt"] = {"j": lt.j, "index": insertion_index(mp, k, r, p, t)}
        if p >= 1:
            fams["lt"]["clusters"] = list(cluster_indexes(mp, p, t))
    if sim:
        fams["sim"] = {"j": sim.j}
    if eq:
        fams["eq"] = {"j": eq.j, "index": division_index(mp, k, r, p, t)}
    out["families"] = fams
    _emit(out, "json")
    return 0


_OPS = {
    "dilate": lambda mp, a: maps.dilate(mp, a.k, a.r, a.p, a.t),
    "reduce": lambda mp, a: maps.reduce(mp, a.k, a.r, a.p, a.t),
    "insert": lambda mp, a: (maps.insert_odd(mp, a.k, a.r, a.p, a.t), None),
    "separate": lambda mp, a: (maps.separate_odd(mp, a.k, a.r, a.p, a.t), None),
    "phi-pt": lambda mp, a: (maps.phi_pt(mp, a.k, a.r, a.p, a.t), None),
    "psi-pt": lambda mp, a: (maps.psi_pt(mp, a.k, a.r, a.p, a.t), None),
    "phi-m": lambda mp, a: (maps.phi_m(mp, a.k, a.r, a.m), None),
    "psi-m": lambda mp, a: (maps.psi_m(mp, a.k, a.r, a.m), None),
}


def cmd_map(args) -> int:
    parts, over = _input_partition(args)
    if args.op in ("dilate", "reduce", "insert", "separate", "phi-pt", "psi-pt"):
        if args.p is None or args.t is None:
            print(f"error: --op {args.op} needs -p and -t", file=sys.stderr)
            return 2
    if args.op in ("phi-m", "psi-m") and args.m is None:
        print(f"error: --op {args.op} needs -m", file=sys.stderr)
        return 2
    if args.op == "phi":
        zeta = _parse_parts(args.zeta or "")
        out = maps.phi_global(parts, zeta)
        result: dict = {"partition": list(out.parts)}
    elif args.op == "psi":
        out, zeta = maps.psi_global(gg_mark(parts))
        result = {"partition": list(out.parts), "zeta": list(zeta)}
    else:
        mp = gg_mark_special(parts, over)
        out, trace = _OPS[args.op](mp, args)
        result = {"partition": list(out.parts), "weight": out.weight, "length": out.length}
        if args.trace and trace is not None:
            for step in trace.steps:
                print(render_grid(step), file=sys.stderr)
                print("--", file=sys.stderr)
    if args.op in ("dilate", "reduce", "insert", "separate", "phi-pt", "psi-pt"):
        result["p"], result["t"] = args.p, args.t
    if args.format == "text":
        print(render_grid(gg_mark(result["partition"])))
        if "zeta" in result:
            print("zeta:", ",".join(str(z) for z in result["zeta"]))
    else:
        _emit(result, "json")
    return 0


def _params_from(args) -> BressoudParams:
    alphas = tuple(int(a) for a in args.alphas.split(",") if a.strip()) if args.alphas else ()
    return BressoudParams(alphas, args.eta, args.k, args.r)


def cmd_count(args) -> int:
    print("n,count")
    for n in range(args.max_n + 1):
        if args.set == "B":
            cnt = len(enumerate_B(_params_from(args), n))
        elif args.set == "C":
            cnt = len(enumerate_C(args.k, args.r, n))
        else:
            cnt = len(enumerate_E(args.k, args.r, n))
        print(f"{n},{cnt}")
    return 0


def cmd_enumerate(args) -> int:
    if args.set == "I":
        for z in enumerate_I(args.floor, args.max_weight):
            print(json.dumps(list(z)))
        return 0
    if args.set == "F33":
        for p, z in enumerate_F33(args.n):
            print(json.dumps([list(p), list(z)]))
        return 0
    if args.set == "B":
        items = enumerate_B(_params_from(args), args.n)
    elif args.set == "C":
        items = enumerate_C(args.k, args.r, args.n)
    else:
        items = enumerate_E(args.k, args.r, args.n)
    for p in items:
        print(json.dumps(list(p)))
    return 0


def _first_mismatch(a, b, qmax):
    for n in range(qmax + 1):
        if a[n] != b[n]:
            return n
    return None


def cmd_verify(args) -> int:
    qmax = args.qmax
    if args.identity == "conjecture":
        params = _params_from(args)
        lhs = series.bressoud_multisum(params, qmax)
        rhs = [len(enumerate_B(params, n)) for n in range(qmax + 1)]
        bad = _first_mismatch(lhs.coeffs, rhs, qmax)
    elif args.identity == "product":
        params = _params_from(args)
        lhs = series.bressoud_product(params, qmax)
        rhs = [len(enumerate_B(params, n)) for n in range(qmax + 1)]
        bad = _first_mismatch(lhs.coeffs, rhs, qmax)
    elif args.identity == "sum-product":
        params = _params_from(args)
        lhs = series.bressoud_multisum(params, qmax)
        rhs = series.bressoud_product(params, qmax).coeffs
        bad = _first_mismatch(lhs.coeffs, rhs, qmax)
    elif args.identity == "companion":
        biv = series.gg_companion_bivariate(qmax)
        bad = None
        for n in range(qmax + 1):
            by_len: dict[int, int] = {}
            for p in enumerate_C(3, 3, n):
                by_len[len(p)] = by_len.get(len(p), 0) + 1
            if by_len != {d: v for d, v in biv.coeffs[n].items() if v}:
                bad = n
                break
    else:  # cell
        from .marking import gg_mark as _mark
        from .membership import row_counts

        k, r = args.k, args.r
        tallies: dict[tuple, dict[int, int]] = {}
        for n in range(qmax + 1):
            for p in enumerate_E(k, r, n):
                key = row_counts(_mark(p), k - 1)
                tallies.setdefault(key, {})[n] = tallies.get(key, {}).get(n, 0) + 1
        bad = None
        for key, by_n in sorted(tallies.items()):
            if key[0] > args.max_n1:
                continue
            cell = series.kursungoz_cell(key, r, qmax)
            if any(cell[n] != by_n.get(n, 0) for n in range(qmax + 1)):
                bad = key
                break
    if bad is None:
        print(f"PASS {args.identity} qmax={qmax}")
        return 0
    print(f"FAIL {args.identity} qmax={qmax} first mismatch at {bad}")
    return 1


def cmd_roundtrip(args) -> int:
    from .marking import gg_mark as _mark

    k, r, wmax = args.k, args.r, args.max_weight
    members: dict[int, list] = {
        n: [_mark(p) for p in enumerate_C(k, r, n)] for n in range(wmax + 1)
    }
    checked = eq_checked = failures = 0
    for m in range(0, wmax // 2 + 1):
        for p in range(0, m + 1):
            t = m - p
            delta = 2 * p + 2 * t + 1
            for n in range(0, wmax + 1 - delta):
                for mp in members[n]:
                    if classify_lt(mp, k, r, p, t) is None:
                        continue
                    checked += 1
                    try:
                        out = maps.phi_pt(mp, k, r, p, t)
                        back = maps.psi_pt(out, k, r, p, t)
                        if back.parts != mp.parts:
                            failures += 1
                    except GGError:
                        failures += 1
            for n in range(delta, wmax + 1):
                for mp in members[n]:
                    if classify_eq(mp, k, r, p, t) is None:
                        continue
                    eq_checked += 1
                    try:
                        back = maps.phi_pt(maps.psi_pt(mp, k, r, p, t), k, r, p, t)
                        if back.parts != mp.parts:
                            failures += 1
                    except GGError:
                        failures += 1
    print(f"phi(psi) round-trips checked={eq_checked}")
    print(f"psi(phi) round-trips checked={checked}")
    print(f"failures={failures}")
    if k == r == 3:
        g_checked = g_failures = 0
        for n in range(wmax + 1):
            for pair in enumerate_F33(n):
                g_checked += 1
                out = maps.phi_global(*pair)
                back, zeta = maps.psi_global(out)
                if (back.parts, zeta) != pair:
                    g_failures += 1
        print(f"global round-trips checked={g_checked} failures={g_failures}")
        failures += g_failures
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ggpart", description=__doc__)
    ap.add_argument("--seedless", action="store_true", help="deterministic ordering (always on)")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def add_partition_opts(p, with_overline=True):
        p.add_argument("--parts", "--partition", dest="parts", help="comma list or JSON array")
        p.add_argument("--fixture", choices=fixture_names())
        if with_overline:
            p.add_argument("--overline", type=int, help="value carrying the overline")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("mark", help="print the marking grid")
    add_partition_opts(p)
    p.set_defaults(fn=cmd_mark)

    p = sub.add_parser("classify", help="family memberships and indexes")
    add_partition_opts(p)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-p", type=int)
    p.add_argument("-t", type=int)
    p.add_argument("-m", type=int)
    p.set_defaults(fn=cmd_classify, format="json")

    p = sub.add_parser("map", help="apply one of the bijections")
    add_partition_opts(p)
    p.add_argument("--op", required=True, choices=list(_OPS) + ["phi", "psi"])
    p.add_argument("-k", type=int, default=3)
    p.add_argument("-r", type=int, default=3)
    p.add_argument("-p", type=int)
    p.add_argument("-t", type=int)
    p.add_argument("-m", type=int)
    p.add_argument("--zeta", help="odd parts to absorb (phi)")
    p.add_argument("--trace", action="store_true", help="print intermediate grids to stderr")
    p.set_defaults(fn=cmd_map, format="json")

    p = sub.add_parser("count", help="CSV of member counts by weight")
    p.add_argument("--set", choices=("B", "C", "E"), default="C")
    p.add_argument("--alphas", help="comma list, e.g. 1,2")
    p.add_argument("--eta", type=int, default=2)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("enumerate", help="JSON lines of members")
    p.add_argument("--set", choices=("B", "C", "E", "I", "F33"), default="C")
    p.add_argument("--alphas")
    p.add_argument("--eta", type=int, default=2)
    p.add_argument("-k", type=int, default=3)
    p.add_argument("-r", type=int, default=3)
    p.add_argument("-n", type=int, default=0)
    p.add_argument("--floor", type=int, default=0, help="odd parts >= 2*floor+1 (I)")
    p.add_argument("--max-weight", type=int, default=0)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("verify", help="check one identity coefficient-by-coefficient")
    p.add_argument(
        "--identity",
        required=True,
        choices=("conjecture", "product", "sum-product", "companion", "cell"),
    )
    p.add_argument("--alphas")
    p.add_argument("--eta", type=int, default=2)
    p.add_argument("-k", type=int, default=3)
    p.add_argument("-r", type=int, default=3)
    p.add_argument("--qmax", type=int, required=True)
    p.add_argument("--max-n1", type=int, default=4, help="largest leading row count (cell)")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("roundtrip", help="exhaustive inverse-map sweeps")
    p.add_argument("-k", type=int, default=3)
    p.add_argument("-r", type=int, default=3)
    p.add_argument("--max-weight", type=int, required=True)
    p.set_defaults(fn=cmd_roundtrip)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except GGError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
