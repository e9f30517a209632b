"""Command-line front end: count, check, build, census, realizations."""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import constructors as C
from .degseq import DegreeSequence, degree_sequence, is_forcibly_sc, iter_realizations
from .enumeration import TABLE1, count_rows, format_table
from .graph import Graph, find_antimorphism, graph6_read, graph6_write
from .oracle import Filter, generate_sc
from .partitions import any_diamond, diamond_from_antimorphism, partition_symmetry, rectangle_partition
from .recognition import pseudo_split_partition, split_partition

CHECKS = ("sc", "split", "pseudo-split", "forcibly", "partition")


class UsageError(Exception):
    pass


def _kv(text: str, keys) -> dict[str, int]:
    out = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        m = re.fullmatch(r"(\w+)=(-?\d+)", part)
        if not m:
            raise UsageError(f"expected key=value, got {part!r}")
        out[m.group(1)] = int(m.group(2))
    missing = [k for k in keys if k not in out]
    extra = [k for k in out if k not in keys]
    if missing or extra:
        raise UsageError(f"expected keys {','.join(keys)}; missing {missing}, unexpected {extra}")
    return out


def build_from_spec(spec: str) -> Graph:
    """Dispatch a construction string such as "gibbs:k=2,d=5" or "elementary:P4,P4;apex"."""
    prefix, sep, rest = spec.partition(":")
    if not sep:
        raise UsageError(f"construction {spec!r} needs a prefix, e.g. zk:3")
    prefix = prefix.strip().lower()
    if prefix == "elementary":
        return C.build_elementary(C.BlockSpec.parse(rest))
    if prefix == "gibbs":
        a = _kv(rest, ("k", "d"))
        return C.build_gibbs_onecycle(a["k"], a["d"])
    if prefix in ("zk", "circ", "witness1"):
        text = rest.strip()
        if text.startswith("k="):
            text = text[2:]
        if not text.isdigit():
            raise UsageError(f"{prefix} needs a positive integer, got {rest!r}")
        fn = {"zk": C.build_Zk, "circ": C.build_circulant_power, "witness1": C.witness_regular}[prefix]
        return fn(int(text))
    if prefix == "witness2":
        a = _kv(rest, ("k", "d"))
        return C.witness_two_degree(a["k"], a["d"])
    if prefix == "witness4":
        a = _kv(rest, ("k1", "k2", "d", "n"))
        return C.witness_four_degree(a["k1"], a["k2"], a["d"], a["n"])
    raise UsageError(f"unknown construction prefix {prefix!r}")


def _sets(s) -> list[int]:
    return sorted(s)


def check_graph(g: Graph, checks) -> dict:
    report: dict = {"graph6": graph6_write(g), "n": g.n, "degree_sequence": str(degree_sequence(g))}
    sigma = None
    if "sc" in checks or "partition" in checks:
        sigma = find_antimorphism(g)
    if "sc" in checks:
        report["self_complementary"] = sigma is not None
        report["antimorphism"] = list(sigma.image) if sigma is not None else None
    if "split" in checks:
        sp = split_partition(g)
        report["split"] = None if sp is None else {"K": _sets(sp[0]), "I": _sets(sp[1])}
    if "pseudo-split" in checks:
        pp = pseudo_split_partition(g)
        report["pseudo_split"] = None if pp is None else {"K": _sets(pp.K), "I": _sets(pp.I), "C": _sets(pp.C)}
    if "forcibly" in checks:
        report["forcibly_sc"] = is_forcibly_sc(degree_sequence(g))
    if "partition" in checks:
        report["partition"] = _partition_report(g, sigma)
    return report


def _partition_report(g: Graph, sigma) -> dict:
    out: dict = {"diamond": None, "diamond_self_complementary": None, "rectangle": None}
    if split_partition(g) is None:
        return out
    if sigma is not None and g.n % 4 == 0 and g.n > 0:
        p = diamond_from_antimorphism(g, sigma)
        sym = partition_symmetry(g, p)
        out["diamond"] = [_sets(v) for v in p.parts]
        out["diamond_self_complementary"] = sym.self_complementary
        r = rectangle_partition(g)
        out["rectangle"] = None if r is None else [_sets(v) for v in r.parts]
        return out
    try:
        out["diamond"] = [_sets(v) for v in any_diamond(g).parts]
    except ValueError:
        pass
    return out


def _format_check_text(r: dict) -> str:
    lines = [f"{r['graph6']}  n={r['n']}  degrees={r['degree_sequence']}"]
    if "self_complementary" in r:
        cert = f"  antimorphism={r['antimorphism']}" if r["antimorphism"] is not None else ""
        lines.append(f"  self-complementary: {'yes' if r['self_complementary'] else 'no'}{cert}")
    if "split" in r:
        s = r["split"]
        lines.append("  split: no" if s is None else f"  split: K={s['K']} I={s['I']}")
    if "pseudo_split" in r:
        s = r["pseudo_split"]
        lines.append("  pseudo-split: no" if s is None else f"  pseudo-split: K={s['K']} I={s['I']} C={s['C']}")
    if "forcibly_sc" in r:
        lines.append(f"  forcibly self-complementary degree sequence: {'yes' if r['forcibly_sc'] else 'no'}")
    if "partition" in r:
        p = r["partition"]
        lines.append(f"  diamond: {p['diamond']}  self-complementary: {p['diamond_self_complementary']}")
        lines.append(f"  rectangle: {p['rectangle']}")
    return "\n".join(lines)


def _read_graphs(path) -> list[Graph]:
    stream = open(path) if path and path != "-" else sys.stdin
    try:
        lines = [ln.strip() for ln in stream]
    finally:
        if stream is not sys.stdin:
            stream.close()
    graphs = []
    for i, ln in enumerate(lines, 1):
        if not ln:
            continue
        try:
            graphs.append(graph6_read(ln))
        except ValueError as exc:
            raise UsageError(f"line {i}: {exc}") from exc
    return graphs


def _parse_orders(items) -> list[int]:
    orders = []
    for item in items:
        for part in item.split(","):
            part = part.strip()
            if not part:
                continue
            m = re.fullmatch(r"(\d+)(?:-(\d+))?", part)
            if not m:
                raise UsageError(f"bad order {part!r}")
            lo = int(m.group(1))
            hi = int(m.group(2) or lo)
            orders.extend(range(lo, hi + 1))
    return orders


def cmd_count(args) -> str:
    orders = _parse_orders(args.orders) if args.orders else sorted(TABLE1)
    family = None if args.family == "both" else args.family
    if args.json:
        rows = count_rows(orders)
        if family is not None:
            key = family.replace("-", "_")
            rows = [{"n": r["n"], key: r[key]} for r in rows]
        return json.dumps(rows, indent=2)
    return format_table(orders, family)


def cmd_check(args) -> str:
    checks = CHECKS if args.checks == "all" else tuple(c.strip() for c in args.checks.split(","))
    bad = [c for c in checks if c not in CHECKS]
    if bad:
        raise UsageError(f"unknown checks {bad}; choose from {','.join(CHECKS)}")
    graphs = _read_graphs(args.input)
    reports = [check_graph(g, checks) for g in graphs]
    if args.json:
        return json.dumps(reports, indent=2)
    return "\n".join(_format_check_text(r) for r in reports)


def cmd_build(args) -> str:
    g = build_from_spec(args.spec)
    if args.json:
        return json.dumps({"spec": args.spec, "graph6": graph6_write(g), "n": g.n,
                           "degree_sequence": str(degree_sequence(g))}, indent=2)
    return graph6_write(g)


def cmd_census(args) -> str:
    census = generate_sc(args.n, Filter(args.filter), threads=args.threads)
    lines = census.graph6_lines()
    if args.json:
        return json.dumps({"n": args.n, "filter": census.filter.value, "count": len(lines), "graphs": lines}, indent=2)
    print(f"{len(lines)} graphs (n={args.n}, filter={census.filter.value})", file=sys.stderr)
    return "\n".join(lines)


def cmd_realizations(args) -> str:
    ds = DegreeSequence.parse(args.degrees)
    rows = []
    for g in iter_realizations(ds, iso_dedupe=True):
        rows.append((graph6_write(g), find_antimorphism(g) is not None))
    rows.sort()
    if args.json:
        return json.dumps({"degree_sequence": str(ds), "realizations": [
            {"graph6": s, "self_complementary": sc} for s, sc in rows]}, indent=2)
    print(f"{len(rows)} realizations up to isomorphism, {sum(sc for _, sc in rows)} self-complementary",
          file=sys.stderr)
    return "\n".join(f"{s}\t{'SC' if sc else 'not-SC'}" for s, sc in rows)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="worker processes for the census")
    common.add_argument("--in", dest="input", default=argparse.SUPPRESS, help="graph6 input file (default stdin)")
    common.add_argument("--out", dest="output", default=argparse.SUPPRESS, help="output file (default stdout)")

    parser = argparse.ArgumentParser(prog="scsplit", parents=[common],
                                     description="Self-complementary split and pseudo-split graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="number of SC split / pseudo-split graphs")
    p.add_argument("orders", nargs="*", help="orders, e.g. 4 5 8 or 4-21 (default: 4,5,8,9,...,21)")
    p.add_argument("--family", choices=("split", "pseudo-split", "both"), default="both")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("check", parents=[common], help="analyse graph6 graphs")
    p.add_argument("--checks", default="all", help=f"comma list from {','.join(CHECKS)} or 'all'")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("build", parents=[common], help="construct a graph and print it in graph6")
    p.add_argument("spec", help="e.g. elementary:P4,P4;apex  gibbs:k=2,d=5  zk:3  circ:2  witness1:k=2  "
                                "witness2:k=3,d=8  witness4:k1=2,k2=1,d=7,n=12")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("census", parents=[common], help="all SC graphs of one order up to isomorphism")
    p.add_argument("n", type=int)
    p.add_argument("--filter", choices=[f.value for f in Filter], default=Filter.SC_SPLIT.value)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("realizations", parents=[common], help="realizations of a degree sequence")
    p.add_argument("degrees", help='grouped degree sequence, e.g. "5^4,2^4"')
    p.set_defaults(func=cmd_realizations)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    # global flags may appear before or after the subcommand, so defaults are filled in here
    for name, value in (("json", False), ("threads", os.cpu_count() or 1), ("input", None), ("output", None)):
        if not hasattr(args, name):
            setattr(args, name, value)
    try:
        text = args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"scsplit {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if text and not text.endswith("\n"):
        text += "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
