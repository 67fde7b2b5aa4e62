"""Command line interface.

Subcommands ``count``, ``generate``, ``map``, ``verify`` and ``table``. Output
is one JSON record per line (``--format records``, the default) or bare
values (``--format plain``). Exit status: 0 success, 1 verification or
integrality failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Iterable, Iterator

from . import numbers as nb
from . import reference as ref
from .maps import Dissection, canonical_serialize, enum_dissections, enum_maps, phi_inv
from .paths import (
    ColoredComposition,
    ColoredDyckPath,
    LatticePath,
    comp_to_path,
    enum_colored_compositions,
    enum_colored_dyck,
    enum_rational_paths,
    enum_schroeder_paths,
    enum_sp_wedge,
    path_to_comp,
    sigma_colors,
    xi,
    xi_inv,
)
from .trees import OrderedTree, enum_st, enum_trees_by_generators, psi, psi_inv
from .verify import DEFAULT_MAX_N, GROUPS, SUITES, run_suites

OBJECTS = [
    "schroeder-paths", "sp-wedge", "rational-paths", "colored-dyck", "compositions",
    "st-trees", "gen-trees", "dissections", "outerplanar-maps", "bell", "transform",
]


class UsageError(Exception):
    pass


class Output:
    """Writes to stdout and, optionally, the same bytes to a file."""

    def __init__(self, fmt: str, path: str | None):
        self.fmt = fmt
        self.file = open(path, "w", encoding="utf-8", newline="\n") if path else None

    def line(self, text: str):
        sys.stdout.write(text + "\n")
        if self.file:
            self.file.write(text + "\n")

    def record(self, rec: dict, plain: str | None = None):
        if self.fmt == "plain":
            if plain is not None:
                self.line(plain)
        else:
            self.line(json.dumps(rec, separators=(", ", ": ")))

    def close(self):
        if self.file:
            self.file.close()


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join("--" + n.replace("_", "-") for n in missing)
        raise UsageError(f"{args.command} {args.object} requires {flags}")


def _params(args, *names) -> dict:
    return {n: getattr(args, n) for n in names if getattr(args, n) is not None}


def _int_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    try:
        return list(range(int(lo), int(hi) + 1)) if sep else [int(lo)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}")


# ---------------------------------------------------------------------------
# count
# ---------------------------------------------------------------------------

def _count(args) -> tuple[dict, int | list[int]]:
    obj = args.object
    if obj in ("schroeder-paths", "st-trees", "dissections"):
        _need(args, "n")
        return _params(args, "n"), nb.little_schroeder(args.n)
    if obj == "sp-wedge":
        _need(args, "n")
        return _params(args, "n"), nb.sigma(args.n)
    if obj == "rational-paths":
        _need(args, "n", "alpha")
        if args.k is not None:
            return _params(args, "n", "alpha", "k"), nb.blocks_count(args.n, args.alpha, args.k)
        return _params(args, "n", "alpha"), nb.rational_schroeder_count(args.n, args.alpha)
    if obj == "colored-dyck":
        _need(args, "n", "alpha")
        sig = [nb.sigma(j) for j in range(1, args.n + 1)]
        ks = [args.k] if args.k is not None else range(1, args.n + 1)
        total = sum(nb.colored_dyck_peak_count(args.alpha - 1, 1, sig, args.n, k) for k in ks)
        return _params(args, "n", "alpha", "k"), total
    if obj == "compositions":
        _need(args, "n", "k")
        return _params(args, "n", "k"), nb.composition_count(args.n, args.k)
    if obj == "gen-trees":
        _need(args, "n")
        if args.k is not None:
            return _params(args, "n", "k"), nb.trees_with_unary(args.n, args.k)
        return _params(args, "n"), nb.tree_count(args.n)
    if obj == "outerplanar-maps":
        _need(args, "n")
        if args.k is not None:
            return _params(args, "n", "k"), nb.maps_with_components(args.n, args.k)
        return _params(args, "n"), nb.map_count(args.n)
    if obj == "bell":
        _need(args, "n", "k")
        return _params(args, "n", "k"), nb.bell_little_schroeder(args.n, args.k)
    if obj == "transform":
        _need(args, "n", "a", "b")
        if args.c is None and args.d is None:
            return _params(args, "n", "a", "b"), nb.transform_special(args.a, args.b, args.n)
        _need(args, "c", "d")
        s = [nb.little_schroeder(i) for i in range(args.n)]
        p = nb.BellTransformParams(args.a, args.b, args.c, args.d)
        return _params(args, "n", "a", "b", "c", "d"), nb.bell_transform(p, s, args.n)
    raise UsageError(f"cannot count {obj}")


def cmd_count(args, out: Output) -> int:
    params, value = _count(args)
    if isinstance(value, list):
        rec = {"kind": "count", "object": args.object, "params": params,
               "terms": [str(v) for v in value]}
        out.record(rec, " ".join(map(str, value)))
    else:
        rec = {"kind": "count", "object": args.object, "params": params, "count": str(value)}
        out.record(rec, str(value))
    return 0


# ---------------------------------------------------------------------------
# generate
# ---------------------------------------------------------------------------

def _generator(args) -> tuple[dict, Iterator[str | dict]]:
    obj = args.object

    def text(items: Iterable) -> Iterator[str]:
        return (str(x) for x in items)

    if obj == "schroeder-paths":
        _need(args, "n")
        return _params(args, "n"), text(enum_schroeder_paths(args.n))
    if obj == "sp-wedge":
        _need(args, "n")
        return _params(args, "n"), text(enum_sp_wedge(args.n))
    if obj == "rational-paths":
        _need(args, "n", "alpha")
        return _params(args, "n", "alpha"), text(enum_rational_paths(args.n, args.alpha))
    if obj == "colored-dyck":
        _need(args, "n", "alpha")
        items = enum_colored_dyck(args.n, args.alpha - 1, sigma_colors)
        return _params(args, "n", "alpha"), (q.to_record() for q in items)
    if obj == "compositions":
        _need(args, "n", "k")
        return _params(args, "n", "k"), text(enum_colored_compositions(args.n, args.k))
    if obj == "st-trees":
        _need(args, "n")
        return _params(args, "n"), text(enum_st(args.n))
    if obj == "gen-trees":
        _need(args, "n")
        return _params(args, "n"), text(enum_trees_by_generators(args.n))
    if obj == "dissections":
        _need(args, "n")
        return _params(args, "n"), text(enum_dissections(args.n))
    if obj == "outerplanar-maps":
        _need(args, "n")
        return _params(args, "n"), (canonical_serialize(m).decode() for m in enum_maps(args.n))
    raise UsageError(f"cannot generate {obj}")


def cmd_generate(args, out: Output) -> int:
    params, items = _generator(args)
    total = 0
    for value in items:
        if args.limit is not None and total >= args.limit:
            break
        plain = value if isinstance(value, str) else json.dumps(value)
        out.record({"kind": "object", "object": args.object, "index": total, "value": value},
                   plain)
        total += 1
    out.record({"kind": "summary", "object": args.object, "params": params,
                "total": str(total)})
    return 0


# ---------------------------------------------------------------------------
# map (apply a bijection)
# ---------------------------------------------------------------------------

def _parse_composition(text: str) -> ColoredComposition:
    parts = []
    for chunk in text.split("+"):
        size, _, label = chunk.partition(":")
        parts.append((int(size), LatticePath(label)))
    return ColoredComposition(tuple(parts))


def cmd_map(args, out: Output) -> int:
    _need(args, "input")
    obj, src = args.object, args.input
    try:
        if obj == "rational-paths":
            _need(args, "alpha")
            name, image = "xi", xi(LatticePath(src), args.alpha).to_record()
        elif obj == "gen-trees":
            name, image = "psi_inv", psi_inv(OrderedTree.parse(src)).to_record()
        elif obj == "schroeder-paths":
            name, image = "path_to_comp", str(path_to_comp(LatticePath(src)))
        elif obj == "compositions":
            name, image = "comp_to_path", str(comp_to_path(_parse_composition(src)))
        elif obj == "colored-dyck":
            _need(args, "bijection")
            record = json.loads(src)
            if args.bijection == "xi":
                q = ColoredDyckPath.from_record(record, LatticePath)
                name, image = "xi_inv", str(xi_inv(q, q.a + 1))
            elif args.bijection == "psi":
                q = ColoredDyckPath.from_record(record, OrderedTree.parse)
                name, image = "psi", str(psi(q))
            else:
                q = ColoredDyckPath.from_record(record, Dissection.parse)
                name, image = "phi_inv", canonical_serialize(phi_inv(q)).decode()
        else:
            raise UsageError(f"no bijection starts from {obj}")
    except (ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        raise UsageError(f"invalid input: {exc}") from exc
    plain = image if isinstance(image, str) else json.dumps(image)
    out.record({"kind": "map", "object": obj, "bijection": name, "input": src,
                "image": image}, plain)
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args, out: Output) -> int:
    names: list[str] = []
    for suite in args.suite or ["all"]:
        if suite in GROUPS:
            names.extend(GROUPS[suite])
        elif suite in SUITES:
            names.append(suite)
        else:
            raise UsageError(f"unknown suite {suite!r}")
    names = list(dict.fromkeys(names))
    results = run_suites(names, args.max_n, workers=args.workers)
    for r in results:
        out.record(r.to_record(), f"{r.name}: {'pass' if r.passed else 'FAIL'} ({r.checks} checks)"
                   + (f" -- {r.counterexample}" if r.counterexample else ""))
    ok = all(r.passed for r in results)
    out.record({"kind": "report", "suites": len(results), "status": "pass" if ok else "fail"},
               "all suites pass" if ok else "verification FAILED")
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

def cmd_table(args, out: Output) -> int:
    kind = args.kind
    mismatches = 0
    if kind == "n-blocks":
        alphas = args.alpha_range or list(ref.N_BLOCKS)
        terms = args.terms or 8
        for alpha in alphas:
            row = [nb.n_blocks_count(n, alpha) for n in range(1, terms + 1)]
            known = ref.N_BLOCKS.get(alpha, ())
            bad = [n for n, v in enumerate(row, 1) if n <= len(known) and known[n - 1] != v]
            mismatches += len(bad)
            out.record({"kind": "row", "table": kind, "alpha": alpha,
                        "values": [str(v) for v in row], "oeis": ref.N_BLOCKS_OEIS.get(alpha),
                        "mismatch": bad},
                       f"{alpha} | " + ", ".join(map(str, row)))
    elif kind in ("tree-unary", "map-components", "blocks"):
        if args.n is None:
            raise UsageError(f"table {kind} requires --n")
        n = args.n
        if kind == "tree-unary":
            row = [nb.trees_with_unary(n, k) for k in range(1, n + 1)]
            known = ref.TREES[n - 1] if n <= len(ref.TREES) else None
            mismatches += known is not None and sum(row) != known
        elif kind == "map-components":
            row = [nb.maps_with_components(n, k) for k in range(1, n + 1)]
            known = ref.MAPS[n - 1] if n <= len(ref.MAPS) else None
            mismatches += known is not None and sum(row) != known
            mismatches += row[-1] != nb.catalan(n)
        else:
            alphas = args.alpha_range or [1]
            if len(alphas) != 1:
                raise UsageError("table blocks takes a single --alpha")
            row = [nb.blocks_count(n, alphas[0], k) for k in range(1, n + 1)]
            known = nb.rational_schroeder_count(n, alphas[0])
            mismatches += sum(row) != known
        out.record({"kind": "row", "table": kind, "n": n, "values": [str(v) for v in row],
                    "total": str(sum(row))},
                   f"{n} | " + ", ".join(map(str, row)) + f" | {sum(row)}")
    else:
        raise UsageError(f"unknown table {kind!r}")
    out.record({"kind": "summary", "table": kind, "mismatches": mismatches},
               None if not mismatches else f"{mismatches} mismatches")
    return 1 if mismatches else 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schroeder", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser):
        p.add_argument("--format", choices=["records", "plain"], default="records")
        p.add_argument("--out", help="also write the output to this file")

    def sizes(p: argparse.ArgumentParser):
        for name in ("n", "k", "alpha", "a", "b", "c", "d"):
            p.add_argument(f"--{name}", type=int)

    p = sub.add_parser("count", help="exact count of a family")
    p.add_argument("object", choices=OBJECTS)
    sizes(p)
    common(p)

    p = sub.add_parser("generate", help="list the objects of a family")
    p.add_argument("object", choices=OBJECTS)
    sizes(p)
    p.add_argument("--limit", type=int)
    common(p)

    p = sub.add_parser("map", help="apply a bijection to one object")
    p.add_argument("object", choices=OBJECTS)
    p.add_argument("--input", help="object text (path word, tree, composition or JSON record)")
    p.add_argument("--bijection", choices=["xi", "psi", "phi"],
                   help="for colored-dyck input: which inverse to apply")
    sizes(p)
    common(p)

    p = sub.add_parser("verify", help="run self-check suites")
    p.add_argument("--suite", action="append",
                   help="suite or group: " + ", ".join(list(GROUPS) + list(SUITES)))
    p.add_argument("--max-n", type=int, dest="max_n",
                   help="override the size bound of the selected suites (defaults: "
                   + ", ".join(f"{k}={v}" for k, v in DEFAULT_MAX_N.items() if v) + ")")
    p.add_argument("--workers", type=int, default=1)
    common(p)

    p = sub.add_parser("table", help="reproduce a count table")
    p.add_argument("kind", choices=["n-blocks", "blocks", "tree-unary", "map-components"])
    p.add_argument("--alpha", type=_int_range, dest="alpha_range", help="N or A..B")
    p.add_argument("--terms", type=int)
    p.add_argument("--n", type=int)
    common(p)
    return parser


COMMANDS: dict[str, Callable] = {
    "count": cmd_count,
    "generate": cmd_generate,
    "map": cmd_map,
    "verify": cmd_verify,
    "table": cmd_table,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.format, args.out)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"schroeder: error: {exc}", file=sys.stderr)
        return 2
    except nb.IntegralityError as exc:
        print(f"schroeder: integrality failure: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"schroeder: error: {exc}", file=sys.stderr)
        return 2
    finally:
        out.close()


if __name__ == "__main__":
    sys.exit(main())
