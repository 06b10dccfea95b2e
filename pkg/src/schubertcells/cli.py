"""Command-line front end.

Every subcommand prints deterministic, machine-readable output: the same
configuration always produces byte-identical bytes on stdout. Exit codes:
0 success, 2 parse error, 3 domain or guard error, 4 verification mismatch
(which would indicate an implementation bug, not bad input).

The enumeration guard may be overridden per run with --guard or globally
with the SCHUBERT_GUARD environment variable.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import cells, incidence
from .errors import DomainError
from .gf import factor_prime_power, field_make
from .parabolic import factorize_uzv
from .rootsys import parse_word, render_word, rootsystem_make, weyl_enumerate, word_to_element

DEFAULT_GUARD = cells.CELL_GUARD


class ParseError(Exception):
    pass


def _parse_q(text: str) -> tuple[int, int]:
    try:
        if "," in text:
            p_str, k_str = text.split(",")
            return int(p_str), int(k_str)
        return factor_prime_power(int(text))
    except ValueError as exc:
        raise ParseError(f"bad q {text!r}: {exc}") from None


def _guard(args) -> int:
    if getattr(args, "guard", None):
        return args.guard
    env = os.environ.get("SCHUBERT_GUARD")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ParseError(f"SCHUBERT_GUARD={env!r} is not an integer") from None
    return DEFAULT_GUARD


def _word(text: str, rank: int):
    try:
        return parse_word(text, rank)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _cmd_decompose(args) -> int:
    rs = rootsystem_make(args.type, args.rank)
    w = word_to_element(rs, _word(args.w, rs.rank))
    f = factorize_uzv(w, args.i, args.j)
    doc = f.to_json()
    if args.q is not None:
        p, k = _parse_q(args.q)
        q = p**k
        field_make(p, k)
        doc["q"] = q
        doc["thickness"] = q**f.length_z
    if args.format == "json":
        _emit(json.dumps(doc, indent=2))
    else:
        for key in ("u", "z", "v"):
            _emit(f'{key} = "{doc[key]}"')
        _emit(f"length_z = {doc['length_z']}")
        if "thickness" in doc:
            _emit(f"thickness = {doc['thickness']}")
    return 0


def _cmd_thickness(args) -> int:
    rs = rootsystem_make(args.type, args.rank)
    w = word_to_element(rs, _word(args.w, rs.rank))
    p, k = _parse_q(args.q)
    field_make(p, k)
    value = cells.thickness_formula(w, args.i, args.j, p**k)
    if args.format == "json":
        _emit(json.dumps({
            "type": rs.label, "w": render_word(w.word), "i": args.i, "j": args.j,
            "q": p**k, "thickness": value,
        }, indent=2))
    else:
        _emit(str(value))
    return 0


def _ratio_check(inc) -> list:
    mismatches = []
    existential = inc.structure.incidence
    for p in inc.structure.points:
        for l in inc.structure.lines:
            if cells.incidence_ratio_test(p, l, inc) != ((p, l) in existential):
                mismatches.append({"point": p.to_json(), "line": l.to_json()})
    return mismatches


def _cmd_verify(args) -> int:
    p, k = _parse_q(args.q)
    spec = field_make(p, k)
    if args.n < 2:
        raise DomainError(f"need n >= 2, got {args.n}")
    rs = rootsystem_make("A", args.n - 1)
    guard = _guard(args)
    if args.all_w:
        ws = weyl_enumerate(rs)
    elif args.w is not None:
        ws = [word_to_element(rs, _word(args.w, rs.rank))]
    else:
        raise ParseError("give --w or --all-w")
    if args.all_ij:
        pairs = [
            (i, j)
            for i in range(1, rs.rank + 1)
            for j in range(1, rs.rank + 1)
            if i != j
        ]
    elif args.i is not None and args.j is not None:
        pairs = [(args.i, args.j)]
    else:
        raise ParseError("give --i and --j, or --all-ij")
    reports = []
    ok = True
    for w in ws:
        for i, j in pairs:
            report = cells.verify_theorem(w, i, j, spec, args.n, guard)
            doc = report.to_json()
            ok = ok and report.all_agree
            if args.ratio_check:
                inc = cells.build_incidence(w, i, j, spec, args.n, guard)
                mismatches = _ratio_check(inc)
                doc["ratio_agree"] = not mismatches
                doc["ratio_counterexamples"] = mismatches
                ok = ok and not mismatches
            reports.append(doc)
    _emit(json.dumps(reports[0] if len(reports) == 1 else reports, indent=2))
    return 0 if ok else 4


def _cmd_census(args) -> int:
    rs = rootsystem_make(args.type, args.rank)
    if rs.rank < 2:
        raise DomainError(f"rank {rs.rank} admits no pair of distinct parabolic indices")
    p, k = _parse_q(args.q)
    q = p**k
    rows = []
    for w, i, j in cells.thin_census(rs, q, _guard(args)):
        len_z = factorize_uzv(w, i, j).length_z
        rows.append({
            "w": render_word(w.word), "i": i, "j": j,
            "len_z": len_z, "thickness": q**len_z,
        })
    if args.format == "json":
        _emit(json.dumps(rows, indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["w", "i", "j", "len_z", "thickness"])
        for row in rows:
            writer.writerow([row["w"], row["i"], row["j"], row["len_z"], row["thickness"]])
    else:
        _emit(f"thin triples for {rs.label}, q = {q}: {len(rows)}")
        for row in rows:
            _emit(f'  w="{row["w"]}" i={row["i"]} j={row["j"]} len_z={row["len_z"]} thickness={row["thickness"]}')
    return 0


def _cmd_cell(args) -> int:
    p, k = _parse_q(args.q)
    spec = field_make(p, k)
    if args.n < 2:
        raise DomainError(f"need n >= 2, got {args.n}")
    rs = rootsystem_make("A", args.n - 1)
    w = word_to_element(rs, _word(args.w, rs.rank))
    points = cells.enumerate_cell(w, spec, args.n, _guard(args))
    doc = {
        "w": render_word(w.word),
        "q": spec.q,
        "n": args.n,
        "size": len(points),
        "points": [
            {
                "params": [str(c) for c in pt.params],
                "matrix": pt.matrix.to_json(),
                "flag": pt.borel_key.to_json(),
            }
            for pt in points
        ],
    }
    if args.format == "table":
        _emit(f'cell of w="{doc["w"]}" over GF({spec.q}), {doc["size"]} cosets')
        for pt in doc["points"]:
            _emit(f'  params=({", ".join(pt["params"])}) matrix={pt["matrix"]}')
    else:
        _emit(json.dumps(doc, indent=2))
    return 0


def _cmd_lattice_check(args) -> int:
    p, k = _parse_q(args.q)
    spec = field_make(p, k)
    lat = incidence.lattice_make(spec, args.n, _guard(args))
    samples = args.samples
    modular = incidence.check_modular(lat, samples, args.seed)
    atomic = incidence.check_atomic(lat)
    ranked = incidence.check_ranked(lat)
    grassmann = incidence.check_grassmann(lat, samples, args.seed)
    doc = {
        "q": spec.q,
        "n": args.n,
        "subspaces": len(lat),
        "modular": modular[0],
        "atomic": atomic[0],
        "ranked": ranked[0],
        "grassmann": grassmann[0],
    }
    ok = all((modular[0], atomic[0], ranked[0], grassmann[0]))
    if args.n >= 3:
        axioms = incidence.check_projective_axioms(lat.rank12_structure())
        doc["projective_axioms"] = axioms.to_json()
        sizes = sorted({len(lat.points_on(l)) for l in lat.lines()})
        doc["points_per_line"] = sizes
        ok = ok and axioms.all_pass() and sizes == [spec.q + 1]
    _emit(json.dumps(doc, indent=2))
    return 0 if ok else 4


def _load_point_doc(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
        return incidence.parse_point_set(doc)
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        raise ParseError(f"cannot read point set from {path}: {exc}") from None


def _cmd_ovoid_check(args) -> int:
    spec, n, points = _load_point_doc(args.file)
    if not points:
        print("warning: empty point set, conditions hold vacuously", file=sys.stderr)
    lat = incidence.lattice_make(spec, n, _guard(args))
    report = incidence.check_ovoid(points, lat)
    _emit(json.dumps(report.to_json(), indent=2))
    return 0


def _cmd_ovoid_search(args) -> int:
    p, k = _parse_q(args.q)
    spec = field_make(p, k)
    lat = incidence.lattice_make(spec, args.n, _guard(args))
    found = incidence.ovoid_search(lat, args.max_results)
    doc = {
        "field": {"p": spec.p, "k": spec.k},
        "n": args.n,
        "count": len(found),
        "ovoids": [incidence.render_point_set(spec, args.n, o)["points"] for o in found],
    }
    _emit(json.dumps(doc, indent=2))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schubert",
        description="Schubert-cell incidence structures over finite fields",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=fn)
        sp.add_argument("--guard", type=int, default=None, help="enumeration guard override")
        return sp

    sp = add("decompose", _cmd_decompose, "factor w = u z v for a parabolic pair")
    sp.add_argument("--type", default="A")
    sp.add_argument("--rank", type=int, required=True)
    sp.add_argument("--w", required=True, help="word, e.g. '1 3 2 1 3'")
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--j", type=int, required=True)
    sp.add_argument("--q", default=None, help="prime power, as q or 'p,k'")
    sp.add_argument("--format", choices=("table", "json"), default="table")

    sp = add("thickness", _cmd_thickness, "points per line of the (i, j) structure")
    sp.add_argument("--type", default="A")
    sp.add_argument("--rank", type=int, required=True)
    sp.add_argument("--w", required=True)
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--j", type=int, required=True)
    sp.add_argument("--q", required=True)
    sp.add_argument("--format", choices=("table", "json"), default="table")

    sp = add("verify", _cmd_verify, "check the thickness formula against enumeration")
    sp.add_argument("--q", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--w", default=None)
    sp.add_argument("--i", type=int, default=None)
    sp.add_argument("--j", type=int, default=None)
    sp.add_argument("--all-w", action="store_true")
    sp.add_argument("--all-ij", action="store_true")
    sp.add_argument("--ratio-check", action="store_true",
                    help="also validate the g h^-1 in B incidence shortcut")

    sp = add("census", _cmd_census, "list all thin (w, i, j) triples")
    sp.add_argument("--type", default="A")
    sp.add_argument("--rank", type=int, required=True)
    sp.add_argument("--q", required=True)
    sp.add_argument("--format", choices=("table", "csv", "json"), default="table")

    sp = add("cell", _cmd_cell, "dump the parameterized cosets of one cell")
    sp.add_argument("--q", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--w", required=True)
    sp.add_argument("--format", choices=("table", "json"), default="json")

    sp = add("lattice-check", _cmd_lattice_check, "axiom checks for the subspace lattice")
    sp.add_argument("--q", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--samples", type=int, default=None,
                    help="sample count (default: exhaustive)")
    sp.add_argument("--seed", type=int, default=0)

    sp = add("ovoid-check", _cmd_ovoid_check, "check O1/O2 for a point-set file")
    sp.add_argument("--file", required=True)

    sp = add("ovoid-search", _cmd_ovoid_search, "search for ovoids by backtracking")
    sp.add_argument("--q", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--max-results", type=int, default=None)

    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
