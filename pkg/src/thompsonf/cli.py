"""Command-line front end.

Exit codes: 0 all checks passed, 1 a check failed, 2 usage or parse error,
3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .complexes import f_vector_lines, to_dot
from .forest import ParseError
from .groupoid import closed_interval, le, open_interval, order_complex, parse_groupoid_element
from .homology import reduced_homology
from .matching import connectivity_report
from .stein import caret_edge, descending_link, descending_link_iso, truncated_subcomplex
from .thompson import generator, inverse, multiply, parse_element, verify_relation
from .verify import DEFAULT_SEED, run_battery

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _write_json(path: str, payload) -> None:
    try:
        with open(path, "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    except OSError as exc:
        raise IOError(f"cannot write {path}: {exc}") from exc


def _homology_lines(c) -> list[str]:
    return [f"H~_{h.degree}: {h}" for h in reduced_homology(c)]


def cmd_mul(args) -> int:
    g, h = parse_element(args.lhs), parse_element(args.rhs)
    print(multiply(g, h))
    return EXIT_OK


def cmd_inv(args) -> int:
    print(inverse(parse_element(args.element)))
    return EXIT_OK


def cmd_relations(args) -> int:
    if args.max_j < 1:
        raise UsageError("max_j must be at least 1")
    results = []
    for j in range(1, args.max_j + 1):
        for i in range(j):
            ok = verify_relation(i, j)
            lhs = multiply(generator(j), generator(i))
            print(f"x_{j} x_{i} = x_{i} x_{j + 1}: {'pass' if ok else 'fail'}  {lhs}")
            results.append({"i": i, "j": j, "pass": ok, "product": str(lhs)})
    failed = sum(not r["pass"] for r in results)
    print(f"{len(results)} checks, {failed} failed")
    if args.json:
        _write_json(args.json, {"schema": "1", "relations": results})
    return EXIT_FAIL if failed else EXIT_OK


def cmd_desclink(args) -> int:
    if args.n < 2:
        raise UsageError("level must be at least 2")
    link = descending_link(args.n)
    iso = descending_link_iso(args.n)
    if args.dot:
        sys.stdout.write(to_dot(link, f"desclink_{args.n}"))
        return EXIT_OK if iso.ok else EXIT_FAIL
    print(f"descending link at level {args.n}")
    for line in f_vector_lines(link):
        print(line)
    print(f"isomorphic to M(L_{args.n}): {'pass' if iso.ok else 'fail'}")
    for v in link.vertices:
        i, j = caret_edge(v)
        print(f"  {v}  ->  edge {{{i}, {j}}}")
    payload = {"n": args.n, "f_vector": list(link.f_vector()), "iso": iso.ok}
    if args.homology:
        rep = connectivity_report(args.n)
        for line in _homology_lines(link):
            print(line)
        payload.update(rep.to_json())
        payload["pass"] = rep.passed and iso.ok
    if args.json:
        _write_json(args.json, payload)
    return EXIT_OK if payload.get("pass", iso.ok) else EXIT_FAIL


def cmd_matching(args) -> int:
    if args.n < 2:
        raise UsageError("n must be at least 2")
    rep = connectivity_report(args.n)
    fragment = rep.to_json()
    print(json.dumps(fragment))
    if args.homology:
        for h in rep.homology:
            print(f"H~_{h.degree}: {h}")
        print(f"homologically connected through degree {rep.homologically_connected_through} "
              f"(homological proxy for connectivity)")
    if args.json:
        _write_json(args.json, fragment)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_interval(args) -> int:
    x, z = parse_groupoid_element(args.x), parse_groupoid_element(args.z)
    if not (x.is_vertex() and z.is_vertex()):
        raise UsageError("interval endpoints must have a single-tree minus forest")
    s = le(x, z)
    if s is None:
        raise UsageError(f"{x} is not below {z}")
    p = closed_interval(x, z)
    if args.dot:
        c = order_complex(p)
        sys.stdout.write(to_dot(c, "interval"))
        return EXIT_OK
    print(f"split {s}: {len(p)} elements")
    for y in p.elements:
        print(f"  level {y.level}: {y}")
    if args.homology and x != z:
        inner = order_complex(open_interval(x, z))
        print("open interval:")
        for line in _homology_lines(inner) or ["empty"]:
            print("  " + line)
    return EXIT_OK


def cmd_truncate(args) -> int:
    c = truncated_subcomplex(args.max_leaves, args.max_level)
    if args.dot:
        sys.stdout.write(to_dot(c, "truncation"))
        return EXIT_OK
    print(f"truncated Stein complex, leaves <= {args.max_leaves}, level <= {args.max_level} "
          f"(inspection only)")
    for line in f_vector_lines(c):
        print(line)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max_n < 5:
        raise UsageError("--max-n must be at least 5")

    if args.json:
        _write_json(args.json, {})  # fail before the long run if the path is unwritable

    def progress(r):
        print(f"[{r.status:4}] {r.name:40} {r.elapsed_ms:9.1f} ms  {r.details}")

    report = run_battery(args.max_n, args.seed, progress)
    s = report.summary()
    print(f"{s['pass']} passed, {s['fail']} failed, {s['skipped']} skipped")
    if args.json:
        _write_json(args.json, report.to_json())
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="thompsonf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mul", help="multiply two elements [Tree,Tree]")
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("inv", help="invert an element [Tree,Tree]")
    p.add_argument("element")
    p.set_defaults(func=cmd_inv)

    p = sub.add_parser("relations", help="check x_j x_i = x_i x_{j+1} for i < j <= MAX_J")
    p.add_argument("max_j", type=int)
    p.add_argument("--json")
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("desclink", help="descending link of a level-N vertex")
    p.add_argument("n", type=int)
    p.add_argument("--homology", action="store_true")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--json")
    p.set_defaults(func=cmd_desclink)

    p = sub.add_parser("matching", help="connectivity report for M(L_N)")
    p.add_argument("n", type=int)
    p.add_argument("--homology", action="store_true")
    p.add_argument("--json")
    p.set_defaults(func=cmd_matching)

    p = sub.add_parser("interval", help="closed interval between vertices [Forest|Forest]")
    p.add_argument("x")
    p.add_argument("z")
    p.add_argument("--homology", action="store_true")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_interval)

    p = sub.add_parser("truncate", help="bounded piece of the Stein complex (inspection only)")
    p.add_argument("--max-leaves", type=int, default=3)
    p.add_argument("--max-level", type=int, default=3)
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_truncate)

    p = sub.add_parser("verify", help="run the full verification battery")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--json")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", 0) < 0:
        parser.error("--seed must be non-negative")
    try:
        return args.func(args)
    except (ParseError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IOError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
