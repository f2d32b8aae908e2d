"""``bcc``: validate configurations, build quivers, and compute centers."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .algebra import build_table, dim_vv_enumerated, dim_vv_formula
from .battery import random_suite_config, run_battery
from .center import HypothesisError, verify_theorem
from .configuration import (
    ConfigSyntaxError,
    GenerationError,
    classify_vertices,
    natural_key,
    generate_random,
    is_connected,
    is_reduced,
    parse_config,
    serialize,
    validate,
)
from .exactla import FieldSpec, default_field
from .families import EXAMPLES, example
from .quiver import build_quiver, count_loops, to_dot
from .relations import relations_text

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _load(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_config(text)
    except (ConfigSyntaxError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def _require_valid(cfg) -> None:
    report = validate(cfg)
    if not report.ok:
        lines = [f"{v.code}: {v.message}" for v in report.violations]
        raise HypothesisError("invalid configuration\n" + "\n".join(lines))


def _field(args) -> FieldSpec:
    try:
        return FieldSpec.parse(args.field) if args.field else default_field()
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_validate(args) -> int:
    cfg = _load(args.file)
    report = validate(cfg)
    for v in report.violations:
        print(f"{v.code}: {v.message}")
    if report.ok:
        if not is_reduced(cfg):
            print("reduced: not reduced (center formula does not apply)")
        if not is_connected(cfg):
            print("connected: not connected (center formula does not apply)")
        print("valid")
        return EXIT_OK
    return EXIT_FAIL


def cmd_quiver(args) -> int:
    cfg = _load(args.file)
    _require_valid(cfg)
    q = build_quiver(cfg)
    if args.dot:
        sys.stdout.write(to_dot(q))
        return EXIT_OK
    if args.relations:
        sys.stdout.write(relations_text(q))
        return EXIT_OK
    print(f"vertices: {' '.join(q.vertices)}")
    print(f"arrows: {len(q.arrows)}")
    for arrow in q.arrows:
        print(f"  {arrow.label}: {arrow.source} -> {arrow.target}")
    print(f"loops: {count_loops(q)}")
    return EXIT_OK


def cmd_dims(args) -> int:
    cfg = _load(args.file)
    _require_valid(cfg)
    table = build_table(build_quiver(cfg))
    agree = True
    for p in cfg.polygons:
        f, e = dim_vv_formula(cfg, p.name), dim_vv_enumerated(table, p.name)
        agree &= f == e
        print(f"{p.name}: formula {f} enumerated {e}")
    print(f"dim: {table.dim}")
    print(f"agree: {'yes' if agree else 'NO'}")
    return EXIT_OK if agree else EXIT_FAIL


def cmd_center(args) -> int:
    cfg = _load(args.file)
    report = verify_theorem(cfg, _field(args), oracle=not args.no_oracle)
    if args.json:
        print(report.to_json())
    else:
        sys.stdout.write(report.to_text(basis=args.basis))
    return EXIT_OK if report.success else EXIT_FAIL


def _verify_one(job):
    seed, max_polygons, max_size, max_mult, max_val = job
    try:
        cfg = random_suite_config(seed, max_polygons, max_size, max_mult, max_val)
    except GenerationError as exc:
        return seed, False, [f"generation: {exc}"]
    res = run_battery(cfg)
    return seed, res.ok, [f"{c.name} {c.detail}".strip() for c in res.failures()]


def cmd_verify(args) -> int:
    if args.count < 0:
        raise UsageError("--count must be nonnegative")
    jobs = [(args.seed + i, args.max_polygons, args.max_size, args.max_mult, args.max_val) for i in range(args.count)]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_verify_one, jobs))
    else:
        results = [_verify_one(j) for j in jobs]
    results.sort(key=lambda r: r[0])
    failed = [r for r in results if not r[1]]
    for seed, _, fails in failed:
        print(f"FAIL seed={seed}: " + "; ".join(fails[:5]))
    print(f"{len(results) - len(failed)}/{len(results)} pass")
    return EXIT_OK if not failed else EXIT_FAIL


def cmd_gen(args) -> int:
    if args.example:
        try:
            cfg = example(args.example)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        try:
            cfg = generate_random(args.polygons, args.max_size, args.max_mult, args.seed, max_valency=args.max_val)
        except (GenerationError, ValueError) as exc:
            raise UsageError(str(exc)) from None
    text = serialize(cfg)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.output}: {exc.strerror}") from None
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_report(args) -> int:
    cfg = _load(args.file)
    _require_valid(cfg)
    q = build_quiver(cfg)
    table = build_table(q)
    cls = classify_vertices(cfg)
    doc = {
        "classification": {
            "truncated": sorted(cls.truncated, key=natural_key),
            "val_one_mult_big": sorted(cls.val_one_mult_big, key=natural_key),
            "multi_big": sorted(cls.multi_big, key=natural_key),
            "multi_one": sorted(cls.multi_one, key=natural_key),
        },
        "reduced": is_reduced(cfg),
        "connected": is_connected(cfg),
        "q1_count": len(q.arrows),
        "loops": count_loops(q),
        "dim_algebra": table.dim,
        "polygon_dims": {p.name: dim_vv_enumerated(table, p.name) for p in cfg.polygons},
    }
    status = EXIT_OK
    if doc["reduced"] and doc["connected"]:
        rep = verify_theorem(cfg, _field(args))
        doc["center_dim"] = rep.dim_oracle
        doc["center"] = rep.to_dict()
        if not rep.success:
            status = EXIT_FAIL
    else:
        doc["center_dim"] = None
    print(json.dumps(doc, indent=2, sort_keys=True))
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bcc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check conditions C1-C3 and the orientation")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("quiver", help="print the induced quiver")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    g.add_argument("--relations", action="store_true", help="list the defining relations")
    p.set_defaults(func=cmd_quiver)

    p = sub.add_parser("dims", help="dim vΛv per polygon, by formula and by enumeration")
    p.add_argument("file")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("center", help="dimension and basis of the center")
    p.add_argument("file")
    p.add_argument("--field", help="q (default) or p=<prime>; overrides BCC_FIELD")
    p.add_argument("--basis", action="store_true", help="print the basis elements")
    p.add_argument("--no-oracle", action="store_true", help="skip the kernel computation")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_center)

    p = sub.add_parser("verify", help="run the invariant battery on random configurations")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-polygons", type=int, default=8)
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--max-mult", type=int, default=3)
    p.add_argument("--max-val", type=int, default=6)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a named example or a random configuration")
    p.add_argument("--example", help="one of: " + ", ".join(EXAMPLES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--polygons", type=int, default=4)
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--max-mult", type=int, default=3)
    p.add_argument("--max-val", type=int, default=None)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("report", help="JSON summary of a configuration")
    p.add_argument("file")
    p.add_argument("--field")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HypothesisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
